#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dijklab/io.hpp"
#include "dijklab/run.hpp"

namespace dijklab {

/// Shortest-path-tree matrix: entry (i, j) holds d_ij when i is j's parent
/// in the tree, 0 otherwise. Every column has at most one nonzero.
template <WeightScalar Scalar>
struct TreeMatrix {
  WeightMatrix<Scalar> entries;
  VertexId source;

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries.rows()); }

  std::optional<VertexId> parent(VertexId child) const {
    const auto col = static_cast<Eigen::Index>(child.index());
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
      if (entries(i, col) != Scalar(0)) return VertexId::from_index(static_cast<std::size_t>(i));
    }
    return std::nullopt;
  }
};

template <WeightScalar Scalar>
struct Path {
  std::vector<VertexId> vertices;  // source first; empty when unreachable
  Weight<Scalar> total = Weight<Scalar>::infinity();

  bool empty() const noexcept { return vertices.empty(); }
};

/// Parent of each settled non-source vertex is its lowest-id recorded
/// predecessor. With `strict`, a requested target that never settled is an
/// error; otherwise unreached vertices just have no parent.
template <WeightScalar Scalar>
TreeMatrix<Scalar> build_tree_matrix(const Graph<Scalar>& g, const RunTrace<Scalar>& trace, bool strict = false) {
  const auto n = static_cast<Eigen::Index>(g.size());
  if (trace.final_labels.size() != g.size()) {
    throw std::invalid_argument("trace does not belong to this graph");
  }
  if (strict && trace.target && !trace.final_labels[*trace.target].permanent()) {
    throw Error(ErrorKind::UnsettledVertex, "target " + to_string(*trace.target) + " was never settled");
  }
  TreeMatrix<Scalar> tree{WeightMatrix<Scalar>::Zero(n, n), trace.source};
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const VertexId child = VertexId::from_index(idx);
    if (child == trace.source) continue;
    const auto& label = trace.final_labels[child];
    if (!label.permanent()) continue;
    const auto parent = label.primary_predecessor();
    if (!parent) continue;
    tree.entries(static_cast<Eigen::Index>(parent->index()), static_cast<Eigen::Index>(idx)) =
        g.weight(*parent, child).value();
  }
  return tree;
}

/// Walks parent links from `target` back to the source.
template <WeightScalar Scalar>
Path<Scalar> extract_path(const TreeMatrix<Scalar>& tree, VertexId target) {
  if (!target.valid_for(tree.size())) {
    throw Error(ErrorKind::VertexOutOfRange,
                "target vertex " + to_string(target) + " outside 1.." + std::to_string(tree.size()));
  }
  Path<Scalar> path;
  std::vector<VertexId> reversed{target};
  Weight<Scalar> total(0);
  VertexId at = target;
  while (at != tree.source) {
    const auto parent = tree.parent(at);
    if (!parent || reversed.size() > tree.size()) return path;
    total = saturating_add(total, Weight<Scalar>(
        tree.entries(static_cast<Eigen::Index>(parent->index()), static_cast<Eigen::Index>(at.index()))));
    reversed.push_back(*parent);
    at = *parent;
  }
  path.vertices.assign(reversed.rbegin(), reversed.rend());
  path.total = total;
  return path;
}

/// Route notation `1-2-3-6-8 (8)`; `unreachable (INF)` for an empty path.
template <WeightScalar Scalar>
std::string to_string(const Path<Scalar>& path) {
  if (path.empty()) return "unreachable (INF)";
  std::string out;
  for (std::size_t k = 0; k < path.vertices.size(); ++k) {
    if (k > 0) out += '-';
    out += to_string(path.vertices[k]);
  }
  return out + " (" + detail::format_scalar(path.total.value()) + ")";
}

}  // namespace dijklab
