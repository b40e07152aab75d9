#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dijklab/graph.hpp"

namespace dijklab {

enum class OracleMethod { BellmanFord, Enumeration };

template <WeightScalar Scalar>
struct OracleResult {
  std::vector<Weight<Scalar>> distances;
  OracleMethod method = OracleMethod::BellmanFord;

  Weight<Scalar> distance(VertexId v) const { return distances.at(v.index()); }
};

/// Edge-sweep Bellman-Ford. Stops early once a sweep changes nothing;
/// never runs more than n-1 sweeps.
template <WeightScalar Scalar>
OracleResult<Scalar> bellman_ford(const Graph<Scalar>& g, VertexId source) {
  require_vertex(g, source, "source");
  const std::size_t n = g.size();
  std::vector<Weight<Scalar>> dist(n, Weight<Scalar>::infinity());
  dist[source.index()] = Weight<Scalar>(0);
  for (std::size_t sweep = 0; sweep + 1 < n; ++sweep) {
    bool updated = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (dist[u].is_infinite()) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        const auto w = g.weight(VertexId::from_index(u), VertexId::from_index(v));
        if (w.is_infinite()) continue;
        const auto through = saturating_add(dist[u], w);
        if (through < dist[v]) {
          dist[v] = through;
          updated = true;
        }
      }
    }
    if (!updated) break;
  }
  return {std::move(dist), OracleMethod::BellmanFord};
}

inline constexpr std::size_t kEnumerationLimit = 12;

namespace detail {

/// Depth-first walk over every simple path leaving the source. `visit` is
/// called with the current path and its length for each path prefix.
template <WeightScalar Scalar, typename Visit>
void for_each_simple_path(const Graph<Scalar>& g, std::vector<VertexId>& path, std::vector<bool>& on_path,
                          Weight<Scalar> length, Visit& visit) {
  visit(path, length);
  const VertexId tail = path.back();
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (on_path[v]) continue;
    const VertexId next = VertexId::from_index(v);
    const auto w = g.weight(tail, next);
    if (w.is_infinite()) continue;
    on_path[v] = true;
    path.push_back(next);
    for_each_simple_path(g, path, on_path, saturating_add(length, w), visit);
    path.pop_back();
    on_path[v] = false;
  }
}

template <WeightScalar Scalar>
void require_enumerable(const Graph<Scalar>& g) {
  if (g.size() > kEnumerationLimit) {
    throw Error(ErrorKind::GraphTooLarge, "exhaustive enumeration limited to n <= " +
                                              std::to_string(kEnumerationLimit) + ", got " +
                                              std::to_string(g.size()));
  }
}

}  // namespace detail

/// Minimum over all simple source->target paths, with one witness path.
/// Returns (INFINITY, nullopt) when the target is unreachable.
template <WeightScalar Scalar>
std::pair<Weight<Scalar>, std::optional<std::vector<VertexId>>> enumerate_min_path(const Graph<Scalar>& g,
                                                                                   VertexId source,
                                                                                   VertexId target) {
  require_vertex(g, source, "source");
  require_vertex(g, target, "target");
  detail::require_enumerable(g);

  Weight<Scalar> best = Weight<Scalar>::infinity();
  std::optional<std::vector<VertexId>> witness;
  auto visit = [&](const std::vector<VertexId>& path, Weight<Scalar> length) {
    if (path.back() == target && length < best) {
      best = length;
      witness = path;
    }
  };
  std::vector<VertexId> path{source};
  std::vector<bool> on_path(g.size(), false);
  on_path[source.index()] = true;
  detail::for_each_simple_path(g, path, on_path, Weight<Scalar>(0), visit);
  return {best, std::move(witness)};
}

/// All single-source distances from one exhaustive walk.
template <WeightScalar Scalar>
OracleResult<Scalar> enumerate_distances(const Graph<Scalar>& g, VertexId source) {
  require_vertex(g, source, "source");
  detail::require_enumerable(g);

  std::vector<Weight<Scalar>> dist(g.size(), Weight<Scalar>::infinity());
  auto visit = [&](const std::vector<VertexId>& path, Weight<Scalar> length) {
    auto& d = dist[path.back().index()];
    if (length < d) d = length;
  };
  std::vector<VertexId> path{source};
  std::vector<bool> on_path(g.size(), false);
  on_path[source.index()] = true;
  detail::for_each_simple_path(g, path, on_path, Weight<Scalar>(0), visit);
  return {std::move(dist), OracleMethod::Enumeration};
}

}  // namespace dijklab
