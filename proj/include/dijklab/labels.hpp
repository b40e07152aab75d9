#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dijklab/graph.hpp"

namespace dijklab {

enum class LabelStatus { Temporary, Permanent };

/// How the selection step picks the vertices to make permanent.
///   SingleMin   - one vertex, the lowest id among those at the minimum.
///   TieBatch    - every vertex at the minimum.
///   StableBatch - every vertex at the minimum, plus every finite-labelled
///                 temporary vertex the last relaxation did not improve.
///                 Experimental: not a correct shortest-path rule in general.
enum class SelectionStrategy { SingleMin, TieBatch, StableBatch };

constexpr std::string_view to_string(SelectionStrategy s) {
  switch (s) {
    case SelectionStrategy::SingleMin: return "singlemin";
    case SelectionStrategy::TieBatch: return "tiebatch";
    case SelectionStrategy::StableBatch: return "stablebatch";
  }
  return "unknown";
}

constexpr std::string_view to_string(LabelStatus s) {
  return s == LabelStatus::Permanent ? "permanent" : "temporary";
}

template <WeightScalar Scalar>
struct VertexLabel {
  Weight<Scalar> value = Weight<Scalar>::infinity();
  VertexSet predecessors;
  LabelStatus status = LabelStatus::Temporary;
  std::optional<int> settled_round;

  bool permanent() const noexcept { return status == LabelStatus::Permanent; }

  /// Lowest-id predecessor, if any.
  std::optional<VertexId> primary_predecessor() const {
    if (predecessors.empty()) return std::nullopt;
    return *predecessors.begin();
  }

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

template <WeightScalar Scalar>
class LabelState {
 public:
  LabelState() = default;
  LabelState(std::size_t n, VertexId source) : labels_(n), source_(source) {}

  std::size_t size() const noexcept { return labels_.size(); }
  VertexId source() const noexcept { return source_; }

  VertexLabel<Scalar>& operator[](VertexId v) { return labels_.at(v.index()); }
  const VertexLabel<Scalar>& operator[](VertexId v) const { return labels_.at(v.index()); }

  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }

  VertexSet permanent_set() const {
    VertexSet out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].permanent()) out.insert(VertexId::from_index(i));
    }
    return out;
  }

  bool all_permanent() const noexcept {
    for (const auto& l : labels_) {
      if (!l.permanent()) return false;
    }
    return true;
  }

  std::vector<Weight<Scalar>> values() const {
    std::vector<Weight<Scalar>> out;
    out.reserve(labels_.size());
    for (const auto& l : labels_) out.push_back(l.value);
    return out;
  }

  friend bool operator==(const LabelState&, const LabelState&) = default;

 private:
  std::vector<VertexLabel<Scalar>> labels_;
  VertexId source_;
};

/// Source permanent at 0, everything else temporary at INFINITY.
template <WeightScalar Scalar>
LabelState<Scalar> init_labels(const Graph<Scalar>& g, VertexId source) {
  require_vertex(g, source, "source");
  LabelState<Scalar> labels(g.size(), source);
  auto& s = labels[source];
  s.value = Weight<Scalar>(0);
  s.status = LabelStatus::Permanent;
  s.settled_round = 0;
  return labels;
}

/// In-place form of relax_step; returns the vertices whose value strictly
/// decreased. An equal-valued alternative through a frontier vertex adds
/// that vertex to the predecessor set without counting as a change.
template <WeightScalar Scalar>
VertexSet relax_in_place(const Graph<Scalar>& g, LabelState<Scalar>& labels, const VertexSet& frontier) {
  for (VertexId i : frontier) {
    require_vertex(g, i, "frontier");
    if (!labels[i].permanent()) {
      throw Error(ErrorKind::FrontierNotPermanent, "frontier vertex " + to_string(i) + " is not permanent");
    }
  }
  VertexSet changed;
  if (frontier.empty()) return changed;

  for (std::size_t jdx = 0; jdx < g.size(); ++jdx) {
    const VertexId j = VertexId::from_index(jdx);
    auto& target = labels[j];
    if (target.permanent()) continue;

    Weight<Scalar> best = Weight<Scalar>::infinity();
    VertexSet via;
    for (VertexId i : frontier) {
      const Weight<Scalar> candidate = saturating_add(labels[i].value, g.weight(i, j));
      if (candidate.is_infinite()) continue;
      if (candidate < best) {
        best = candidate;
        via = {i};
      } else if (candidate == best) {
        via.insert(i);
      }
    }
    if (best.is_infinite()) continue;
    if (best < target.value) {
      target.value = best;
      target.predecessors = std::move(via);
      changed.insert(j);
    } else if (best == target.value) {
      target.predecessors.insert(via.begin(), via.end());
    }
  }
  return changed;
}

template <WeightScalar Scalar>
struct RelaxOutcome {
  LabelState<Scalar> labels;
  VertexSet changed;
};

/// Relaxes every temporary vertex from every vertex of the frontier:
/// value(j) = min(value(j), min_i value(i) + d_ij).
template <WeightScalar Scalar>
RelaxOutcome<Scalar> relax_step(const Graph<Scalar>& g, LabelState<Scalar> labels, const VertexSet& frontier) {
  VertexSet changed = relax_in_place(g, labels, frontier);
  return {std::move(labels), std::move(changed)};
}

/// Picks and marks permanent the next vertices per `strategy`, recording
/// `round` as their settled round. Empty when no temporary vertex has a
/// finite value.
template <WeightScalar Scalar>
VertexSet select_permanent(LabelState<Scalar>& labels, SelectionStrategy strategy, const VertexSet& changed,
                           int round) {
  std::optional<Weight<Scalar>> minimum;
  for (const auto& l : labels) {
    if (l.permanent() || l.value.is_infinite()) continue;
    if (!minimum || l.value < *minimum) minimum = l.value;
  }
  VertexSet chosen;
  if (!minimum) return chosen;

  for (std::size_t idx = 0; idx < labels.size(); ++idx) {
    const VertexId v = VertexId::from_index(idx);
    const auto& l = labels[v];
    if (l.permanent() || l.value.is_infinite()) continue;
    const bool at_minimum = l.value == *minimum;
    bool take = false;
    switch (strategy) {
      case SelectionStrategy::SingleMin: take = at_minimum && chosen.empty(); break;
      case SelectionStrategy::TieBatch: take = at_minimum; break;
      case SelectionStrategy::StableBatch: take = at_minimum || !changed.contains(v); break;
    }
    if (take) chosen.insert(v);
  }
  for (VertexId v : chosen) {
    labels[v].status = LabelStatus::Permanent;
    labels[v].settled_round = round;
  }
  return chosen;
}

}  // namespace dijklab
