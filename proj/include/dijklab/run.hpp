#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "dijklab/labels.hpp"

namespace dijklab {

enum class Algorithm { Classic, Modified };

constexpr std::string_view to_string(Algorithm a) {
  return a == Algorithm::Classic ? "classic" : "modified";
}

template <WeightScalar Scalar>
struct RoundRecord {
  int round_index = 0;
  VertexSet frontier;                  // relaxed-from vertices
  LabelState<Scalar> label_snapshot;   // after relax + select
  VertexSet newly_permanent;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

template <WeightScalar Scalar>
struct RunTrace {
  Algorithm algorithm = Algorithm::Classic;
  SelectionStrategy strategy = SelectionStrategy::SingleMin;
  VertexId source;
  std::optional<VertexId> target;
  std::vector<RoundRecord<Scalar>> rounds;
  LabelState<Scalar> final_labels;
  std::vector<Weight<Scalar>> final_distances;
  int rounds_count = 0;
  int rounds_count_incl_source = 1;
  bool terminated_early = false;  // stopped at the target with temporaries left

  Weight<Scalar> distance(VertexId v) const { return final_distances.at(v.index()); }

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

struct RunOptions {
  std::optional<VertexId> target;
  bool stop_at_target = false;
};

/// Alternates relaxation from the last batch of permanent vertices with
/// selection under `strategy`, one RoundRecord per repetition, until every
/// vertex is permanent, no finite temporary label remains, or (optionally)
/// the target becomes permanent.
template <WeightScalar Scalar>
RunTrace<Scalar> run_labeling(const Graph<Scalar>& g, VertexId source, SelectionStrategy strategy,
                              const RunOptions& options = {}) {
  require_vertex(g, source, "source");
  if (options.target) require_vertex(g, *options.target, "target");

  RunTrace<Scalar> trace;
  trace.algorithm = strategy == SelectionStrategy::SingleMin ? Algorithm::Classic : Algorithm::Modified;
  trace.strategy = strategy;
  trace.source = source;
  trace.target = options.target;

  LabelState<Scalar> labels = init_labels(g, source);
  VertexSet frontier{source};
  const auto target_settled = [&] {
    return options.stop_at_target && options.target && labels[*options.target].permanent();
  };

  int round = 0;
  while (!labels.all_permanent() && !target_settled()) {
    const int next = round + 1;
    const VertexSet changed = relax_in_place(g, labels, frontier);
    VertexSet settled = select_permanent(labels, strategy, changed, next);
    if (settled.empty()) break;
    round = next;
    trace.rounds.push_back({round, frontier, labels, settled});
    frontier = std::move(settled);
  }

  trace.terminated_early = target_settled() && !labels.all_permanent();
  trace.rounds_count = round;
  trace.rounds_count_incl_source = round + 1;
  trace.final_distances = labels.values();
  trace.final_labels = std::move(labels);
  return trace;
}

/// Label-setting Dijkstra: one vertex made permanent per round.
template <WeightScalar Scalar>
RunTrace<Scalar> run_classic(const Graph<Scalar>& g, VertexId source, std::optional<VertexId> target = std::nullopt,
                             bool stop_at_target = false) {
  return run_labeling(g, source, SelectionStrategy::SingleMin, RunOptions{target, stop_at_target});
}

/// Batched variant; relaxation in each round runs from the whole previous batch.
template <WeightScalar Scalar>
RunTrace<Scalar> run_modified(const Graph<Scalar>& g, VertexId source, std::optional<VertexId> target,
                              bool stop_at_target, SelectionStrategy strategy) {
  if (strategy == SelectionStrategy::SingleMin) {
    throw std::invalid_argument("run_modified needs a batching strategy");
  }
  return run_labeling(g, source, strategy, RunOptions{target, stop_at_target});
}

}  // namespace dijklab
