#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dijklab/graph.hpp"
#include "dijklab/labels.hpp"

namespace dijklab::bench {

using Scalar = double;

/// Parameters of one random-digraph family. Each ordered pair i != j carries
/// an arc with probability `density`; arc weights are integers in
/// [weight_lo, weight_hi], forced to weight_lo with probability `tie_bias`.
struct GraphSpec {
  std::size_t n = 8;
  double density = 0.5;
  std::int64_t weight_lo = 1;
  std::int64_t weight_hi = 9;
  double tie_bias = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// Throws Error(InvalidSpec) naming the offending field.
void check_spec(const GraphSpec& spec);

/// Deterministic in (spec, index).
Graph<Scalar> generate_graph(const GraphSpec& spec, std::uint64_t index);

inline constexpr std::array<SelectionStrategy, 3> kStrategies{
    SelectionStrategy::SingleMin, SelectionStrategy::TieBatch, SelectionStrategy::StableBatch};

struct StrategyOutcome {
  SelectionStrategy strategy = SelectionStrategy::SingleMin;
  std::vector<Weight<Scalar>> distances;
  std::vector<int> batch_sizes;  // newly-permanent count per round
  int rounds = 0;
  int rounds_incl_source = 1;
  int settled = 0;  // non-source vertices made permanent
  double elapsed_ms = 0.0;
  bool agrees_oracle = false;
};

struct ComparisonRecord {
  std::size_t spec_index = 0;
  std::uint64_t graph_index = 0;
  std::size_t n = 0;
  VertexId source;
  std::optional<VertexId> target;
  std::vector<Weight<Scalar>> oracle_distances;
  std::array<StrategyOutcome, 3> outcomes;  // ordered as kStrategies
  bool stable_batch_unsound = false;

  const StrategyOutcome& outcome(SelectionStrategy s) const;
};

/// Runs every strategy to full settlement plus Bellman-Ford on one graph.
ComparisonRecord compare(const Graph<Scalar>& g, VertexId source, std::optional<VertexId> target = std::nullopt,
                         std::size_t spec_index = 0, std::uint64_t graph_index = 0);

struct EndpointPolicy {
  int source = 1;
  bool target_last = false;  // target = vertex n

  friend bool operator==(const EndpointPolicy&, const EndpointPolicy&) = default;
};

struct StrategyAggregate {
  SelectionStrategy strategy = SelectionStrategy::SingleMin;
  double mean_rounds = 0.0;
  int min_rounds = 0;
  int max_rounds = 0;
  std::size_t agreeing = 0;
  double agreement_rate = 0.0;

  friend bool operator==(const StrategyAggregate&, const StrategyAggregate&) = default;
};

struct Aggregates {
  std::vector<StrategyAggregate> per_strategy;  // empty when there are no records
  std::size_t unsound_stable_batch = 0;

  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

struct RunReport {
  std::vector<GraphSpec> specs;
  std::size_t graphs_per_spec = 0;
  EndpointPolicy policy;
  std::vector<ComparisonRecord> records;  // sorted by (spec_index, graph_index)
  Aggregates aggregates;
};

Aggregates aggregate(const std::vector<ComparisonRecord>& records);

/// Generates and compares graphs_per_spec graphs for every spec. `threads`
/// of 0 picks the hardware concurrency; output does not depend on it.
RunReport run_suite(const std::vector<GraphSpec>& specs, std::size_t graphs_per_spec,
                    const EndpointPolicy& policy = {}, unsigned threads = 0);

}  // namespace dijklab::bench
