#include "dijklab/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "dijklab/oracle.hpp"
#include "dijklab/run.hpp"

namespace dijklab::bench {

void check_spec(const GraphSpec& spec) {
  const auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); };
  if (spec.n < 1) bad("n must be >= 1");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) bad("density must lie in [0,1]");
  if (!(spec.tie_bias >= 0.0 && spec.tie_bias <= 1.0)) bad("tie_bias must lie in [0,1]");
  if (spec.weight_lo < 1) bad("weight lower bound must be >= 1");
  if (spec.weight_hi < spec.weight_lo) bad("weight upper bound below lower bound");
}

Graph<Scalar> generate_graph(const GraphSpec& spec, std::uint64_t index) {
  check_spec(spec);
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::bernoulli_distribution has_arc(spec.density);
  std::bernoulli_distribution tied(spec.tie_bias);
  std::uniform_int_distribution<std::int64_t> weight(spec.weight_lo, spec.weight_hi);

  const auto n = static_cast<Eigen::Index>(spec.n);
  WeightMatrix<Scalar> d = WeightMatrix<Scalar>::Constant(n, n, SentinelTraits<Scalar>::encoded());
  d.diagonal().setZero();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j || !has_arc(rng)) continue;
      // Both draws always happen so the stream layout is independent of tie_bias outcomes.
      const bool force_lo = tied(rng);
      const std::int64_t w = weight(rng);
      d(i, j) = static_cast<Scalar>(force_lo ? spec.weight_lo : w);
    }
  }
  return Graph<Scalar>(std::move(d));
}

const StrategyOutcome& ComparisonRecord::outcome(SelectionStrategy s) const {
  for (const auto& o : outcomes) {
    if (o.strategy == s) return o;
  }
  throw std::out_of_range("no outcome for strategy");
}

ComparisonRecord compare(const Graph<Scalar>& g, VertexId source, std::optional<VertexId> target,
                         std::size_t spec_index, std::uint64_t graph_index) {
  require_vertex(g, source, "source");
  if (target) require_vertex(g, *target, "target");

  ComparisonRecord record;
  record.spec_index = spec_index;
  record.graph_index = graph_index;
  record.n = g.size();
  record.source = source;
  record.target = target;
  record.oracle_distances = bellman_ford(g, source).distances;

  for (std::size_t k = 0; k < kStrategies.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    const RunTrace<Scalar> trace = run_labeling(g, source, kStrategies[k], RunOptions{target, false});
    const auto stop = std::chrono::steady_clock::now();

    StrategyOutcome& out = record.outcomes[k];
    out.strategy = kStrategies[k];
    out.distances = trace.final_distances;
    out.rounds = trace.rounds_count;
    out.rounds_incl_source = trace.rounds_count_incl_source;
    out.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    for (const auto& round : trace.rounds) {
      out.batch_sizes.push_back(static_cast<int>(round.newly_permanent.size()));
      out.settled += out.batch_sizes.back();
    }
    out.agrees_oracle = out.distances == record.oracle_distances;
  }
  record.stable_batch_unsound = !record.outcome(SelectionStrategy::StableBatch).agrees_oracle;
  return record;
}

Aggregates aggregate(const std::vector<ComparisonRecord>& records) {
  Aggregates agg;
  if (records.empty()) return agg;
  for (std::size_t k = 0; k < kStrategies.size(); ++k) {
    StrategyAggregate s;
    s.strategy = kStrategies[k];
    s.min_rounds = records.front().outcomes[k].rounds;
    s.max_rounds = s.min_rounds;
    long long total = 0;
    for (const auto& r : records) {
      const auto& o = r.outcomes[k];
      total += o.rounds;
      s.min_rounds = std::min(s.min_rounds, o.rounds);
      s.max_rounds = std::max(s.max_rounds, o.rounds);
      if (o.agrees_oracle) ++s.agreeing;
    }
    const auto count = static_cast<double>(records.size());
    s.mean_rounds = static_cast<double>(total) / count;
    s.agreement_rate = static_cast<double>(s.agreeing) / count;
    agg.per_strategy.push_back(s);
  }
  for (const auto& r : records) {
    if (r.stable_batch_unsound) ++agg.unsound_stable_batch;
  }
  return agg;
}

RunReport run_suite(const std::vector<GraphSpec>& specs, std::size_t graphs_per_spec, const EndpointPolicy& policy,
                    unsigned threads) {
  for (const auto& spec : specs) {
    check_spec(spec);
    if (!VertexId(policy.source).valid_for(spec.n)) {
      throw Error(ErrorKind::VertexOutOfRange, "source " + std::to_string(policy.source) + " outside 1.." +
                                                   std::to_string(spec.n));
    }
  }

  RunReport report;
  report.specs = specs;
  report.graphs_per_spec = graphs_per_spec;
  report.policy = policy;

  const std::size_t total = specs.size() * graphs_per_spec;
  report.records.resize(total);

  // Slot k always holds (spec k / per, graph k % per), so scheduling order
  // never leaks into the report.
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto work = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      try {
        const std::size_t spec_index = k / graphs_per_spec;
        const std::uint64_t graph_index = k % graphs_per_spec;
        const GraphSpec& spec = specs[spec_index];
        const Graph<Scalar> g = generate_graph(spec, graph_index);
        const std::optional<VertexId> target =
            policy.target_last ? std::optional<VertexId>(VertexId::from_index(spec.n - 1)) : std::nullopt;
        report.records[k] = compare(g, VertexId(policy.source), target, spec_index, graph_index);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next = total;
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (first_error) std::rethrow_exception(first_error);

  report.aggregates = aggregate(report.records);
  return report;
}

}  // namespace dijklab::bench
