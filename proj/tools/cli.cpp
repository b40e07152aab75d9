#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dijklab/bench.hpp"
#include "dijklab/io.hpp"
#include "dijklab/oracle.hpp"
#include "dijklab/path_tree.hpp"
#include "dijklab/render.hpp"
#include "dijklab/run.hpp"

namespace dijklab::cli {

namespace {

const std::map<std::string, SelectionStrategy> kAlgos{{"classic", SelectionStrategy::SingleMin},
                                                      {"tiebatch", SelectionStrategy::TieBatch},
                                                      {"stablebatch", SelectionStrategy::StableBatch}};

struct Options {
  std::string file;
  int source = 0;
  std::optional<int> target;
  std::string algo = "classic";
  bool stop_at_target = false;
  std::string format = "text";

  std::size_t nodes = 0;
  double density = 0.0;
  std::size_t graphs = 0;
  std::uint64_t seed = 0;
  double tie_bias = 0.0;
  std::string weights;
  std::string out_file;
  std::string report_format = "json";
  unsigned threads = 0;
  bool timing = false;
};

std::optional<VertexId> target_of(const Options& o) {
  return o.target ? std::optional<VertexId>(VertexId(*o.target)) : std::nullopt;
}

/// Stderr note for the experimental strategy, plus its oracle verdict.
void stable_batch_notice(const Graph<double>& g, const RunTrace<double>& trace, std::ostream& err) {
  err << "note: stablebatch is experimental and oracle-checked; its distances can be wrong\n";
  const auto oracle = bellman_ford(g, trace.source);
  std::string wrong;
  for (std::size_t i = 0; i < oracle.distances.size(); ++i) {
    if (!(oracle.distances[i] == trace.final_distances[i])) wrong += " " + std::to_string(i + 1);
  }
  if (wrong.empty()) {
    err << "oracle check: agrees with Bellman-Ford\n";
  } else {
    err << "oracle check: DISAGREES with Bellman-Ford at vertices" << wrong << "\n";
  }
}

int cmd_trace(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = read_graph_file<double>(o.file);
  const auto strategy = kAlgos.at(o.algo);
  const auto trace = run_labeling(g, VertexId(o.source), strategy, RunOptions{target_of(o), o.stop_at_target});
  if (o.format == "structured") {
    out << trace_to_json(trace).dump(2) << "\n";
  } else {
    out << render_trace_text(trace);
  }
  if (strategy == SelectionStrategy::StableBatch) stable_batch_notice(g, trace, err);
  return kExitOk;
}

int cmd_path(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = read_graph_file<double>(o.file);
  const auto strategy = kAlgos.at(o.algo);
  const VertexId target(*o.target);
  const auto trace = run_labeling(g, VertexId(o.source), strategy, RunOptions{target, false});
  const auto tree = build_tree_matrix(g, trace);
  const auto path = extract_path(tree, target);
  out << "route: " << to_string(path) << "\n";
  out << "distance: " << format_distance(path.total) << "\n";
  out << "tree matrix:\n" << render_tree_matrix(tree);
  if (strategy == SelectionStrategy::StableBatch) stable_batch_notice(g, trace, err);
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = read_graph_file<double>(o.file);
  const auto record = bench::compare(g, VertexId(o.source), target_of(o));
  out << fmt::format("{:<12} {:>6} {:>18} {:>13}", "strategy", "rounds", "rounds_incl_source", "agrees_oracle");
  if (record.target) out << fmt::format(" {:>10}", "target");
  out << "\n";
  for (const auto& oc : record.outcomes) {
    out << fmt::format("{:<12} {:>6} {:>18} {:>13}", to_string(oc.strategy), oc.rounds, oc.rounds_incl_source,
                       oc.agrees_oracle ? "yes" : "no");
    if (record.target) out << fmt::format(" {:>10}", format_distance(oc.distances[record.target->index()]));
    out << "\n";
  }
  out << "oracle:";
  for (const auto& d : record.oracle_distances) out << " " << format_distance(d);
  out << "\nstable_batch_unsound: " << (record.stable_batch_unsound ? "true" : "false") << "\n";
  err << "note: stablebatch is experimental and oracle-checked; its distances can be wrong\n";
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream&) {
  const auto g = read_graph_file<double>(o.file);
  const VertexId source(o.source);
  const auto bf = bellman_ford(g, source);
  out << "bellman-ford:";
  for (const auto& d : bf.distances) out << " " << format_distance(d);
  out << "\n";
  if (g.size() <= kEnumerationLimit) {
    const auto en = enumerate_distances(g, source);
    out << "enumeration: ";
    for (std::size_t i = 0; i < en.distances.size(); ++i) out << (i ? " " : "") << format_distance(en.distances[i]);
    out << "\nagree: " << (en.distances == bf.distances ? "yes" : "no") << "\n";
  } else {
    out << "enumeration: skipped (n > " << kEnumerationLimit << ")\n";
  }
  return kExitOk;
}

std::pair<std::int64_t, std::int64_t> parse_weight_range(const std::string& text) {
  const auto colon = text.find(':');
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  const auto parse = [&](std::string_view part, std::int64_t& v) {
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    return ec == std::errc{} && end == part.data() + part.size() && !part.empty();
  };
  const std::string_view view(text);
  if (colon == std::string::npos || !parse(view.substr(0, colon), lo) || !parse(view.substr(colon + 1), hi)) {
    throw CLI::ValidationError("--weights", "expected LO:HI, got '" + text + "'");
  }
  return {lo, hi};
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream&) {
  const auto [lo, hi] = parse_weight_range(o.weights);
  bench::GraphSpec spec{o.nodes, o.density, lo, hi, o.tie_bias, o.seed};
  const auto report = bench::run_suite({spec}, o.graphs, bench::EndpointPolicy{1, true}, o.threads);

  std::ofstream file(o.out_file, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot write '" + o.out_file + "'");
  if (o.report_format == "csv") {
    file << bench::report_to_csv(report);
  } else {
    file << bench::report_to_json(report, o.timing).dump(2) << "\n";
  }

  for (const auto& a : report.aggregates.per_strategy) {
    out << fmt::format("{:<12} mean {:.3f}  min {}  max {}  oracle agreement {}/{}\n", to_string(a.strategy),
                       a.mean_rounds, a.min_rounds, a.max_rounds, a.agreeing, report.records.size());
  }
  out << "unsound stablebatch runs: " << report.aggregates.unsound_stable_batch << "\n";
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Label-setting shortest-path laboratory"};
  app.require_subcommand(1);
  Options o;

  auto add_graph_input = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "Graph file (.mat matrix or .edges edge list)")->required();
    cmd->add_option("--source", o.source, "Source vertex (1-based)")->required();
  };
  auto algo_option = [&](CLI::App* cmd) {
    return cmd->add_option("--algo", o.algo, "classic | tiebatch | stablebatch")
        ->check(CLI::IsMember({"classic", "tiebatch", "stablebatch"}));
  };

  auto* trace = app.add_subcommand("trace", "Run one strategy and print every round");
  add_graph_input(trace);
  trace->add_option("--target", o.target, "Target vertex");
  algo_option(trace)->required();
  trace->add_flag("--stop-at-target", o.stop_at_target, "Stop once the target is permanent");
  trace->add_option("--format", o.format, "text | structured")->check(CLI::IsMember({"text", "structured"}));

  auto* path = app.add_subcommand("path", "Print the route, its length and the tree matrix");
  add_graph_input(path);
  path->add_option("--target", o.target, "Target vertex")->required();
  algo_option(path);

  auto* compare = app.add_subcommand("compare", "Compare all strategies against the oracle");
  add_graph_input(compare);
  compare->add_option("--target", o.target, "Target vertex");

  auto* bench = app.add_subcommand("bench", "Benchmark round counts on seeded random graphs");
  bench->add_option("--nodes", o.nodes, "Vertex count")->required()->check(CLI::PositiveNumber);
  bench->add_option("--density", o.density, "Arc probability")->required()->check(CLI::Range(0.0, 1.0));
  bench->add_option("--graphs", o.graphs, "Graph count")->required();
  bench->add_option("--seed", o.seed, "Seed")->required();
  bench->add_option("--tie-bias", o.tie_bias, "Probability of forcing the lowest weight")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--weights", o.weights, "Integer weight range LO:HI")->required();
  bench->add_option("--out", o.out_file, "Report file")->required();
  bench->add_option("--format", o.report_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  bench->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
  bench->add_flag("--timing", o.timing, "Include wall-clock timings in the JSON report");

  auto* oracle = app.add_subcommand("oracle", "Print oracle distances");
  add_graph_input(oracle);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (bench->parsed()) parse_weight_range(o.weights);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (trace->parsed()) return cmd_trace(o, out, err);
    if (path->parsed()) return cmd_path(o, out, err);
    if (compare->parsed()) return cmd_compare(o, out, err);
    if (bench->parsed()) return cmd_bench(o, out, err);
    if (oracle->parsed()) return cmd_oracle(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace dijklab::cli
