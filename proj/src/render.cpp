#include "dijklab/render.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace dijklab {

namespace {

using json = nlohmann::json;

json weight_to_json(const Weight<double>& w) {
  if (w.is_infinite()) return "INF";
  return w.value();
}

Weight<double> weight_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "INF") throw std::invalid_argument("bad weight " + j.dump());
    return Weight<double>::infinity();
  }
  return Weight<double>(j.get<double>());
}

json vertex_set_to_json(const VertexSet& s) {
  json out = json::array();
  for (VertexId v : s) out.push_back(v.value());
  return out;
}

VertexSet vertex_set_from_json(const json& j) {
  VertexSet out;
  for (const auto& v : j) out.insert(VertexId(v.get<int>()));
  return out;
}

json labels_to_json(const LabelState<double>& labels) {
  json out = json::array();
  std::size_t idx = 0;
  for (const auto& l : labels) {
    out.push_back({{"vertex", VertexId::from_index(idx++).value()},
                   {"value", weight_to_json(l.value)},
                   {"predecessors", vertex_set_to_json(l.predecessors)},
                   {"status", to_string(l.status)},
                   {"settled_round", l.settled_round ? json(*l.settled_round) : json(nullptr)}});
  }
  return out;
}

LabelState<double> labels_from_json(const json& j, VertexId source) {
  LabelState<double> labels(j.size(), source);
  for (const auto& entry : j) {
    auto& l = labels[VertexId(entry.at("vertex").get<int>())];
    l.value = weight_from_json(entry.at("value"));
    l.predecessors = vertex_set_from_json(entry.at("predecessors"));
    const auto status = entry.at("status").get<std::string>();
    if (status == "permanent") {
      l.status = LabelStatus::Permanent;
    } else if (status == "temporary") {
      l.status = LabelStatus::Temporary;
    } else {
      throw std::invalid_argument("bad status " + status);
    }
    const auto& settled = entry.at("settled_round");
    if (!settled.is_null()) l.settled_round = settled.get<int>();
  }
  return labels;
}

SelectionStrategy strategy_from_string(const std::string& s) {
  for (auto candidate : bench::kStrategies) {
    if (to_string(candidate) == s) return candidate;
  }
  throw std::invalid_argument("unknown strategy " + s);
}

std::string label_cell(const VertexLabel<double>& l, bool is_source) {
  if (l.value.is_infinite()) return "";
  const auto pred = l.primary_predecessor();
  const std::string who = (is_source || !pred) ? std::string("-") : to_string(*pred);
  return "[" + format_label_value(l.value) + ", " + who + "]";
}

std::string join(const VertexSet& s) {
  std::string out;
  for (VertexId v : s) {
    if (!out.empty()) out += ',';
    out += to_string(v);
  }
  return out;
}

}  // namespace

std::string format_label_value(const Weight<double>& w) {
  return w.is_infinite() ? std::string("INF") : fmt::format("{:.2f}", w.value());
}

std::string format_distance(const Weight<double>& w) {
  return w.is_infinite() ? std::string("INF") : detail::format_scalar(w.value());
}

std::string render_trace_text(const RunTrace<double>& trace) {
  std::string out = fmt::format("# {} ({}), source {}", to_string(trace.algorithm), to_string(trace.strategy),
                                trace.source.value());
  if (trace.target) out += fmt::format(", target {}", trace.target->value());
  out += '\n';
  for (const auto& round : trace.rounds) {
    out += fmt::format("Round {}  frontier {{{}}}  newly permanent {{{}}}\n", round.round_index,
                       join(round.frontier), join(round.newly_permanent));
    out += fmt::format("{:<4} | {:<14} | {}\n", "Node", "Label", "Status");
    std::size_t idx = 0;
    for (const auto& l : round.label_snapshot) {
      const VertexId v = VertexId::from_index(idx++);
      out += fmt::format("{:<4} | {:<14} | {}\n", v.value(), label_cell(l, v == trace.source), to_string(l.status));
    }
    out += '\n';
  }
  out += fmt::format("rounds: {} ({} including source initialization)\n", trace.rounds_count,
                     trace.rounds_count_incl_source);
  if (trace.terminated_early) out += "stopped at target\n";
  out += "distances:";
  for (const auto& d : trace.final_distances) out += " " + format_distance(d);
  out += '\n';
  return out;
}

json trace_to_json(const RunTrace<double>& trace) {
  json rounds = json::array();
  for (const auto& r : trace.rounds) {
    rounds.push_back({{"round", r.round_index},
                      {"frontier", vertex_set_to_json(r.frontier)},
                      {"newly_permanent", vertex_set_to_json(r.newly_permanent)},
                      {"labels", labels_to_json(r.label_snapshot)}});
  }
  json distances = json::array();
  for (const auto& d : trace.final_distances) distances.push_back(weight_to_json(d));
  return {{"algorithm", to_string(trace.algorithm)},
          {"strategy", to_string(trace.strategy)},
          {"source", trace.source.value()},
          {"target", trace.target ? json(trace.target->value()) : json(nullptr)},
          {"rounds_count", trace.rounds_count},
          {"rounds_count_incl_source", trace.rounds_count_incl_source},
          {"terminated_early", trace.terminated_early},
          {"final_distances", distances},
          {"final_labels", labels_to_json(trace.final_labels)},
          {"rounds", rounds}};
}

RunTrace<double> trace_from_json(const json& doc) {
  RunTrace<double> trace;
  const auto algorithm = doc.at("algorithm").get<std::string>();
  if (algorithm == "classic") {
    trace.algorithm = Algorithm::Classic;
  } else if (algorithm == "modified") {
    trace.algorithm = Algorithm::Modified;
  } else {
    throw std::invalid_argument("unknown algorithm " + algorithm);
  }
  trace.strategy = strategy_from_string(doc.at("strategy").get<std::string>());
  trace.source = VertexId(doc.at("source").get<int>());
  if (!doc.at("target").is_null()) trace.target = VertexId(doc.at("target").get<int>());
  trace.rounds_count = doc.at("rounds_count").get<int>();
  trace.rounds_count_incl_source = doc.at("rounds_count_incl_source").get<int>();
  trace.terminated_early = doc.at("terminated_early").get<bool>();
  for (const auto& d : doc.at("final_distances")) trace.final_distances.push_back(weight_from_json(d));
  trace.final_labels = labels_from_json(doc.at("final_labels"), trace.source);
  for (const auto& r : doc.at("rounds")) {
    trace.rounds.push_back({r.at("round").get<int>(), vertex_set_from_json(r.at("frontier")),
                            labels_from_json(r.at("labels"), trace.source),
                            vertex_set_from_json(r.at("newly_permanent"))});
  }
  return trace;
}

std::string render_tree_matrix(const TreeMatrix<double>& tree) { return to_matrix_text<double>(tree.entries); }

namespace bench {

namespace {

json spec_to_json(const GraphSpec& s) {
  return {{"n", s.n},           {"density", s.density},   {"weight_lo", s.weight_lo},
          {"weight_hi", s.weight_hi}, {"tie_bias", s.tie_bias}, {"seed", s.seed}};
}

}  // namespace

json report_to_json(const RunReport& report, bool include_timing) {
  json specs = json::array();
  for (const auto& s : report.specs) specs.push_back(spec_to_json(s));

  json records = json::array();
  for (const auto& r : report.records) {
    json outcomes = json::array();
    for (const auto& o : r.outcomes) {
      json distances = json::array();
      for (const auto& d : o.distances) distances.push_back(weight_to_json(d));
      json entry = {{"strategy", to_string(o.strategy)},
                    {"rounds", o.rounds},
                    {"rounds_incl_source", o.rounds_incl_source},
                    {"settled", o.settled},
                    {"batch_sizes", o.batch_sizes},
                    {"agrees_oracle", o.agrees_oracle},
                    {"distances", distances}};
      if (include_timing) entry["elapsed_ms"] = o.elapsed_ms;
      outcomes.push_back(std::move(entry));
    }
    json oracle = json::array();
    for (const auto& d : r.oracle_distances) oracle.push_back(weight_to_json(d));
    records.push_back({{"spec_index", r.spec_index},
                       {"graph_index", r.graph_index},
                       {"n", r.n},
                       {"source", r.source.value()},
                       {"target", r.target ? json(r.target->value()) : json(nullptr)},
                       {"oracle_distances", oracle},
                       {"outcomes", outcomes},
                       {"stable_batch_unsound", r.stable_batch_unsound}});
  }

  json per_strategy = json::array();
  for (const auto& a : report.aggregates.per_strategy) {
    per_strategy.push_back({{"strategy", to_string(a.strategy)},
                            {"mean_rounds", a.mean_rounds},
                            {"min_rounds", a.min_rounds},
                            {"max_rounds", a.max_rounds},
                            {"agreeing", a.agreeing},
                            {"agreement_rate", a.agreement_rate}});
  }

  return {{"config",
           {{"specs", specs},
            {"graphs_per_spec", report.graphs_per_spec},
            {"source", report.policy.source},
            {"target_last", report.policy.target_last}}},
          {"records", records},
          {"aggregates",
           {{"per_strategy", per_strategy}, {"unsound_stable_batch", report.aggregates.unsound_stable_batch}}}};
}

std::string report_to_csv(const RunReport& report) {
  std::string out = "spec_index,graph_index,strategy,rounds,rounds_incl_source,agrees_oracle,unsound\n";
  for (const auto& r : report.records) {
    for (const auto& o : r.outcomes) {
      const bool unsound = o.strategy == SelectionStrategy::StableBatch && r.stable_batch_unsound;
      out += fmt::format("{},{},{},{},{},{},{}\n", r.spec_index, r.graph_index, to_string(o.strategy), o.rounds,
                         o.rounds_incl_source, o.agrees_oracle ? 1 : 0, unsound ? 1 : 0);
    }
  }
  return out;
}

}  // namespace bench
}  // namespace dijklab
