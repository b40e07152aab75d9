#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dijklab/bench.hpp"
#include "dijklab/path_tree.hpp"
#include "dijklab/run.hpp"

namespace dijklab {

/// Two-decimal label value, `INF` for the sentinel.
std::string format_label_value(const Weight<double>& w);

/// Plain distance as written in files: shortest round-trip decimal or `INF`.
std::string format_distance(const Weight<double>& w);

/// Per-round node tables in the `node | [value, predecessor] | status` layout,
/// followed by round counts and final distances.
std::string render_trace_text(const RunTrace<double>& trace);

/// Full structured form of a trace; trace_from_json inverts it exactly.
nlohmann::json trace_to_json(const RunTrace<double>& trace);
RunTrace<double> trace_from_json(const nlohmann::json& doc);

std::string render_tree_matrix(const TreeMatrix<double>& tree);

namespace bench {

/// Hierarchical report document. Timings are omitted unless requested so
/// that the default output is reproducible byte for byte.
nlohmann::json report_to_json(const RunReport& report, bool include_timing = false);

/// One row per (record, strategy) under the header
/// spec_index,graph_index,strategy,rounds,rounds_incl_source,agrees_oracle,unsound
std::string report_to_csv(const RunReport& report);

}  // namespace bench
}  // namespace dijklab
