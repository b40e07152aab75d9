#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "dijklab/graph.hpp"
#include "dijklab/io.hpp"

namespace dijklab::test {

using W = Weight<double>;
inline const W INF = W::infinity();

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(DIJKLAB_FIXTURE_DIR) / name;
}

inline Graph<double> load(const std::string& name) { return read_graph_file<double>(fixture(name)); }

inline std::vector<W> weights(std::initializer_list<double> values) {
  std::vector<W> out;
  for (double v : values) out.push_back(W(v));
  return out;
}

inline Graph<double> single_vertex() { return Graph<double>::edgeless(1); }

/// Floyd-Warshall over the raw matrix: a third, test-only reference that
/// shares no code with the engines or the oracle module.
inline std::vector<W> floyd_warshall_row(const Graph<double>& g, VertexId source) {
  const std::size_t n = g.size();
  std::vector<std::vector<W>> d(n, std::vector<W>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = W::from_encoded(g.matrix()(i, j));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k].is_finite() && d[k][j].is_finite() && d[i][k].value() + d[k][j].value() < d[i][j])
          d[i][j] = W(d[i][k].value() + d[k][j].value());
  return d[source.index()];
}

/// Small random valid digraph with integer weights, independent of the bench
/// generator.
inline Graph<double> random_graph(std::mt19937_64& rng, std::size_t max_n = 10, int max_w = 5) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> weight(1, max_w);
  const std::size_t n = size(rng);
  const double density = unit(rng);
  WeightMatrix<double> d = WeightMatrix<double>::Constant(n, n, SentinelTraits<double>::encoded());
  d.diagonal().setZero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && unit(rng) < density) d(i, j) = weight(rng);
  return Graph<double>(std::move(d));
}

}  // namespace dijklab::test
