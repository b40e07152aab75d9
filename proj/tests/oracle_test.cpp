#include <random>

#include <gtest/gtest.h>

#include "dijklab/oracle.hpp"
#include "test_util.hpp"

using namespace dijklab;
using dijklab::test::INF;
using dijklab::test::W;

TEST(BellmanFord, PaperNetwork) {
  const auto result = bellman_ford(test::load("paper8.mat"), VertexId(1));
  EXPECT_EQ(result.distances, test::weights({0, 1, 2, 4, 3, 6, 10, 8}));
  EXPECT_EQ(result.method, OracleMethod::BellmanFord);
}

TEST(BellmanFord, SmallCases) {
  EXPECT_EQ(bellman_ford(test::single_vertex(), VertexId(1)).distances, test::weights({0}));
  EXPECT_EQ(bellman_ford(test::load("counterexample4.edges"), VertexId(1)).distance(VertexId(3)), W(3));
  EXPECT_EQ(bellman_ford(Graph<double>::edgeless(2), VertexId(1)).distance(VertexId(2)), INF);
  EXPECT_THROW(bellman_ford(test::single_vertex(), VertexId(2)), Error);
}

TEST(EnumerateMinPath, PaperNetwork) {
  const auto g = test::load("paper8.mat");
  const auto [best, witness] = enumerate_min_path(g, VertexId(1), VertexId(8));
  EXPECT_EQ(best, W(8));
  ASSERT_TRUE(witness);
  EXPECT_EQ(witness->front(), VertexId(1));
  EXPECT_EQ(witness->back(), VertexId(8));
  W sum(0);
  for (std::size_t k = 1; k < witness->size(); ++k) sum = saturating_add(sum, g.weight((*witness)[k - 1], (*witness)[k]));
  EXPECT_EQ(sum, best);
}

TEST(EnumerateMinPath, Counterexample) {
  const auto [best, witness] = enumerate_min_path(test::load("counterexample4.edges"), VertexId(1), VertexId(3));
  EXPECT_EQ(best, W(3));
  EXPECT_EQ(witness, (std::vector<VertexId>{VertexId(1), VertexId(2), VertexId(4), VertexId(3)}));
}

TEST(EnumerateMinPath, UnreachableAndLimits) {
  const auto [best, witness] = enumerate_min_path(Graph<double>::edgeless(2), VertexId(1), VertexId(2));
  EXPECT_EQ(best, INF);
  EXPECT_FALSE(witness);
  try {
    enumerate_min_path(Graph<double>::edgeless(13), VertexId(1), VertexId(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GraphTooLarge);
  }
  EXPECT_THROW(enumerate_min_path(Graph<double>::edgeless(2), VertexId(1), VertexId(3)), Error);
}

TEST(Oracles, AgreeOnFuzzedGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = test::random_graph(rng, 8, 6);
    const VertexId source(1);
    const auto bf = bellman_ford(g, source);
    const auto en = enumerate_distances(g, source);
    ASSERT_EQ(bf.distances, en.distances);
    ASSERT_EQ(bf.distances, test::floyd_warshall_row(g, source));
    for (std::size_t t = 0; t < g.size(); ++t) {
      const auto [best, witness] = enumerate_min_path(g, source, VertexId::from_index(t));
      ASSERT_EQ(best, bf.distances[t]);
      ASSERT_EQ(witness.has_value(), best.is_finite());
    }
  }
}
