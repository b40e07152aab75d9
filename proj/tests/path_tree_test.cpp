#include <random>

#include <gtest/gtest.h>

#include "dijklab/path_tree.hpp"
#include "test_util.hpp"

using namespace dijklab;
using dijklab::test::INF;
using dijklab::test::W;

namespace {

WeightMatrix<double> nonzeros(std::size_t n, std::initializer_list<std::tuple<int, int, double>> entries) {
  WeightMatrix<double> t = WeightMatrix<double>::Zero(n, n);
  for (auto [i, j, w] : entries) t(i - 1, j - 1) = w;
  return t;
}

}  // namespace

TEST(BuildTreeMatrix, MatchesPrintedTree) {
  const auto g = test::load("paper8_tora.mat");
  const auto tree = build_tree_matrix(g, run_classic(g, VertexId(1)));
  EXPECT_EQ(tree.entries,
            nonzeros(8, {{1, 2, 1}, {2, 3, 1}, {2, 5, 2}, {3, 4, 2}, {3, 6, 4}, {5, 7, 7}, {6, 8, 2}}));
  EXPECT_EQ(tree.parent(VertexId(8)), VertexId(6));
  EXPECT_FALSE(tree.parent(VertexId(1)));
}

TEST(BuildTreeMatrix, LowestIdParentOnPrintedMatrix) {
  // With d13 = 2, both 1->3 and 1->2->3 cost 2; the lower parent id wins.
  const auto g = test::load("paper8.mat");
  const auto tree = build_tree_matrix(g, run_classic(g, VertexId(1)));
  EXPECT_EQ(tree.entries,
            nonzeros(8, {{1, 2, 1}, {1, 3, 2}, {2, 5, 2}, {3, 4, 2}, {3, 6, 4}, {5, 7, 7}, {6, 8, 2}}));
}

TEST(BuildTreeMatrix, SingleVertex) {
  const auto g = test::single_vertex();
  const auto tree = build_tree_matrix(g, run_classic(g, VertexId(1)));
  EXPECT_EQ(tree.entries, WeightMatrix<double>::Zero(1, 1));
}

TEST(BuildTreeMatrix, StrictModeRejectsUnsettledTarget) {
  const auto g = Graph<double>::edgeless(2);
  const auto trace = run_classic(g, VertexId(1), VertexId(2), true);
  EXPECT_NO_THROW(build_tree_matrix(g, trace));
  try {
    build_tree_matrix(g, trace, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsettledVertex);
  }
}

TEST(ExtractPath, RouteToEight) {
  const auto g = test::load("paper8_tora.mat");
  const auto path = extract_path(build_tree_matrix(g, run_classic(g, VertexId(1))), VertexId(8));
  EXPECT_EQ(path.vertices, (std::vector<VertexId>{VertexId(1), VertexId(2), VertexId(3), VertexId(6), VertexId(8)}));
  EXPECT_EQ(path.total, W(8));
  EXPECT_EQ(to_string(path), "1-2-3-6-8 (8)");
}

TEST(ExtractPath, SourceAndUnreachable) {
  const auto g = test::load("paper8.mat");
  const auto tree = build_tree_matrix(g, run_classic(g, VertexId(3)));
  const auto self = extract_path(tree, VertexId(3));
  EXPECT_EQ(self.vertices, std::vector<VertexId>{VertexId(3)});
  EXPECT_EQ(self.total, W(0));

  const auto e = Graph<double>::edgeless(2);
  const auto none = extract_path(build_tree_matrix(e, run_classic(e, VertexId(1))), VertexId(2));
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(none.total, INF);
  EXPECT_EQ(to_string(none), "unreachable (INF)");

  EXPECT_THROW(extract_path(tree, VertexId(9)), Error);
}

// Tree consistency and path totals over random graphs.
TEST(PathTree, FuzzedConsistency) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = test::random_graph(rng, 10, 4);
    for (auto strategy : {SelectionStrategy::SingleMin, SelectionStrategy::TieBatch}) {
      const auto trace = run_labeling(g, VertexId(1), strategy);
      const auto tree = build_tree_matrix(g, trace);
      const std::size_t n = g.size();
      for (std::size_t j = 0; j < n; ++j) {
        const VertexId v = VertexId::from_index(j);
        int parents = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const double t = tree.entries(i, j);
          if (t == 0) continue;
          ++parents;
          const VertexId u = VertexId::from_index(i);
          ASSERT_EQ(g.weight(u, v), W(t));
          ASSERT_EQ(saturating_add(trace.distance(u), W(t)), trace.distance(v));
        }
        const bool settled = trace.final_labels[v].permanent();
        ASSERT_EQ(parents, (settled && v != VertexId(1)) ? 1 : 0);

        const auto path = extract_path(tree, v);
        ASSERT_EQ(path.total, trace.distance(v));
        ASSERT_EQ(path.empty(), !settled);
        if (!path.empty()) {
          ASSERT_EQ(path.vertices.front(), VertexId(1));
          ASSERT_EQ(path.vertices.back(), v);
          W sum(0);
          for (std::size_t k = 1; k < path.vertices.size(); ++k) {
            const auto w = g.weight(path.vertices[k - 1], path.vertices[k]);
            ASSERT_TRUE(w.is_finite());
            sum = saturating_add(sum, w);
          }
          ASSERT_EQ(sum, path.total);
        }
      }
    }
  }
}
