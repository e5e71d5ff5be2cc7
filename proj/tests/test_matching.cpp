#include <random>

#include <gtest/gtest.h>

#include "bdn/aux_graph.hpp"
#include "bdn/generators.hpp"
#include "bdn/matching.hpp"
#include "oracles.hpp"

using namespace bdn;

namespace {

BipartiteAdjacency from_rows(int right, const std::vector<std::uint32_t>& rows) {
  BipartiteAdjacency g{right, {}};
  for (auto r : rows) {
    std::vector<int> nb;
    for (int w = 0; w < right; ++w)
      if (r >> w & 1U) nb.push_back(w);
    g.adj.push_back(nb);
  }
  return g;
}

}  // namespace

TEST(MaxMatching, AuxExamples) {
  const AuxBipartite p3 = build_aux(path_graph(3), {{0}, {2}, {1}});
  auto m = max_matching(p3);
  EXPECT_EQ(m.size, 2u);
  EXPECT_TRUE(m.is_perfect());

  // Star K1,3 with p1 = {2,3}, p2 = {0,1}: H has the edges {2,0} and {3,0}.
  const AuxBipartite star = build_aux(star_graph(3), {{2, 3}, {0, 1}, {}});
  EXPECT_EQ(star.edges(), (std::vector<std::pair<int, int>>{{0, 0}, {1, 0}}));
  auto ms = max_matching(star);
  EXPECT_EQ(ms.size, 1u);
  EXPECT_FALSE(ms.is_perfect());
  EXPECT_EQ(ms.pairs(), (std::vector<std::pair<int, int>>{{0, 0}}));
}

TEST(MaxMatching, EmptyAndEdgeless) {
  BipartiteAdjacency empty{0, {}};
  EXPECT_EQ(max_matching(empty).size, 0u);
  EXPECT_TRUE(max_matching(empty).is_perfect());
  auto none = from_rows(3, {0, 0, 0});
  EXPECT_EQ(max_matching(none).size, 0u);
}

TEST(MaxMatching, AgreesWithSubsetDpOnRandomGraphs) {
  std::mt19937_64 rng(99);
  HopcroftKarp hk;
  for (int trial = 0; trial < 3000; ++trial) {
    const int left = static_cast<int>(rng() % 11), right = static_cast<int>(rng() % 11);
    const double p = static_cast<double>(rng() % 100) / 100.0;
    std::bernoulli_distribution coin(p);
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(left), 0);
    for (auto& r : rows)
      for (int w = 0; w < right; ++w)
        if (coin(rng)) r |= 1U << w;
    auto g = from_rows(right, rows);
    const auto& m = hk.run(g);
    EXPECT_TRUE(check_matching(g, m));
    EXPECT_EQ(static_cast<int>(m.size), oracle::max_matching_size(left, right, rows));
  }
}

TEST(MaxMatching, DeterministicAcrossRuns) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_connected_graph(8, rng);
    BalancedColoring c{{0, 1, 2}, {3, 4, 5}, {6, 7}};
    auto h = build_aux(g, c);
    EXPECT_EQ(max_matching(h).pairs(), max_matching(h).pairs());
  }
}

TEST(HallViolator, StarExample) {
  const AuxBipartite h = build_aux(star_graph(3), {{2, 3}, {0, 1}, {}});
  auto v = hall_violator(h, max_matching(h));
  // Unmatched 3 reaches 0, whose partner 2 joins the set.
  EXPECT_EQ(v.a, (VertexSet{2, 3}));
  EXPECT_EQ(v.b, VertexSet{});
  EXPECT_EQ(v.nh_p2, VertexSet{0});
  EXPECT_EQ(v.nh_x2, VertexSet{});
  EXPECT_EQ(v.deficiency, 1u);
}

TEST(HallViolator, PathExample) {
  const AuxBipartite h = build_aux(path_graph(4), {{2, 3}, {0, 1}, {}});
  EXPECT_EQ(h.edges(), (std::vector<std::pair<int, int>>{{0, 1}}));
  auto v = hall_violator(h, max_matching(h));
  EXPECT_EQ(v.a, VertexSet{3});
  EXPECT_EQ(v.b, VertexSet{});
  EXPECT_EQ(v.nh_p2, VertexSet{});
  EXPECT_EQ(v.nh_x2, VertexSet{});
}

TEST(HallViolator, Pigeonhole) {
  // Two P1 vertices whose only P2 neighbor is the same vertex.
  Graph g(4, {{0, 2}, {1, 2}});
  const AuxBipartite h = build_aux(g, {{0, 1}, {2, 3}, {}});
  auto v = hall_violator(h, max_matching(h));
  EXPECT_EQ(v.a, (VertexSet{0, 1}));
  EXPECT_EQ(v.nh_p2.size() + v.nh_x2.size(), v.a.size() - 1);
}

TEST(HallViolator, RejectsPerfectAndNonMaximumMatchings) {
  const AuxBipartite p3 = build_aux(path_graph(3), {{0}, {2}, {1}});
  EXPECT_THROW(hall_violator(p3, max_matching(p3)), ContractViolation);
  Matching empty = Matching::from_pairs(p3.left_size(), p3.right_size(), {});
  EXPECT_THROW(hall_violator(p3, empty), ContractViolation);
  Matching bogus = Matching::from_pairs(p3.left_size(), p3.right_size(), {{0, 0}});
  EXPECT_THROW(hall_violator(p3, bogus), ContractViolation);  // (0,0) is not an edge
}

// Neighborhood of the violator recomputed straight from H.
TEST(HallViolator, NeighborhoodIsExactOnRandomInstances) {
  std::mt19937_64 rng(11);
  int violators = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.35, rng);
    auto labels = ColoringStream::unrank(n, rng() % coloring_count(n));
    auto c = BalancedColoring::from_labels(labels);
    auto h = build_aux(g, c);
    auto m = max_matching(h);
    if (m.is_perfect()) continue;
    ++violators;
    auto v = hall_violator(h, m);
    EXPECT_FALSE(v.a.empty());
    std::vector<int> reach;
    for (int u = 0; u < h.left_size(); ++u) {
      const auto& t = h.side1()[static_cast<std::size_t>(u)];
      if ((t.is_copy() ? v.b : v.a).contains(t.vertex))
        for (int w : h.neighbors(u)) reach.push_back(w);
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    std::vector<Vertex> p2, x2;
    for (int w : reach) {
      const auto& t = h.side2()[static_cast<std::size_t>(w)];
      (t.is_copy() ? x2 : p2).push_back(t.vertex);
    }
    EXPECT_EQ(VertexSet(p2), v.nh_p2);
    EXPECT_EQ(VertexSet(x2), v.nh_x2);
    EXPECT_LE(reach.size() + 1, v.a.size() + v.b.size());
    for (Vertex x : v.b) EXPECT_TRUE(v.nh_x2.contains(x));
  }
  EXPECT_GT(violators, 100);
}
