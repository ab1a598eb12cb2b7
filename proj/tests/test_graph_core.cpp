#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fewseg/fewsegments.hpp"
#include "fewseg/geometry.hpp"
#include "fewseg/heavy_path.hpp"
#include "fewseg/tree_layout.hpp"
#include "fewseg/visual_complexity.hpp"
#include "oracles.hpp"

using namespace fewseg;

namespace {

GridDrawing grid(int n, std::vector<Edge> edges, std::vector<IVec> pos) { return {Graph(n, edges), pos}; }

RootedTree star(int leaves) {
  std::vector<Vertex> p(leaves + 1, 0);
  p[0] = -1;
  return RootedTree(p);
}

RootedTree path_tree(int n) {
  std::vector<Vertex> p(n);
  for (int v = 0; v < n; ++v) p[v] = v - 1;
  return RootedTree(p);
}

}  // namespace

TEST(Graph, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(Graph(2, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
  EXPECT_TRUE(Graph(3, {{0, 1}, {1, 2}}).is_tree());
  EXPECT_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST(RootedTree, FromGraphOrientsAwayFromRoot) {
  const Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
  const RootedTree t = RootedTree::from_graph(g, 1);
  EXPECT_EQ(t.root(), 1);
  EXPECT_EQ(t.parent(0), 1);
  EXPECT_EQ(t.children(1), (std::vector<Vertex>{0, 2, 3}));
  EXPECT_EQ(t.height(), 1);
  EXPECT_EQ(t.subtree_size(1), 4);
}

TEST(HeavyPath, PathIsOneHeavyPath) {
  const auto hpd = heavy_path_decomposition(path_tree(3));
  ASSERT_EQ(hpd.paths.size(), 1u);
  EXPECT_EQ(hpd.paths[0], (std::vector<Vertex>{0, 1, 2}));
}

TEST(HeavyPath, StarTieGoesToLowestIndex) {
  const RootedTree t = star(3);
  const auto hpd = heavy_path_decomposition(t);
  EXPECT_EQ(hpd.heavy_child[0], 1);
  EXPECT_EQ(hpd.paths[0], (std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(hpd.is_heavy_edge(t, 2));
  EXPECT_FALSE(hpd.is_heavy_edge(t, 3));
}

TEST(HeavyPath, LightDepthBoundOnRandomTrees) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RootedTree t = oracle::random_recursive_tree(40, seed);
    const auto hpd = heavy_path_decomposition(t);
    const int bound = int(std::floor(std::log2(40.0)));
    for (Vertex v = 0; v < 40; ++v) {
      if (!t.children(v).empty()) continue;
      int light = 0;
      for (Vertex w = v; t.parent(w) != -1; w = t.parent(w)) light += !hpd.is_heavy_edge(t, w);
      EXPECT_LE(light, bound);
    }
    for (Vertex v = 0; v < 40; ++v) {
      if (hpd.heavy_child[v] == -1) continue;
      for (Vertex c : t.children(v)) EXPECT_GE(t.subtree_size(hpd.heavy_child[v]), t.subtree_size(c));
    }
    // every vertex on exactly one path
    std::vector<int> seen(40, 0);
    for (const auto& p : hpd.paths)
      for (Vertex v : p) ++seen[v];
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(PrimitiveVector, Examples) {
  EXPECT_EQ(primitive_vector({6, 12}), (IVec{1, 2}));
  EXPECT_EQ(primitive_vector({3, 5}), (IVec{3, 5}));
  EXPECT_EQ(primitive_vector({-4, -6}), (IVec{-2, -3}));
  EXPECT_EQ(primitive_vector({0, -7}), (IVec{0, -1}));
  EXPECT_THROW(primitive_vector({0, 0}), std::invalid_argument);
}

TEST(PrimitiveVector, ScalingInvariance) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const IVec u{std::int64_t(rng() % 41) - 20, std::int64_t(rng() % 41) - 20};
    if (u == IVec{}) continue;
    for (std::int64_t k : {1, 2, 3, 7, 100}) EXPECT_EQ(primitive_vector(u * k), primitive_vector(u));
    EXPECT_EQ(primitive_vector(u * -3), -primitive_vector(u));
  }
}

TEST(Segments, CollinearIncidentPairIsOneSegment) {
  EXPECT_EQ(count_segments(grid(3, {{0, 1}, {1, 2}}, {{0, 0}, {1, 1}, {2, 2}})).count, 1u);
}

TEST(Segments, PerpendicularPairIsTwoSegments) {
  EXPECT_EQ(count_segments(grid(3, {{0, 1}, {1, 2}}, {{0, 0}, {1, 0}, {1, 1}})).count, 2u);
}

TEST(Segments, FoldedBackEdgesDoNotChain) {
  // both edges leave vertex 1 in the same direction
  EXPECT_EQ(count_segments(grid(3, {{0, 1}, {1, 2}}, {{2, 0}, {0, 0}, {1, 0}})).count, 2u);
}

TEST(Segments, RealDrawingsUseRelativeTolerance) {
  Drawing d{Graph(3, {{0, 1}, {1, 2}}), {{0, 0}, {1000, 0}, {2000, 1e-4}}};
  EXPECT_EQ(count_segments(d).count, 1u);
  d.positions[2].y = 1.0;
  EXPECT_EQ(count_segments(d).count, 2u);
}

TEST(Segments, PartitionCoversEveryEdgeOnceAndMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const RootedTree tree = oracle::random_recursive_tree(2 + int(rng() % 30), rng());
    GridDrawing d{tree.as_graph(), {}};
    for (int v = 0; v < tree.vertex_count(); ++v)
      d.positions.push_back({std::int64_t(rng() % 5), std::int64_t(rng() % 5)});
    bool distinct = true;
    for (int a = 0; a < tree.vertex_count(); ++a)
      for (int b = a + 1; b < tree.vertex_count(); ++b) distinct &= !(d.positions[a] == d.positions[b]);
    if (!distinct) continue;
    const auto part = count_segments(d);
    std::vector<int> covered(d.graph.edge_count(), 0);
    for (const auto& s : part.segments)
      for (auto e : s.edges) ++covered[e];
    for (int c : covered) EXPECT_EQ(c, 1);
    EXPECT_LE(part.count, d.graph.edge_count());
    EXPECT_GE(int(part.count), odd_degree_bound(tree));
    // the oracle merges every straight pair, so it never counts more
    EXPECT_GE(part.count, oracle::segments(d));
  }
}

TEST(OddDegreeBound, Examples) {
  EXPECT_EQ(odd_degree_bound(path_tree(5)), 1);
  EXPECT_EQ(odd_degree_bound(star(4)), 2);
  EXPECT_EQ(odd_degree_bound(star(3)), 2);
  EXPECT_EQ(odd_degree_bound(RootedTree(std::vector<Vertex>{-1})), 0);
}

TEST(Crossings, Examples) {
  EXPECT_EQ(count_crossings(grid(4, {{0, 1}, {2, 3}}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})), 0u);
  const auto x = grid(4, {{0, 1}, {2, 3}}, {{0, 0}, {2, 2}, {0, 2}, {2, 0}});
  EXPECT_EQ(count_crossings(x), 1u);
  EXPECT_FALSE(is_planar_drawing(x));
}

TEST(Crossings, OverlapIsFlagged) {
  const auto d = grid(4, {{0, 1}, {2, 3}}, {{0, 0}, {3, 0}, {1, 0}, {5, 0}});
  const auto s = crossing_stats(d);
  EXPECT_EQ(s.crossings, 1u);
  EXPECT_EQ(s.overlaps, 1u);
  const auto incident = grid(3, {{0, 1}, {0, 2}}, {{0, 0}, {3, 0}, {1, 0}});
  EXPECT_EQ(crossing_stats(incident).overlaps, 1u);
}

TEST(Crossings, MatchesBruteForceOnRandomDrawings) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const int n = 5 + int(rng() % 40);
    Graph g(n);
    const int m = std::min<int>(n * (n - 1) / 2, 1 + int(rng() % 120));
    while (int(g.edge_count()) < m) {
      const Vertex a = Vertex(rng() % n), b = Vertex(rng() % n);
      if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
    }
    GridDrawing d{g, {}};
    for (int v = 0; v < n; ++v) d.positions.push_back({std::int64_t(rng() % 9), std::int64_t(rng() % 9)});
    EXPECT_EQ(count_crossings(d), oracle::crossings(d)) << "instance " << t;
    const Drawing r = to_real(d);
    EXPECT_EQ(count_crossings(r), oracle::crossings(r)) << "instance " << t;
  }
}

TEST(Planarity, VertexInsideEdgeIsNotPlanar) {
  const auto d = grid(3, {{0, 1}}, {{0, 0}, {2, 2}, {1, 1}});
  EXPECT_EQ(count_crossings(d), 0u);
  EXPECT_FALSE(is_planar_drawing(d));
}

TEST(Planarity, SingleVertexIsPlanarWithNoSegments) {
  const auto d = grid(1, {}, {{0, 0}});
  EXPECT_TRUE(is_planar_drawing(d));
  EXPECT_EQ(count_segments(d).count, 0u);
}

TEST(Planarity, TidierCorpusIsPlanar) {
  for (const auto& c : oracle::tree_corpus(30)) EXPECT_TRUE(is_planar_drawing(layout_tidier(c.tree))) << c.id;
}

TEST(Segments, FewSegmentsMatchesOddDegreeBound) {
  for (const auto& c : oracle::tree_corpus(30))
    EXPECT_EQ(int(count_segments(layout_fewsegments(c.tree)).count), odd_degree_bound(c.tree)) << c.id;
}
