#include "meetpoint/oracle.hpp"

#include <gtest/gtest.h>

#include "meetpoint/graph.hpp"
#include "meetpoint/graph_io.hpp"
#include "meetpoint/graphgen.hpp"

namespace meetpoint {
namespace {

Graph fixture() {
  return load_graph(std::string(MEETPOINT_TEST_DATA) + "/example1.graph");
}

const SourceSet kFixtureSources{{1, 6}};

TEST(FullDistances, SingleNodeGraph) {
  Graph g = make_graph(1, {});
  oracle::DistanceMatrix dm = oracle::full_distances(g, SourceSet{{0}});
  ASSERT_EQ(dm.source_count(), 1u);
  ASSERT_EQ(dm.node_count(), 1u);
  EXPECT_EQ(dm.dist[0][0], 0);
}

TEST(FullDistances, FixtureRowsMatchHandComputation) {
  oracle::DistanceMatrix dm = oracle::full_distances(fixture(), kFixtureSources);
  EXPECT_EQ(dm.dist[0], (std::vector<double>{3, 0, 8, 7, 4, 4, 8, 6}));
  EXPECT_EQ(dm.dist[1], (std::vector<double>{11, 8, 6, 7, 4, 7, 0, 5}));
}

TEST(FullDistances, UnreachableIsInf) {
  Graph g = make_graph(3, {{0, 1, 2}});
  oracle::DistanceMatrix dm = oracle::full_distances(g, SourceSet{{0}});
  EXPECT_EQ(dm.dist[0], (std::vector<double>{0, 2, kInf}));
}

TEST(FloydWarshall, DirectedReachability) {
  Graph g = make_graph(2, {{0, 1, 7}});
  auto d = oracle::allpairs_floyd_warshall(g);
  EXPECT_EQ(d[0][1], 7);
  EXPECT_EQ(d[1][0], kInf);
}

TEST(FloydWarshall, RelaxesThroughMiddleNode) {
  Graph g = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}}, true);
  auto d = oracle::allpairs_floyd_warshall(g);
  EXPECT_EQ(d[0][2], 2);
  EXPECT_EQ(d[2][0], 2);
}

TEST(FloydWarshall, HonorsCap) {
  Graph g = make_graph(201, {});
  EXPECT_THROW(oracle::allpairs_floyd_warshall(g), CapExceeded);
  EXPECT_NO_THROW(oracle::allpairs_floyd_warshall(g, 201));
}

TEST(FloydWarshall, AgreesWithPerSourceDijkstraOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    gen::GenConfig cfg;
    cfg.n = 20;
    cfg.m = 60;
    cfg.s = 4;
    cfg.seed = seed;
    auto [g, sources] = gen::generate(cfg);
    auto all = oracle::allpairs_floyd_warshall(g);
    oracle::DistanceMatrix dm = oracle::full_distances(g, sources);
    for (std::size_t j = 0; j < sources.size(); ++j)
      EXPECT_EQ(dm.dist[j], all[sources.nodes[j]]) << "seed " << seed;
  }
}

TEST(OracleCenter, FixtureIsNodeFourAtFour) {
  auto [node, value] =
      oracle::oracle_center(oracle::full_distances(fixture(), kFixtureSources));
  EXPECT_EQ(node, 4u);
  EXPECT_EQ(value, 4);
}

TEST(OracleCenter, SingleSourceIsItself) {
  Graph g = make_graph(3, {{0, 1, 2}, {1, 2, 2}});
  auto [node, value] =
      oracle::oracle_center(oracle::full_distances(g, SourceSet{{1}}));
  EXPECT_EQ(node, 1u);
  EXPECT_EQ(value, 0);
}

TEST(OracleCenter, ThrowsWhenNoColumnIsAllFinite) {
  // Two separate components: nothing is reachable from both sources.
  Graph g = make_graph(4, {{0, 1, 1}, {2, 3, 1}}, true);
  EXPECT_THROW(
      oracle::oracle_center(oracle::full_distances(g, SourceSet{{0, 2}})),
      NoIntersection);
}

TEST(OracleCenter, LowestIdWinsTies) {
  // Symmetric path: nodes 1 and... only node 1 at max 1; make a true tie.
  // 0 -1- 1 -1- 2 and 0 -1- 3 -1- 2: both 1 and 3 have max distance 1.
  Graph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 2, 1}}, true);
  auto [node, value] =
      oracle::oracle_center(oracle::full_distances(g, SourceSet{{0, 2}}));
  EXPECT_EQ(node, 1u);
  EXPECT_EQ(value, 1);
}

TEST(OracleCentroid, FixtureValueIsEightSharedByThreeNodes) {
  // Sums: node 1 = 0+8, node 4 = 4+4, node 6 = 8+0. Lowest id of the tie.
  auto [node, value] = oracle::oracle_centroid(
      oracle::full_distances(fixture(), kFixtureSources));
  EXPECT_EQ(node, 1u);
  EXPECT_EQ(value, 8);
}

TEST(OracleCentroid, SingleSourceIsItself) {
  Graph g = make_graph(2, {{0, 1, 5}});
  auto [node, value] =
      oracle::oracle_centroid(oracle::full_distances(g, SourceSet{{0}}));
  EXPECT_EQ(node, 0u);
  EXPECT_EQ(value, 0);
}

TEST(OracleCentroid, PicksSmallerSumOverSmallerMax) {
  // Node 1: dists (2, 2) -> sum 4, max 2. Node 0: dists (0, 3) -> sum 3.
  Graph g = make_graph(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 3}}, true);
  oracle::DistanceMatrix dm = oracle::full_distances(g, SourceSet{{0, 2}});
  auto centroid = oracle::oracle_centroid(dm);
  auto center = oracle::oracle_center(dm);
  EXPECT_EQ(centroid.first, 0u);
  EXPECT_EQ(centroid.second, 3);
  EXPECT_EQ(center.first, 1u);
  EXPECT_EQ(center.second, 2);
}

TEST(OracleArgmin, ValueBoundedByEveryFiniteColumn) {
  gen::GenConfig cfg;
  cfg.n = 30;
  cfg.m = 90;
  cfg.s = 3;
  cfg.seed = 7;
  auto [g, sources] = gen::generate(cfg);
  oracle::DistanceMatrix dm = oracle::full_distances(g, sources);
  auto [cnode, cvalue] = oracle::oracle_center(dm);
  auto [gnode, gvalue] = oracle::oracle_centroid(dm);
  for (NodeId v = 0; v < g.n(); ++v) {
    double mx = 0, sum = 0;
    bool finite = true;
    for (std::size_t j = 0; j < sources.size(); ++j) {
      if (dm.dist[j][v] == kInf) finite = false;
      mx = std::max(mx, dm.dist[j][v]);
      sum += dm.dist[j][v];
    }
    if (!finite) continue;
    EXPECT_LE(cvalue, mx);
    EXPECT_LE(gvalue, sum);
  }
}

}  // namespace
}  // namespace meetpoint
