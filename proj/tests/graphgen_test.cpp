#include "meetpoint/graphgen.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <unordered_set>

#include "meetpoint/graph_io.hpp"
#include "meetpoint/oracle.hpp"

namespace meetpoint {
namespace {

gen::GenConfig base_config() {
  gen::GenConfig cfg;
  cfg.n = 20;
  cfg.m = 80;
  cfg.s = 2;
  cfg.seed = 7;
  return cfg;
}

TEST(Generate, DeterministicForSameConfig) {
  auto [g1, s1] = gen::generate(base_config());
  auto [g2, s2] = gen::generate(base_config());
  EXPECT_EQ(save_graph(g1), save_graph(g2));
  EXPECT_EQ(s1.nodes, s2.nodes);
}

TEST(Generate, DifferentSeedsDiffer) {
  gen::GenConfig cfg = base_config();
  auto [g1, s1] = gen::generate(cfg);
  cfg.seed = 8;
  auto [g2, s2] = gen::generate(cfg);
  EXPECT_NE(save_graph(g1), save_graph(g2));
}

TEST(Generate, RespectsShapeAndBounds) {
  auto [g, sources] = gen::generate(base_config());
  EXPECT_EQ(g.n(), 20u);
  EXPECT_FALSE(g.undirected());
  EXPECT_EQ(g.input_edges().size(), 80u);
  std::unordered_set<std::uint64_t> seen_pairs;
  for (const Edge& e : g.input_edges()) {
    EXPECT_NE(e.from, e.to);
    EXPECT_GE(e.weight, 1);
    EXPECT_LE(e.weight, 100);
    EXPECT_EQ(e.weight, std::floor(e.weight));  // integer weights
    EXPECT_TRUE(
        seen_pairs.insert((std::uint64_t(e.from) << 32) | e.to).second)
        << "duplicate ordered pair";
  }
  EXPECT_EQ(sources.size(), 2u);
  EXPECT_NO_THROW(validate_sources(g, sources));
}

TEST(Generate, CustomWeightRange) {
  gen::GenConfig cfg = base_config();
  cfg.weight_min = 5;
  cfg.weight_max = 5;
  auto [g, sources] = gen::generate(cfg);
  for (const Edge& e : g.input_edges()) EXPECT_EQ(e.weight, 5);
}

TEST(Generate, EmitsCanonicalEdgeOrder) {
  auto [g, sources] = gen::generate(base_config());
  Graph reloaded = [&] {
    std::istringstream in(save_graph(g));
    return load_graph(in);
  }();
  EXPECT_EQ(g.input_edges(), reloaded.input_edges());
}

TEST(Generate, EveryAcceptedInstanceHasAnIntersection) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    gen::GenConfig cfg;
    cfg.n = 12;
    cfg.m = 20;  // sparse enough to force occasional rejection
    cfg.s = 3;
    cfg.seed = seed;
    auto [g, sources] = gen::generate(cfg);
    oracle::DistanceMatrix dm = oracle::full_distances(g, sources);
    bool found = false;
    for (NodeId v = 0; v < g.n() && !found; ++v) {
      bool all = true;
      for (std::size_t j = 0; j < sources.size(); ++j)
        all = all && dm.dist[j][v] != kInf;
      found = all;
    }
    EXPECT_TRUE(found) << "seed " << seed;
  }
}

TEST(Generate, EdgelessMultiSourceExhaustsRejectionBudget) {
  gen::GenConfig cfg;
  cfg.n = 5;
  cfg.m = 0;
  cfg.s = 2;
  EXPECT_THROW(gen::generate(cfg), RejectionBudgetExceeded);
}

TEST(Generate, EdgelessSingleSourceIsFine) {
  gen::GenConfig cfg;
  cfg.n = 5;
  cfg.m = 0;
  cfg.s = 1;
  auto [g, sources] = gen::generate(cfg);
  EXPECT_EQ(g.input_edges().size(), 0u);
}

TEST(Generate, DensityModeCoversExtremes) {
  gen::GenConfig cfg;
  cfg.n = 10;
  cfg.density = 0.0;
  cfg.s = 1;
  auto [empty_g, s1] = gen::generate(cfg);
  EXPECT_EQ(empty_g.input_edges().size(), 0u);
  cfg.density = 1.0;
  cfg.s = 3;
  auto [full_g, s3] = gen::generate(cfg);
  EXPECT_EQ(full_g.input_edges().size(), 90u);  // n * (n-1)
}

TEST(Generate, DensityModeIsDeterministic) {
  gen::GenConfig cfg;
  cfg.n = 15;
  cfg.density = 0.3;
  cfg.s = 2;
  cfg.seed = 99;
  auto [g1, s1] = gen::generate(cfg);
  auto [g2, s2] = gen::generate(cfg);
  EXPECT_EQ(save_graph(g1), save_graph(g2));
  EXPECT_EQ(s1.nodes, s2.nodes);
}

TEST(Generate, CompleteGraphViaExactCount) {
  gen::GenConfig cfg;
  cfg.n = 6;
  cfg.m = 30;
  cfg.s = 2;
  auto [g, sources] = gen::generate(cfg);
  EXPECT_EQ(g.input_edges().size(), 30u);
}

TEST(Generate, ValidatesConfig) {
  gen::GenConfig cfg;
  cfg.n = 10;
  cfg.m = 20;
  cfg.s = 11;
  EXPECT_THROW(gen::generate(cfg), ValidationError);  // s > n
  cfg.s = 0;
  EXPECT_THROW(gen::generate(cfg), ValidationError);  // s < 1
  cfg.s = 2;
  cfg.weight_min = 0;
  EXPECT_THROW(gen::generate(cfg), ValidationError);  // weight_min < 1
  cfg.weight_min = 10;
  cfg.weight_max = 5;
  EXPECT_THROW(gen::generate(cfg), ValidationError);  // min > max
  cfg.weight_max = 100;
  cfg.weight_min = 1;
  cfg.density = 0.5;
  EXPECT_THROW(gen::generate(cfg), ValidationError);  // both m and density
  cfg.m.reset();
  cfg.density = 1.5;
  EXPECT_THROW(gen::generate(cfg), ValidationError);  // density > 1
  cfg.density.reset();
  EXPECT_THROW(gen::generate(cfg), ValidationError);  // neither m nor density
  cfg.m = 91;
  EXPECT_THROW(gen::generate(cfg), ValidationError);  // m > n*(n-1)
}

TEST(SubSeed, FixedInputsFixedOutput) {
  EXPECT_EQ(gen::sub_seed(42, 0), gen::sub_seed(42, 0));
  EXPECT_NE(gen::sub_seed(42, 0), gen::sub_seed(42, 1));
  EXPECT_NE(gen::sub_seed(42, 0), gen::sub_seed(43, 0));
}

TEST(SubSeed, StreamZeroAndOneNeverCollideAcrossSampledSeeds) {
  std::uint64_t state = 0x12345678;
  for (int i = 0; i < 1'000'000; ++i) {
    state = splitmix64(state);
    ASSERT_NE(gen::sub_seed(state, 0), gen::sub_seed(state, 1));
  }
}

TEST(SubSeed, StreamsFromOneSeedAreCollisionFree) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(1 << 21);
  for (std::uint64_t stream = 0; stream < 1'000'000; ++stream)
    ASSERT_TRUE(seen.insert(gen::sub_seed(20250819, stream)).second)
        << "collision at stream " << stream;
}

TEST(UniformBelow, CoversRangeWithoutBias) {
  Rng rng(1);
  std::vector<int> counts(10, 0);
  for (int i = 0; i < 100000; ++i) ++counts[uniform_below(rng, 10)];
  for (int c : counts) {
    EXPECT_GT(c, 9000);
    EXPECT_LT(c, 11000);
  }
}

}  // namespace
}  // namespace meetpoint
