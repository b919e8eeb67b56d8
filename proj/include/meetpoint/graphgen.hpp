#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "meetpoint/errors.hpp"
#include "meetpoint/graph.hpp"
#include "meetpoint/oracle.hpp"
#include "meetpoint/rng.hpp"

// Random instance protocol: directed arcs with uniform integer weights,
// random distinct sources, and rejection of instances where no node is
// reachable from every source. The draw sequence below is part of the
// reproducibility contract; changing it changes every seeded instance.
//   1. arcs: either exactly m distinct ordered pairs via Floyd's sampling
//      over pair codes (code = u * (n-1) + v', v' skips u), or one Bernoulli
//      trial per ordered pair in lexicographic order (density mode);
//   2. one weight per arc, in ascending pair-code order: weight_min +
//      uniform_below(span + 1);
//   3. sources: partial Fisher-Yates over [0, n), first s picks in order.
// All draws use std::mt19937_64 with rejection sampling (rng.hpp).

namespace meetpoint::gen {

struct GenConfig {
  NodeId n = 0;
  std::optional<std::uint64_t> m;  // exact arc count ...
  std::optional<double> density;   // ... or per-ordered-pair probability
  std::size_t s = 1;
  std::uint64_t weight_min = 1;
  std::uint64_t weight_max = 100;
  std::uint64_t seed = 0;
  std::size_t max_rejects = 256;
};

// Derives the seed for an independent stream (per attempt, per bench
// instance, per cell). splitmix64 over seed + GOLDEN * (stream + 1); the +1
// keeps stream 0 distinct from the raw seed.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ull * (stream + 1));
}

namespace detail {

inline void validate(const GenConfig& cfg) {
  if (cfg.n == 0) throw ValidationError("generator needs at least one node");
  if (cfg.s < 1 || cfg.s > cfg.n)
    throw ValidationError("source count must be in [1, n]");
  if (cfg.weight_min < 1) throw ValidationError("weight_min must be >= 1");
  if (cfg.weight_min > cfg.weight_max)
    throw ValidationError("weight_min must not exceed weight_max");
  if (cfg.weight_max > (1ull << 32))
    throw ValidationError("weight_max above 2^32 risks inexact sums");
  if (cfg.m.has_value() == cfg.density.has_value())
    throw ValidationError("set exactly one of m and density");
  std::uint64_t pairs = static_cast<std::uint64_t>(cfg.n) * (cfg.n - 1);
  if (cfg.m && *cfg.m > pairs)
    throw ValidationError("m exceeds the number of ordered pairs");
  if (cfg.density && !(*cfg.density >= 0 && *cfg.density <= 1))
    throw ValidationError("density must be in [0, 1]");
}

inline std::pair<Graph, SourceSet> attempt(const GenConfig& cfg,
                                           std::uint64_t seed) {
  Rng rng(seed);
  NodeId n = cfg.n;
  std::uint64_t span = cfg.weight_max - cfg.weight_min + 1;

  // Pair code c encodes (u, v): u = c / (n-1), v skips u itself.
  auto decode = [n](std::uint64_t c) {
    NodeId u = static_cast<NodeId>(c / (n - 1));
    NodeId v = static_cast<NodeId>(c % (n - 1));
    if (v >= u) ++v;
    return std::pair<NodeId, NodeId>{u, v};
  };

  std::vector<Edge> edges;
  if (cfg.m) {
    std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
    std::set<std::uint64_t> codes;
    for (std::uint64_t j = pairs - *cfg.m; j < pairs; ++j) {
      std::uint64_t t = uniform_below(rng, j + 1);
      codes.insert(codes.count(t) ? j : t);
    }
    edges.reserve(codes.size());
    for (std::uint64_t c : codes) {
      auto [u, v] = decode(c);
      double w =
          static_cast<double>(cfg.weight_min + uniform_below(rng, span));
      edges.push_back(Edge{u, v, w});
    }
  } else {
    double density = *cfg.density;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v) {
        if (u == v) continue;
        // 53-bit draw scaled to [0, 1); exact and portable.
        double roll =
            static_cast<double>(rng() >> 11) * 0x1p-53;
        if (roll < density) {
          double w =
              static_cast<double>(cfg.weight_min + uniform_below(rng, span));
          edges.push_back(Edge{u, v, w});
        }
      }
  }

  std::vector<NodeId> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  SourceSet sources;
  sources.nodes.reserve(cfg.s);
  for (std::size_t i = 0; i < cfg.s; ++i) {
    std::size_t j = i + uniform_below(rng, n - i);
    std::swap(idx[i], idx[j]);
    sources.nodes.push_back(idx[i]);
  }

  return {make_graph(n, std::move(edges), false), std::move(sources)};
}

inline bool has_intersection(const Graph& g, const SourceSet& s) {
  oracle::DistanceMatrix dm = oracle::full_distances(g, s);
  for (NodeId v = 0; v < g.n(); ++v) {
    bool all_finite = true;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (dm.dist[j][v] == kInf) {
        all_finite = false;
        break;
      }
    if (all_finite) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic: the accepted instance depends only on cfg. Unusable
// attempts (no node reachable from all sources) burn one sub-seed stream
// each and are regenerated.
inline std::pair<Graph, SourceSet> generate(const GenConfig& cfg) {
  detail::validate(cfg);
  for (std::size_t attempt = 0; attempt < cfg.max_rejects; ++attempt) {
    auto inst = detail::attempt(cfg, sub_seed(cfg.seed, attempt));
    if (detail::has_intersection(inst.first, inst.second)) return inst;
  }
  throw RejectionBudgetExceeded(cfg.max_rejects);
}

}  // namespace meetpoint::gen
