#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "meetpoint/engine.hpp"
#include "meetpoint/graphgen.hpp"
#include "meetpoint/numfmt.hpp"
#include "meetpoint/oracle.hpp"

// Experiment harness over the (S, V) grid. Per instance it measures:
//   explored_center_pct    100 * early-center / full-center extractions
//   explored_centroid_pct  100 * early-centroid / full-center extractions
//                          (the full *center* count is the baseline for both,
//                          matching how the tables are normalized)
//   value_ratio_pct        100 * early-centroid sum / oracle centroid sum,
//                          >= 100 by construction (100 exactly when both are
//                          zero, which only happens with a single source)
//   hit_rate_pct           100/0 indicator: early centroid returned the
//                          oracle's argmin node and value
// Aggregates are mean and population standard deviation.

namespace meetpoint::bench {

struct SweepConfig {
  std::vector<std::size_t> sources_list{2, 3, 5, 10};
  std::vector<NodeId> vertices_list{20, 50, 100, 500};
  std::uint64_t iterations = 1000;
  // Template for per-instance GenConfig: weights and max_rejects are taken
  // from it, and m/density when set; with neither set each cell defaults to
  // m = 4 * V (expected out-degree 4). n, s, seed are always overridden.
  gen::GenConfig gen;
  std::uint64_t seed = 0;
};

struct ExperimentStats {
  std::size_t S = 0;
  NodeId V = 0;
  double mean_explored_pct_center = 0, sd_explored_pct_center = 0;
  double mean_explored_pct_centroid = 0, sd_explored_pct_centroid = 0;
  double mean_value_ratio_pct = 0, sd_value_ratio_pct = 0;
  double centroid_hit_rate_pct = 0, sd_hit_rate_pct = 0;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;  // cell seed; run_cell(S, V, iters, seed) replays it

  friend bool operator==(const ExperimentStats&,
                         const ExperimentStats&) = default;
};

struct CellOutcome {
  std::size_t S = 0;
  NodeId V = 0;
  std::optional<ExperimentStats> stats;
  std::string error;       // reason when stats is absent
  double seconds = 0;      // informational; never serialized
};

struct SweepResult {
  std::vector<std::size_t> sources_list;
  std::vector<NodeId> vertices_list;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  std::vector<CellOutcome> cells;  // row-major: sources outer, vertices inner

  std::vector<ExperimentStats> stats() const {
    std::vector<ExperimentStats> out;
    for (const CellOutcome& c : cells)
      if (c.stats) out.push_back(*c.stats);
    return out;
  }
};

namespace detail {

struct Accumulator {
  std::vector<double> xs;

  void add(double x) { xs.push_back(x); }
  double mean() const {
    double sum = 0;
    for (double x : xs) sum += x;
    return xs.empty() ? 0 : sum / static_cast<double>(xs.size());
  }
  double sd_population() const {
    if (xs.empty()) return 0;
    double m = mean(), acc = 0;
    for (double x : xs) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(xs.size()));
  }
};

inline gen::GenConfig instance_config(const gen::GenConfig& tmpl,
                                      std::size_t S, NodeId V,
                                      std::uint64_t instance_seed) {
  gen::GenConfig cfg = tmpl;
  cfg.n = V;
  cfg.s = S;
  cfg.seed = instance_seed;
  if (!cfg.m && !cfg.density) {
    std::uint64_t pairs = static_cast<std::uint64_t>(V) * (V - 1);
    cfg.m = std::min<std::uint64_t>(4ull * V, pairs);
  }
  return cfg;
}

}  // namespace detail

inline ExperimentStats run_cell(std::size_t S, NodeId V, std::uint64_t iters,
                                std::uint64_t seed,
                                const gen::GenConfig& tmpl = {}) {
  if (iters < 1) throw ValidationError("iterations must be >= 1");
  detail::Accumulator pct_center, pct_centroid, ratio, hit;
  for (std::uint64_t i = 0; i < iters; ++i) {
    gen::GenConfig cfg =
        detail::instance_config(tmpl, S, V, gen::sub_seed(seed, i));
    auto [g, sources] = gen::generate(cfg);

    SolveResult full_center = solve_center_full(g, sources);
    SolveResult early_center = solve_center_early(g, sources);
    SolveResult early_centroid = solve_centroid_early(g, sources);
    oracle::DistanceMatrix dm = oracle::full_distances(g, sources);
    auto [oracle_node, oracle_value] = oracle::oracle_centroid(dm);

    pct_center.add(100.0 * static_cast<double>(early_center.explored) /
                   static_cast<double>(full_center.explored));
    pct_centroid.add(100.0 * static_cast<double>(early_centroid.explored) /
                     static_cast<double>(full_center.explored));
    ratio.add(early_centroid.value == 0 && oracle_value == 0
                  ? 100.0
                  : 100.0 * early_centroid.value / oracle_value);
    hit.add(early_centroid.node == oracle_node &&
                    early_centroid.value == oracle_value
                ? 100.0
                : 0.0);
  }
  ExperimentStats st;
  st.S = S;
  st.V = V;
  st.mean_explored_pct_center = pct_center.mean();
  st.sd_explored_pct_center = pct_center.sd_population();
  st.mean_explored_pct_centroid = pct_centroid.mean();
  st.sd_explored_pct_centroid = pct_centroid.sd_population();
  st.mean_value_ratio_pct = ratio.mean();
  st.sd_value_ratio_pct = ratio.sd_population();
  st.centroid_hit_rate_pct = hit.mean();
  st.sd_hit_rate_pct = hit.sd_population();
  st.iterations = iters;
  st.seed = seed;
  return st;
}

// Cells are independent: a cell that cannot produce instances is reported
// absent with its reason instead of aborting the sweep.
inline SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.sources_list.empty() || cfg.vertices_list.empty())
    throw ValidationError("sweep lists must be non-empty");
  if (!std::is_sorted(cfg.sources_list.begin(), cfg.sources_list.end()) ||
      !std::is_sorted(cfg.vertices_list.begin(), cfg.vertices_list.end()))
    throw ValidationError("sweep lists must be ascending");
  SweepResult result;
  result.sources_list = cfg.sources_list;
  result.vertices_list = cfg.vertices_list;
  result.iterations = cfg.iterations;
  result.seed = cfg.seed;
  std::uint64_t cell_index = 0;
  for (std::size_t S : cfg.sources_list)
    for (NodeId V : cfg.vertices_list) {
      CellOutcome cell;
      cell.S = S;
      cell.V = V;
      std::uint64_t cell_seed = gen::sub_seed(cfg.seed, cell_index++);
      auto t0 = std::chrono::steady_clock::now();
      try {
        cell.stats = run_cell(S, V, cfg.iterations, cell_seed, cfg.gen);
      } catch (const Error& e) {
        cell.error = e.what();
      }
      cell.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      result.cells.push_back(std::move(cell));
    }
  return result;
}

// CSV rows, one per (cell, metric); absent cells become comment lines so the
// grid position stays visible.
inline std::string write_csv(const SweepResult& r) {
  std::string out = "# sd: population\nS,V,metric,mean,sd,iters,seed\n";
  auto row = [&](const ExperimentStats& st, const char* metric, double mean,
                 double sd) {
    out += std::to_string(st.S) + "," + std::to_string(st.V) + "," + metric +
           "," + fmt_fixed6(mean) + "," + fmt_fixed6(sd) + "," +
           std::to_string(st.iterations) + "," + std::to_string(st.seed) +
           "\n";
  };
  for (const CellOutcome& c : r.cells) {
    if (!c.stats) {
      out += "# " + std::to_string(c.S) + "," + std::to_string(c.V) +
             " absent: " + c.error + "\n";
      continue;
    }
    const ExperimentStats& st = *c.stats;
    row(st, "explored_center_pct", st.mean_explored_pct_center,
        st.sd_explored_pct_center);
    row(st, "explored_centroid_pct", st.mean_explored_pct_centroid,
        st.sd_explored_pct_centroid);
    row(st, "value_ratio_pct", st.mean_value_ratio_pct, st.sd_value_ratio_pct);
    row(st, "hit_rate_pct", st.centroid_hit_rate_pct, st.sd_hit_rate_pct);
  }
  return out;
}

namespace detail {

inline std::string cell_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%11.4f", v);
  return buf;
}

inline std::string table_block(
    const SweepResult& r, const std::string& title,
    double ExperimentStats::*mean, double ExperimentStats::*sd) {
  std::string out = title + "\n";
  out += "  S\\V    ";
  for (NodeId v : r.vertices_list) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%11u", static_cast<unsigned>(v));
    out += buf;
  }
  out += "\n";
  for (std::size_t s : r.sources_list) {
    char head[32];
    std::snprintf(head, sizeof head, "%5zu    ", s);
    std::string means = head, sds = "         ";
    for (NodeId v : r.vertices_list) {
      const CellOutcome* cell = nullptr;
      for (const CellOutcome& c : r.cells)
        if (c.S == s && c.V == v) cell = &c;
      if (cell && cell->stats) {
        means += cell_num((*cell->stats).*mean);
        sds += " ±" + cell_num((*cell->stats).*sd).substr(2);
      } else {
        means += "        n/a";
        sds += "           ";
      }
    }
    out += means + "\n" + sds + "\n";
  }
  return out;
}

}  // namespace detail

// Four aligned blocks shaped like the S x V result tables: center explored %,
// centroid explored %, value ratio %, hit rate %. Means with ±sd beneath.
inline std::string write_text_table(const SweepResult& r) {
  std::string out;
  out += detail::table_block(r, "center explored % (early/full)",
                             &ExperimentStats::mean_explored_pct_center,
                             &ExperimentStats::sd_explored_pct_center);
  out += "\n";
  out += detail::table_block(r, "centroid explored % (early/full-center)",
                             &ExperimentStats::mean_explored_pct_centroid,
                             &ExperimentStats::sd_explored_pct_centroid);
  out += "\n";
  out += detail::table_block(r, "centroid value ratio % (early/oracle)",
                             &ExperimentStats::mean_value_ratio_pct,
                             &ExperimentStats::sd_value_ratio_pct);
  out += "\n";
  out += detail::table_block(r, "centroid hit rate %",
                             &ExperimentStats::centroid_hit_rate_pct,
                             &ExperimentStats::sd_hit_rate_pct);
  return out;
}

struct TrendCheck {
  std::string name;
  bool pass;
};

struct TrendReport {
  std::vector<TrendCheck> checks;

  bool all_pass() const {
    for (const TrendCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Monotonicity families over the full grid (weak inequalities):
//   center/centroid explored %: non-decreasing in S, non-increasing in V;
//   hit rate: non-increasing in V.
// Derives the sorted S and V axes from the stats themselves and reports a
// failing check for any missing grid cell.
inline TrendReport trend_checks(const std::vector<ExperimentStats>& stats) {
  TrendReport report;
  std::vector<std::size_t> ss;
  std::vector<NodeId> vs;
  for (const ExperimentStats& st : stats) {
    ss.push_back(st.S);
    vs.push_back(st.V);
  }
  std::sort(ss.begin(), ss.end());
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

  auto find = [&](std::size_t s, NodeId v) -> const ExperimentStats* {
    for (const ExperimentStats& st : stats)
      if (st.S == s && st.V == v) return &st;
    return nullptr;
  };
  for (std::size_t s : ss)
    for (NodeId v : vs)
      if (!find(s, v))
        report.checks.push_back({"grid cell S=" + std::to_string(s) +
                                     " V=" + std::to_string(v) + " present",
                                 false});
  if (!report.checks.empty()) return report;

  auto add = [&](const std::string& name, bool pass) {
    report.checks.push_back({name, pass});
  };
  auto tag = [](std::size_t s) { return std::to_string(s); };

  for (NodeId v : vs)
    for (std::size_t i = 0; i + 1 < ss.size(); ++i) {
      const ExperimentStats* a = find(ss[i], v);
      const ExperimentStats* b = find(ss[i + 1], v);
      std::string suffix =
          " S " + tag(ss[i]) + "->" + tag(ss[i + 1]) + " @ V=" +
          std::to_string(v);
      add("center_pct nondecreasing" + suffix,
          b->mean_explored_pct_center >= a->mean_explored_pct_center);
      add("centroid_pct nondecreasing" + suffix,
          b->mean_explored_pct_centroid >= a->mean_explored_pct_centroid);
    }
  for (std::size_t s : ss)
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      const ExperimentStats* a = find(s, vs[i]);
      const ExperimentStats* b = find(s, vs[i + 1]);
      std::string suffix = " V " + std::to_string(vs[i]) + "->" +
                           std::to_string(vs[i + 1]) + " @ S=" + tag(s);
      add("center_pct nonincreasing" + suffix,
          b->mean_explored_pct_center <= a->mean_explored_pct_center);
      add("centroid_pct nonincreasing" + suffix,
          b->mean_explored_pct_centroid <= a->mean_explored_pct_centroid);
      add("hit_rate nonincreasing" + suffix,
          b->centroid_hit_rate_pct <= a->centroid_hit_rate_pct);
    }
  return report;
}

}  // namespace meetpoint::bench
