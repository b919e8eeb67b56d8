// meetpoint: find the fair meeting node for several sources in a weighted
// graph. Subcommands: solve, gen, bench, trace, check-astar. Exit codes:
// 0 success, 1 usage/config/I-O failure, 2 no node reachable from all
// sources. Human-readable report goes to stdout; machine artifacts go under
// the path flags (--out, --trace, --dot-dir) or, for gen/trace without a
// path flag, to stdout as the sole output.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "meetpoint/bench.hpp"
#include "meetpoint/engine.hpp"
#include "meetpoint/graph_io.hpp"
#include "meetpoint/graphgen.hpp"
#include "meetpoint/numfmt.hpp"
#include "meetpoint/oracle.hpp"

namespace {

using namespace meetpoint;

std::vector<std::uint64_t> parse_csv_u64(const std::string& text,
                                         const char* what) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(std::string("cannot parse ") + what + ": '" +
                            item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ValidationError(std::string(what) + " is empty");
  return out;
}

SourceSet parse_sources(const std::string& csv) {
  SourceSet s;
  for (std::uint64_t v : parse_csv_u64(csv, "sources"))
    s.nodes.push_back(static_cast<NodeId>(v));
  return s;
}

std::string join_sources(const SourceSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.nodes[i]);
  }
  return out;
}

// Explicit seed, or a random one announced on stderr so the run can be
// reproduced later.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  std::uint64_t chosen =
      (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "# seed: " << chosen << "\n";
  return chosen;
}

Objective parse_objective(const std::string& name) {
  return name == "center" ? Objective::center : Objective::centroid;
}

struct SolveArgs {
  std::string graph;
  std::string sources;
  std::string objective = "center";
  std::string strategy = "full";
  double speed_divisor = 1.0;
  bool reverse = false;
};

int cmd_solve(const SolveArgs& args) {
  Graph g = load_graph(args.graph);
  if (args.reverse) g = reverse_graph(g);
  SourceSet sources = parse_sources(args.sources);

  EngineOptions opts;
  opts.objective = parse_objective(args.objective);
  if (args.strategy == "early") opts.strategy = Strategy::early;
  if (args.strategy == "astar") {
    opts.strategy = Strategy::astar;
    opts.astar = AStarConfig{args.speed_divisor, true};
  }
  SolveResult r = Engine(g, sources, opts).run();

  // Exploration percentage is always relative to the full center run, the
  // shared baseline every reported percentage normalizes against.
  std::uint64_t baseline =
      (opts.strategy == Strategy::full && opts.objective == Objective::center)
          ? r.explored
          : solve_center_full(g, sources).explored;

  std::cout << "node=" << r.node << " value=" << fmt_shortest(r.value) << "\n";
  std::string dists;
  for (std::size_t j = 0; j < r.per_source_dist.size(); ++j) {
    if (j) dists += ",";
    dists += fmt_shortest(r.per_source_dist[j]);
  }
  std::cout << "dists=" << dists << "\n";
  std::cout << "explored=" << r.explored << " possible=" << r.explored_possible
            << "\n";
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.2f",
                100.0 * static_cast<double>(r.explored) /
                    static_cast<double>(baseline));
  std::cout << "explored_pct=" << pct
            << " (baseline: full center explored=" << baseline << ")\n";
  return 0;
}

struct GenArgs {
  NodeId vertices = 0;
  std::size_t num_sources = 2;
  std::optional<std::uint64_t> edges;
  std::optional<double> density;
  std::uint64_t weight_min = 1;
  std::uint64_t weight_max = 100;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  gen::GenConfig cfg;
  cfg.n = args.vertices;
  cfg.s = args.num_sources;
  cfg.weight_min = args.weight_min;
  cfg.weight_max = args.weight_max;
  cfg.seed = resolve_seed(args.seed);
  cfg.m = args.edges;
  cfg.density = args.density;
  if (!cfg.m && !cfg.density) {
    std::uint64_t pairs =
        static_cast<std::uint64_t>(cfg.n) * (cfg.n ? cfg.n - 1 : 0);
    cfg.m = std::min<std::uint64_t>(4ull * cfg.n, pairs);
  }
  auto [g, sources] = gen::generate(cfg);
  std::string text = "# sources: " + join_sources(sources) + "\n" +
                     save_graph(g);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(args.out, std::ios::binary);
    if (!f) throw Error("cannot write: " + args.out);
    f << text;
    std::cout << "wrote " << args.out << "\n";
  }
  return 0;
}

struct BenchArgs {
  std::string sources_list = "2,3,5,10";
  std::string vertices_list = "20,50,100,500";
  std::uint64_t iterations = 1000;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> edges;
  std::optional<double> density;
  std::string out = ".";
  bool check_trends = false;
};

int cmd_bench(const BenchArgs& args) {
  bench::SweepConfig cfg;
  cfg.sources_list.clear();
  for (std::uint64_t s : parse_csv_u64(args.sources_list, "sources-list"))
    cfg.sources_list.push_back(s);
  cfg.vertices_list.clear();
  for (std::uint64_t v : parse_csv_u64(args.vertices_list, "vertices-list"))
    cfg.vertices_list.push_back(static_cast<NodeId>(v));
  cfg.iterations = args.iterations;
  cfg.seed = resolve_seed(args.seed);
  cfg.gen.m = args.edges;
  cfg.gen.density = args.density;

  bench::SweepResult result = bench::run_sweep(cfg);

  std::filesystem::create_directories(args.out);
  std::string csv_path = args.out + "/bench.csv";
  std::string table_path = args.out + "/bench.txt";
  {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw Error("cannot write: " + csv_path);
    csv << bench::write_csv(result);
    std::ofstream table(table_path, std::ios::binary);
    if (!table) throw Error("cannot write: " + table_path);
    table << bench::write_text_table(result);
  }

  double total_seconds = 0;
  for (const bench::CellOutcome& c : result.cells) {
    total_seconds += c.seconds;
    std::cout << "S=" << c.S << " V=" << c.V << " ";
    if (c.stats) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "ok (%.2fs)", c.seconds);
      std::cout << buf << "\n";
    } else {
      std::cout << "absent: " << c.error << "\n";
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", total_seconds);
  std::cout << "total " << buf << "s; wrote " << csv_path << " and "
            << table_path << "\n";

  if (args.check_trends) {
    bench::TrendReport report = bench::trend_checks(result.stats());
    int failed = 0;
    for (const bench::TrendCheck& c : report.checks)
      if (!c.pass) {
        ++failed;
        std::cout << "trend FAIL: " << c.name << "\n";
      }
    std::cout << "trend checks: " << (report.checks.size() - failed) << "/"
              << report.checks.size() << " passed\n";
    if (!report.all_pass()) return 1;
  }
  return 0;
}

struct TraceArgs {
  std::string graph;
  std::string sources;
  std::string objective = "center";
  std::string strategy = "early";
  double speed_divisor = 1.0;
  std::string trace_path;
  std::string dot_dir;
  bool reverse = false;
};

void write_dot_snapshot(const Graph& g, const Engine& e,
                        const SourceSet& sources, const std::string& dir,
                        std::uint64_t round) {
  std::vector<std::string> labels;
  labels.reserve(g.n());
  for (NodeId v = 0; v < g.n(); ++v) {
    std::string label = std::to_string(v);
    for (std::size_t j = 0; j < sources.size(); ++j)
      label += "\\ns" + std::to_string(j) + "=" +
               fmt_shortest(e.source_state(j).dist[v]);
    labels.push_back(label);
  }
  char name[32];
  std::snprintf(name, sizeof name, "/round_%04llu.dot",
                static_cast<unsigned long long>(round));
  std::string path = dir + name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write: " + path);
  f << export_dot(g, labels);
}

int cmd_trace(const TraceArgs& args) {
  Graph g = load_graph(args.graph);
  if (args.reverse) g = reverse_graph(g);
  SourceSet sources = parse_sources(args.sources);

  EngineOptions opts;
  opts.objective = parse_objective(args.objective);
  if (args.strategy == "early") opts.strategy = Strategy::early;
  if (args.strategy == "astar") {
    opts.strategy = Strategy::astar;
    opts.astar = AStarConfig{args.speed_divisor, true};
  }
  opts.record_trace = true;

  Engine engine(g, sources, opts);
  if (!args.dot_dir.empty()) {
    std::filesystem::create_directories(args.dot_dir);
    write_dot_snapshot(g, engine, sources, args.dot_dir, 0);
  }
  while (!engine.done()) {
    engine.step_round();
    if (!args.dot_dir.empty())
      write_dot_snapshot(g, engine, sources, args.dot_dir, engine.round());
  }
  SolveResult r = engine.run();

  if (args.trace_path.empty()) {
    write_trace(std::cout, *r.trace);
    std::cerr << "node=" << r.node << " value=" << fmt_shortest(r.value)
              << "\n";
  } else {
    std::ofstream f(args.trace_path, std::ios::binary);
    if (!f) throw Error("cannot write: " + args.trace_path);
    write_trace(f, *r.trace);
    std::cout << "node=" << r.node << " value=" << fmt_shortest(r.value)
              << "\n";
    std::cout << "wrote " << args.trace_path << "\n";
  }
  return 0;
}

struct CheckAStarArgs {
  std::string graph;
  double speed_divisor = 1.0;
  std::uint64_t samples = 10000;
  std::optional<std::uint64_t> seed;
};

int cmd_check_astar(const CheckAStarArgs& args) {
  Graph g = load_graph(args.graph);
  AdmissibilityReport rep =
      args.seed ? admissibility_check(g, AStarConfig{args.speed_divisor, true},
                                      args.samples, *args.seed)
                : admissibility_check(g, AStarConfig{args.speed_divisor, true},
                                      args.samples);
  std::cout << "checked=" << rep.checked
            << " exhaustive=" << (rep.exhaustive ? "true" : "false")
            << " violations=" << rep.violations.size()
            << " admissible=" << (rep.admissible() ? "true" : "false") << "\n";
  std::size_t shown = 0;
  for (const AdmissibilityViolation& v : rep.violations) {
    if (++shown > 10) {
      std::cout << "... " << (rep.violations.size() - 10) << " more\n";
      break;
    }
    std::cout << "  " << v.from << " -> " << v.to
              << " h=" << fmt_shortest(v.heuristic)
              << " d=" << fmt_shortest(v.distance) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fair meeting-node solver over weighted graphs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "find the center or centroid for a set of sources");
  solve->add_option("--graph", solve_args.graph, "graph file")->required();
  solve->add_option("--sources", solve_args.sources, "comma-separated ids")
      ->required();
  solve->add_option("--objective", solve_args.objective, "center|centroid")
      ->check(CLI::IsMember({"center", "centroid"}));
  solve
      ->add_option("--strategy", solve_args.strategy,
                   "full|early|astar (astar+centroid is experimental)")
      ->check(CLI::IsMember({"full", "early", "astar"}));
  solve->add_option("--speed-divisor", solve_args.speed_divisor,
                    "geometric heuristic divisor (astar)");
  solve->add_flag("--reverse", solve_args.reverse,
                  "flip every arc first (node-to-source distances)");

  GenArgs gen_args;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "generate a random benchmark instance");
  gen_cmd->add_option("--vertices", gen_args.vertices, "node count")
      ->required();
  gen_cmd->add_option("--num-sources", gen_args.num_sources, "source count");
  auto* gen_edges =
      gen_cmd->add_option("--edges", gen_args.edges, "exact arc count");
  gen_cmd->add_option("--density", gen_args.density,
                      "arc probability per ordered pair")
      ->excludes(gen_edges);
  gen_cmd->add_option("--weight-min", gen_args.weight_min, "minimum weight");
  gen_cmd->add_option("--weight-max", gen_args.weight_max, "maximum weight");
  gen_cmd->add_option("--seed", gen_args.seed, "64-bit seed");
  gen_cmd->add_option("--out", gen_args.out, "output file (default stdout)");

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "run the (sources x vertices) experiment sweep");
  bench_cmd->add_option("--sources-list", bench_args.sources_list,
                        "comma-separated source counts");
  bench_cmd->add_option("--vertices-list", bench_args.vertices_list,
                        "comma-separated vertex counts");
  bench_cmd->add_option("--iterations", bench_args.iterations,
                        "instances per cell");
  bench_cmd->add_option("--seed", bench_args.seed, "64-bit sweep seed");
  auto* bench_edges = bench_cmd->add_option(
      "--edges", bench_args.edges, "arcs per instance (default 4x vertices)");
  bench_cmd
      ->add_option("--density", bench_args.density,
                   "arc probability per ordered pair")
      ->excludes(bench_edges);
  bench_cmd->add_option("--out", bench_args.out,
                        "directory for bench.csv and bench.txt");
  bench_cmd->add_flag("--check-trends", bench_args.check_trends,
                      "fail if the expected monotone trends do not hold");

  TraceArgs trace_args;
  CLI::App* trace_cmd = app.add_subcommand(
      "trace", "emit the per-round event stream of one solve");
  trace_cmd->add_option("--graph", trace_args.graph, "graph file")->required();
  trace_cmd->add_option("--sources", trace_args.sources, "comma-separated ids")
      ->required();
  trace_cmd->add_option("--objective", trace_args.objective, "center|centroid")
      ->check(CLI::IsMember({"center", "centroid"}));
  trace_cmd->add_option("--strategy", trace_args.strategy, "full|early|astar")
      ->check(CLI::IsMember({"full", "early", "astar"}));
  trace_cmd->add_option("--speed-divisor", trace_args.speed_divisor,
                        "geometric heuristic divisor (astar)");
  trace_cmd->add_option("--trace", trace_args.trace_path,
                        "trace file (default stdout)");
  trace_cmd->add_option("--dot-dir", trace_args.dot_dir,
                        "write per-round DOT snapshots here");
  trace_cmd->add_flag("--reverse", trace_args.reverse,
                      "flip every arc first");

  CheckAStarArgs check_args;
  CLI::App* check_cmd = app.add_subcommand(
      "check-astar", "sample or enumerate heuristic admissibility");
  check_cmd->add_option("--graph", check_args.graph, "graph file")->required();
  check_cmd->add_option("--speed-divisor", check_args.speed_divisor,
                        "geometric heuristic divisor");
  check_cmd->add_option("--samples", check_args.samples,
                        "pairs to test (covers all pairs when large enough)");
  check_cmd->add_option("--seed", check_args.seed, "64-bit sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (gen_cmd->parsed()) return cmd_gen(gen_args);
    if (bench_cmd->parsed()) return cmd_bench(bench_args);
    if (trace_cmd->parsed()) return cmd_trace(trace_args);
    if (check_cmd->parsed()) return cmd_check_astar(check_args);
  } catch (const NoIntersection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
