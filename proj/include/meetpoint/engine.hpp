#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "meetpoint/errors.hpp"
#include "meetpoint/graph.hpp"
#include "meetpoint/rng.hpp"
#include "meetpoint/trace.hpp"

// Alternating multi-source search. One Dijkstra-style search per source takes
// turns extracting one node per round; a node finalized by every source is an
// "intersection node" and a candidate meeting point. Strategies:
//   full:  every search runs to exhaustion, then the best intersection wins.
//   early: center mode stops a source once it extracts a key strictly above
//          the best max-distance seen so far (optimal: any unfinalized node
//          would only raise the max); centroid mode stops a source once it
//          extracts an intersection node whose sum strictly exceeds the best
//          sum so far (a heuristic, possibly suboptimal).
//   astar: extraction ordered by g + h with a geometric h; no early stop.

namespace meetpoint {

enum class Objective { center, centroid };
enum class Strategy { full, early, astar };

struct AStarConfig {
  // h(v) = max over sources of euclid(v, s_j) / speed_divisor. Admissibility
  // depends on the graph's weights; check with admissibility_check before
  // trusting results. enabled = false forces h = 0 and lifts the coordinate
  // requirement.
  double speed_divisor = 1.0;
  bool enabled = true;
};

struct EngineOptions {
  Objective objective = Objective::center;
  Strategy strategy = Strategy::full;
  bool record_trace = false;
  AStarConfig astar{};        // consulted only when strategy == astar
  std::uint64_t budget = 0;   // astar only: total extraction cap; 0 means S*N
};

struct SolveResult {
  NodeId node = 0;
  double value = kInf;
  std::vector<double> per_source_dist;  // final distances to `node`
  std::uint64_t explored = 0;           // finalizing extractions, all sources
  std::uint64_t explored_possible = 0;  // S * N
  std::optional<std::vector<TraceEvent>> trace;
};

// Frontier entry. key orders extraction ((key, node) ascending); g is the
// tentative distance at push time, so an entry is stale iff g != dist[node].
// Dijkstra uses key == g; A* uses key == g + h(node).
struct QueueEntry {
  double key;
  NodeId node;
  double g;
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.key != b.key) return a.key > b.key;
    return a.node > b.node;
  }
};

// One source's search state. Stale queue entries are discarded lazily at pop
// time instead of decrease-key.
struct PerSourceSearch {
  NodeId source = 0;
  std::vector<double> dist;
  std::vector<bool> visited;  // finalized; dist of a visited node is final
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> frontier;
  bool terminated = false;
  std::uint64_t extracted_count = 0;
  double last_key = 0;  // most recent extraction key
};

// Which sources have finalized each node, plus the best intersection seen.
// A node is an intersection node iff its bitmask is all-ones; ties on the
// objective go to the lowest node id.
class IntersectionTracker {
 public:
  IntersectionTracker(NodeId n, std::size_t source_count)
      : source_count_(source_count),
        words_((source_count + 63) / 64),
        seen_by_(static_cast<std::size_t>(n) * words_, 0),
        seen_count_(n, 0) {}

  // Marks v finalized by source j; true when v just became an intersection.
  bool mark(NodeId v, std::size_t j) {
    std::uint64_t& word = seen_by_[v * words_ + j / 64];
    std::uint64_t bit = 1ull << (j % 64);
    if (word & bit) return false;
    word |= bit;
    return ++seen_count_[v] == source_count_;
  }

  bool is_intersection(NodeId v) const {
    return seen_count_[v] == source_count_;
  }

  // Offers an intersection node's objective; true if it became the best.
  bool offer(NodeId v, double value) {
    if (value < best_value_ ||
        (value == best_value_ && (!best_node_ || v < *best_node_))) {
      best_value_ = value;
      best_node_ = v;
      return true;
    }
    return false;
  }

  // Running minimax (center mode) or minsum (centroid mode); kInf until the
  // first intersection node appears.
  double best_value() const { return best_value_; }
  std::optional<NodeId> best_node() const { return best_node_; }

 private:
  std::size_t source_count_;
  std::size_t words_;
  std::vector<std::uint64_t> seen_by_;
  std::vector<std::uint32_t> seen_count_;
  std::optional<NodeId> best_node_;
  double best_value_ = kInf;
};

class Engine {
 public:
  Engine(const Graph& g, const SourceSet& s, EngineOptions opts)
      : g_(&g),
        sources_(validate_sources(g, s)),
        opts_(opts),
        tracker_(g.n(), sources_.size()) {
    bool astar = opts_.strategy == Strategy::astar;
    if (astar && opts_.astar.enabled) {
      if (!g.has_coords()) throw MissingCoordinates();
      if (!(opts_.astar.speed_divisor > 0))
        throw ValidationError("speed_divisor must be positive");
    }
    if (astar) {
      budget_ = opts_.budget ? opts_.budget
                             : static_cast<std::uint64_t>(sources_.size()) *
                                   g.n();
      h_.assign(g.n(), 0);
      if (opts_.astar.enabled) {
        for (NodeId v = 0; v < g.n(); ++v) {
          double h = 0;
          for (NodeId src : sources_.nodes) {
            double dx = g.coords()[v].x - g.coords()[src].x;
            double dy = g.coords()[v].y - g.coords()[src].y;
            double e = std::hypot(dx, dy) / opts_.astar.speed_divisor;
            if (e > h) h = e;
          }
          h_[v] = h;
        }
      }
    }
    searches_.resize(sources_.size());
    for (std::size_t j = 0; j < sources_.size(); ++j) {
      PerSourceSearch& ps = searches_[j];
      ps.source = sources_.nodes[j];
      ps.dist.assign(g.n(), kInf);
      ps.visited.assign(g.n(), false);
      ps.dist[ps.source] = 0;
      ps.frontier.push(QueueEntry{astar ? h_[ps.source] : 0, ps.source, 0});
    }
  }

  bool done() const { return done_; }
  std::uint64_t round() const { return round_; }
  std::uint64_t explored() const { return explored_; }
  const PerSourceSearch& source_state(std::size_t j) const {
    return searches_[j];
  }
  const IntersectionTracker& tracker() const { return tracker_; }

  // One Selection + Relaxation per non-terminated source, in source order.
  // Returns the round's events (recorded into the result trace as well when
  // record_trace is set). No-op once done.
  std::vector<TraceEvent> step_round() {
    std::vector<TraceEvent> events;
    step_round_impl(&events);
    if (opts_.record_trace)
      trace_.insert(trace_.end(), events.begin(), events.end());
    return events;
  }

  // Steps to completion and builds the result.
  SolveResult run() {
    while (!done_) {
      if (opts_.record_trace)
        step_round();
      else
        step_round_impl(nullptr);
    }
    if (!tracker_.best_node()) throw NoIntersection();
    SolveResult r;
    r.node = *tracker_.best_node();
    r.value = tracker_.best_value();
    r.per_source_dist.reserve(searches_.size());
    for (const PerSourceSearch& ps : searches_)
      r.per_source_dist.push_back(ps.dist[r.node]);
    r.explored = explored_;
    r.explored_possible =
        static_cast<std::uint64_t>(searches_.size()) * g_->n();
    if (opts_.record_trace) {
      trace_.push_back(TraceEvent{round_, -1, TraceKind::finished, r.node,
                                  r.value});
      r.trace = std::move(trace_);
      trace_.clear();
    }
    return r;
  }

 private:
  double objective_at(NodeId v) const {
    double acc = 0;
    for (const PerSourceSearch& ps : searches_) {
      double d = ps.dist[v];
      if (opts_.objective == Objective::center)
        acc = d > acc ? d : acc;
      else
        acc += d;
    }
    return acc;
  }

  void emit(std::vector<TraceEvent>* out, int source_index, TraceKind kind,
            NodeId node, double value) {
    if (out)
      out->push_back(TraceEvent{round_, source_index, kind, node, value});
  }

  void step_round_impl(std::vector<TraceEvent>* out) {
    if (done_) return;
    ++round_;
    bool all_terminated = true;
    for (std::size_t j = 0; j < searches_.size(); ++j) {
      PerSourceSearch& ps = searches_[j];
      if (ps.terminated) continue;
      int sj = static_cast<int>(j);

      QueueEntry cur{};
      bool fresh = false;
      while (!ps.frontier.empty()) {
        cur = ps.frontier.top();
        ps.frontier.pop();
        if (ps.visited[cur.node] || cur.g != ps.dist[cur.node]) continue;
        fresh = true;
        break;
      }
      if (!fresh) {
        ps.terminated = true;
        emit(out, sj, TraceKind::source_terminated, ps.source, ps.last_key);
        continue;
      }

      NodeId v = cur.node;
      ps.visited[v] = true;
      ps.last_key = cur.key;
      ++ps.extracted_count;
      ++explored_;
      emit(out, sj, TraceKind::extract, v, cur.key);

      for (const Edge& e : g_->adjacency(v)) {
        double nd = ps.dist[v] + e.weight;
        if (nd < ps.dist[e.to]) {
          ps.dist[e.to] = nd;
          double key = opts_.strategy == Strategy::astar ? nd + h_[e.to] : nd;
          ps.frontier.push(QueueEntry{key, e.to, nd});
          emit(out, sj, TraceKind::relax, e.to, nd);
        }
      }

      bool became_intersection = tracker_.mark(v, j);
      double obj = 0;
      if (became_intersection) {
        obj = objective_at(v);
        emit(out, sj, TraceKind::intersection, v, obj);
        if (tracker_.offer(v, obj))
          emit(out, sj,
               opts_.objective == Objective::center
                   ? TraceKind::minimax_update
                   : TraceKind::minsum_update,
               v, tracker_.best_value());
      }

      if (opts_.strategy == Strategy::early) {
        if (opts_.objective == Objective::center) {
          // Alg. 3: stop once this source's keys leave [0, minimax]; every
          // unfinalized node would only worsen the max. Strict comparison:
          // keys equal to minimax can still realize the optimum.
          if (cur.key > tracker_.best_value()) {
            ps.terminated = true;
            emit(out, sj, TraceKind::source_terminated, v, cur.key);
          }
        } else {
          // Alg. 4: stop only on an intersection node whose sum exceeds
          // minsum. Non-intersection extractions never stop a source.
          if (became_intersection && obj > tracker_.best_value()) {
            ps.terminated = true;
            emit(out, sj, TraceKind::source_terminated, v, obj);
          }
        }
      } else if (opts_.strategy == Strategy::astar && explored_ >= budget_) {
        for (PerSourceSearch& q : searches_) q.terminated = true;
        break;
      }

      if (!ps.terminated) all_terminated = false;
    }
    if (opts_.strategy == Strategy::astar) {
      all_terminated = true;
      for (const PerSourceSearch& q : searches_)
        if (!q.terminated) all_terminated = false;
    }
    done_ = all_terminated;
  }

  const Graph* g_;
  SourceSet sources_;
  EngineOptions opts_;
  std::vector<PerSourceSearch> searches_;
  IntersectionTracker tracker_;
  std::vector<double> h_;
  std::vector<TraceEvent> trace_;
  std::uint64_t round_ = 0;
  std::uint64_t explored_ = 0;
  std::uint64_t budget_ = 0;
  bool done_ = false;
};

inline SolveResult solve_center_full(const Graph& g, const SourceSet& s,
                                     bool trace = false) {
  return Engine(g, s, {Objective::center, Strategy::full, trace}).run();
}

inline SolveResult solve_center_early(const Graph& g, const SourceSet& s,
                                      bool trace = false) {
  return Engine(g, s, {Objective::center, Strategy::early, trace}).run();
}

inline SolveResult solve_centroid_full(const Graph& g, const SourceSet& s,
                                       bool trace = false) {
  return Engine(g, s, {Objective::centroid, Strategy::full, trace}).run();
}

inline SolveResult solve_centroid_early(const Graph& g, const SourceSet& s,
                                        bool trace = false) {
  return Engine(g, s, {Objective::centroid, Strategy::early, trace}).run();
}

inline SolveResult solve_center_astar(const Graph& g, const SourceSet& s,
                                      AStarConfig cfg, bool trace = false) {
  EngineOptions opts;
  opts.objective = Objective::center;
  opts.strategy = Strategy::astar;
  opts.record_trace = trace;
  opts.astar = cfg;
  return Engine(g, s, opts).run();
}

struct AdmissibilityViolation {
  NodeId from;
  NodeId to;
  double heuristic;  // euclid(from, to) / speed_divisor
  double distance;   // true shortest distance from -> to
};

struct AdmissibilityReport {
  std::uint64_t checked = 0;
  bool exhaustive = false;
  std::vector<AdmissibilityViolation> violations;

  bool admissible() const { return violations.empty(); }
};

// Verifies euclid(u, v) / speed_divisor <= d(u, v) over node pairs. Checks
// all n*(n-1) ordered pairs when samples covers them, otherwise `samples`
// seeded random pairs (with replacement). Unreachable pairs (d = inf) cannot
// violate.
inline AdmissibilityReport admissibility_check(const Graph& g, AStarConfig cfg,
                                               std::uint64_t samples,
                                               std::uint64_t seed = 0x5EEDull) {
  if (!g.has_coords()) throw MissingCoordinates();
  if (!(cfg.speed_divisor > 0))
    throw ValidationError("speed_divisor must be positive");

  // Pair list grouped by tail so each tail needs one full search.
  std::vector<std::vector<NodeId>> targets(g.n());
  AdmissibilityReport report;
  std::uint64_t all_pairs =
      static_cast<std::uint64_t>(g.n()) * (g.n() > 0 ? g.n() - 1 : 0);
  if (g.n() >= 2 && samples >= all_pairs) {
    report.exhaustive = true;
    for (NodeId u = 0; u < g.n(); ++u)
      for (NodeId v = 0; v < g.n(); ++v)
        if (u != v) targets[u].push_back(v);
  } else if (g.n() >= 2) {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      NodeId u = static_cast<NodeId>(uniform_below(rng, g.n()));
      NodeId v = static_cast<NodeId>(uniform_below(rng, g.n() - 1));
      if (v >= u) ++v;
      targets[u].push_back(v);
    }
  }

  for (NodeId u = 0; u < g.n(); ++u) {
    if (targets[u].empty()) continue;
    Engine probe(g, SourceSet{{u}}, {Objective::center, Strategy::full});
    probe.run();
    const std::vector<double>& dist = probe.source_state(0).dist;
    for (NodeId v : targets[u]) {
      ++report.checked;
      double dx = g.coords()[v].x - g.coords()[u].x;
      double dy = g.coords()[v].y - g.coords()[u].y;
      double h = std::hypot(dx, dy) / cfg.speed_divisor;
      if (h > dist[v])
        report.violations.push_back(AdmissibilityViolation{u, v, h, dist[v]});
    }
  }
  return report;
}

}  // namespace meetpoint
