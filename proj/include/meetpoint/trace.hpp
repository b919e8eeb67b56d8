#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "meetpoint/graph.hpp"
#include "meetpoint/numfmt.hpp"

namespace meetpoint {

// One step of the alternating search, in the order it happened. Serialized
// one per line as `iter source kind node value`; field order is frozen for
// golden-file tests.
//
// Meaning of (node, value) per kind:
//   extract           node pulled from the queue, its extraction key
//   relax             neighbor improved, its new tentative distance
//   intersection      node just finalized by all sources, its objective
//   minimax_update    new best center candidate, the new minimax
//   minsum_update     new best centroid candidate, the new minsum
//   source_terminated node whose extraction triggered the stop (the source's
//                     own node with its last key when the frontier drained),
//                     value is the comparison value that triggered
//   finished          chosen node and final objective, source = -1
enum class TraceKind {
  extract,
  relax,
  intersection,
  minimax_update,
  minsum_update,
  source_terminated,
  finished,
};

inline const char* to_string(TraceKind k) {
  switch (k) {
    case TraceKind::extract: return "extract";
    case TraceKind::relax: return "relax";
    case TraceKind::intersection: return "intersection";
    case TraceKind::minimax_update: return "minimax_update";
    case TraceKind::minsum_update: return "minsum_update";
    case TraceKind::source_terminated: return "source_terminated";
    case TraceKind::finished: return "finished";
  }
  return "?";
}

struct TraceEvent {
  std::uint64_t iteration;  // 1-based round of the alternation
  int source_index;         // index into SourceSet, -1 for `finished`
  TraceKind kind;
  NodeId node;
  double value;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

inline std::string to_line(const TraceEvent& e) {
  return std::to_string(e.iteration) + " " + std::to_string(e.source_index) +
         " " + to_string(e.kind) + " " + std::to_string(e.node) + " " +
         fmt_shortest(e.value);
}

inline void write_trace(std::ostream& out, const std::vector<TraceEvent>& t) {
  for (const TraceEvent& e : t) out << to_line(e) << "\n";
}

}  // namespace meetpoint
