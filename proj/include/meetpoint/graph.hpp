#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meetpoint/errors.hpp"

namespace meetpoint {

// Dense 0-based vertex index.
using NodeId = std::uint32_t;

// Unreached-distance sentinel. All arithmetic on distances saturates at inf
// naturally because inf + w == inf for positive finite w.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Edge {
  NodeId from;
  NodeId to;
  double weight;  // strictly positive

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Coord {
  double x;
  double y;

  friend bool operator==(const Coord&, const Coord&) = default;
};

// Immutable weighted graph. Undirected input is expanded to two directed arcs
// at construction, so every consumer sees one directed representation; the
// original edge list is kept for round-trip serialization.
class Graph {
 public:
  Graph() = default;

  NodeId n() const { return n_; }
  bool undirected() const { return undirected_; }
  bool has_coords() const { return !coords_.empty(); }

  // Arcs leaving u, in input order (mirror arcs follow their originals).
  const std::vector<Edge>& adjacency(NodeId u) const { return adj_[u]; }

  // Edges exactly as given to make_graph, before mirroring.
  const std::vector<Edge>& input_edges() const { return input_edges_; }

  const std::vector<Coord>& coords() const { return coords_; }

  std::size_t arc_count() const {
    std::size_t total = 0;
    for (const auto& a : adj_) total += a.size();
    return total;
  }

  friend Graph make_graph(NodeId n, std::vector<Edge> edges, bool undirected,
                          std::vector<Coord> coords);

 private:
  NodeId n_ = 0;
  bool undirected_ = false;
  std::vector<Edge> input_edges_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<Coord> coords_;
};

// Validates and builds. Self-loops are rejected; parallel edges are allowed
// (relaxation picks the cheaper one, so they are harmless).
inline Graph make_graph(NodeId n, std::vector<Edge> edges,
                        bool undirected = false,
                        std::vector<Coord> coords = {}) {
  if (!coords.empty() && coords.size() != n)
    throw ValidationError("coords must cover all nodes or none");
  Graph g;
  g.n_ = n;
  g.undirected_ = undirected;
  g.coords_ = std::move(coords);
  g.adj_.resize(n);
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n)
      throw ValidationError("edge endpoint out of range: " +
                            std::to_string(e.from) + " -> " +
                            std::to_string(e.to));
    if (e.from == e.to)
      throw ValidationError("self-loop at node " + std::to_string(e.from));
    if (!(e.weight > 0))
      throw ValidationError("non-positive weight on edge " +
                            std::to_string(e.from) + " -> " +
                            std::to_string(e.to));
    g.adj_[e.from].push_back(e);
    if (undirected) g.adj_[e.to].push_back(Edge{e.to, e.from, e.weight});
  }
  g.input_edges_ = std::move(edges);
  return g;
}

// Same nodes, every arc flipped. Turns "distance from source" queries into
// "distance to source" queries on directed graphs.
inline Graph reverse_graph(const Graph& g) {
  std::vector<Edge> flipped;
  flipped.reserve(g.input_edges().size());
  for (const Edge& e : g.input_edges())
    flipped.push_back(Edge{e.to, e.from, e.weight});
  return make_graph(g.n(), std::move(flipped), g.undirected(), g.coords());
}

// The S query sources. Order is meaningful: it fixes the alternation
// schedule of the multi-source search.
struct SourceSet {
  std::vector<NodeId> nodes;

  std::size_t size() const { return nodes.size(); }
};

// Returns s unchanged if it is non-empty, in range, and duplicate-free.
inline SourceSet validate_sources(const Graph& g, SourceSet s) {
  if (s.nodes.empty()) throw ValidationError("source set is empty");
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    if (s.nodes[i] >= g.n())
      throw ValidationError("source " + std::to_string(s.nodes[i]) +
                            " out of range for " + std::to_string(g.n()) +
                            " nodes");
    for (std::size_t j = i + 1; j < s.nodes.size(); ++j)
      if (s.nodes[i] == s.nodes[j])
        throw ValidationError("duplicate source " +
                              std::to_string(s.nodes[i]));
  }
  return s;
}

}  // namespace meetpoint
