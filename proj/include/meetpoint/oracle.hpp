#pragma once

#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

#include "meetpoint/errors.hpp"
#include "meetpoint/graph.hpp"

// Brute-force ground truth. Deliberately shares nothing with the search
// engine beyond the Graph type: plain textbook Dijkstra per source plus
// Floyd-Warshall as a second, structurally different oracle, so agreement
// tests between engine and oracle are meaningful.

namespace meetpoint::oracle {

// dist[j][v] = shortest distance from sources.nodes[j] to v, kInf if
// unreachable.
struct DistanceMatrix {
  std::vector<std::vector<double>> dist;

  std::size_t source_count() const { return dist.size(); }
  std::size_t node_count() const { return dist.empty() ? 0 : dist[0].size(); }
};

inline std::vector<double> dijkstra_from(const Graph& g, NodeId src) {
  std::vector<double> dist(g.n(), kInf);
  dist[src] = 0;
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (const Edge& e : g.adjacency(u)) {
      double nd = d + e.weight;
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        pq.push({nd, e.to});
      }
    }
  }
  return dist;
}

inline DistanceMatrix full_distances(const Graph& g, const SourceSet& s) {
  DistanceMatrix dm;
  dm.dist.reserve(s.size());
  for (NodeId src : s.nodes) dm.dist.push_back(dijkstra_from(g, src));
  return dm;
}

// O(V^3) all-pairs check, capped because it is only ever a test oracle.
inline std::vector<std::vector<double>> allpairs_floyd_warshall(
    const Graph& g, NodeId cap = 200) {
  if (g.n() > cap)
    throw CapExceeded("Floyd-Warshall oracle capped at " +
                      std::to_string(cap) + " nodes, got " +
                      std::to_string(g.n()));
  std::size_t n = g.n();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (NodeId u = 0; u < g.n(); ++u)
    for (const Edge& e : g.adjacency(u))
      if (e.weight < d[u][e.to]) d[u][e.to] = e.weight;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    }
  return d;
}

namespace detail {

template <typename Fold>
std::pair<NodeId, double> argmin_over_columns(const DistanceMatrix& dm,
                                              Fold fold) {
  NodeId best_node = 0;
  double best_value = kInf;
  bool found = false;
  for (std::size_t v = 0; v < dm.node_count(); ++v) {
    double acc = 0;
    bool finite = true;
    for (std::size_t j = 0; j < dm.source_count(); ++j) {
      double d = dm.dist[j][v];
      if (d == kInf) {
        finite = false;
        break;
      }
      acc = fold(acc, d);
    }
    if (!finite) continue;
    if (!found || acc < best_value) {
      found = true;
      best_value = acc;
      best_node = static_cast<NodeId>(v);
    }
  }
  if (!found) throw NoIntersection();
  return {best_node, best_value};
}

}  // namespace detail

// Node minimizing the maximum source distance; lowest id wins ties (the scan
// order makes that automatic).
inline std::pair<NodeId, double> oracle_center(const DistanceMatrix& dm) {
  return detail::argmin_over_columns(
      dm, [](double a, double b) { return a > b ? a : b; });
}

// Node minimizing the summed source distance; lowest id wins ties.
inline std::pair<NodeId, double> oracle_centroid(const DistanceMatrix& dm) {
  return detail::argmin_over_columns(dm,
                                     [](double a, double b) { return a + b; });
}

}  // namespace meetpoint::oracle
