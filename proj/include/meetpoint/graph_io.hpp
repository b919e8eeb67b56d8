#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "meetpoint/errors.hpp"
#include "meetpoint/graph.hpp"
#include "meetpoint/numfmt.hpp"

namespace meetpoint {

// Text format:
//   line 1: `N M directed|undirected`
//   optional: `coords` followed by N lines `x y`
//   then M lines `u v w` (0-based ids, weight > 0)
// `#` starts a comment line; blank lines are skipped. Canonical form has
// edges sorted by (u, v, w), shortest round-trip numbers, LF endings, and no
// comments; save_graph emits exactly that.

namespace detail {

// Returns the next content line, skipping comments and blanks. line_no tracks
// the physical line of the returned content.
inline bool next_line(std::istream& in, std::string& out,
                      std::size_t& line_no) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t i = raw.find_first_not_of(" \t");
    if (i == std::string::npos || raw[i] == '#') continue;
    out = raw;
    return true;
  }
  return false;
}

template <typename T>
T parse_field(std::istringstream& ss, std::size_t line_no, const char* what) {
  T v;
  if (!(ss >> v)) throw ParseError(line_no, std::string("expected ") + what);
  return v;
}

inline void expect_line_end(std::istringstream& ss, std::size_t line_no) {
  std::string extra;
  if (ss >> extra)
    throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
}

}  // namespace detail

inline Graph load_graph(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;

  if (!detail::next_line(in, line, line_no))
    throw ParseError(1, "empty input, expected 'N M directed|undirected'");
  std::istringstream header(line);
  auto n = detail::parse_field<long long>(header, line_no, "node count");
  auto m = detail::parse_field<long long>(header, line_no, "edge count");
  auto kind = detail::parse_field<std::string>(header, line_no,
                                               "'directed' or 'undirected'");
  detail::expect_line_end(header, line_no);
  if (n < 0 || m < 0) throw ParseError(line_no, "negative count");
  bool undirected;
  if (kind == "directed")
    undirected = false;
  else if (kind == "undirected")
    undirected = true;
  else
    throw ParseError(line_no, "expected 'directed' or 'undirected', got '" +
                                  kind + "'");

  std::vector<Coord> coords;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));

  bool have_first_body_line = detail::next_line(in, line, line_no);
  if (have_first_body_line) {
    std::istringstream probe(line);
    std::string tok;
    probe >> tok;
    if (tok == "coords") {
      detail::expect_line_end(probe, line_no);
      coords.reserve(static_cast<std::size_t>(n));
      for (long long i = 0; i < n; ++i) {
        if (!detail::next_line(in, line, line_no))
          throw ParseError(line_no + 1, "expected " + std::to_string(n) +
                                            " coordinate lines");
        std::istringstream cs(line);
        double x = detail::parse_field<double>(cs, line_no, "x coordinate");
        double y = detail::parse_field<double>(cs, line_no, "y coordinate");
        detail::expect_line_end(cs, line_no);
        coords.push_back(Coord{x, y});
      }
      have_first_body_line = detail::next_line(in, line, line_no);
    }
  }

  for (long long i = 0; i < m; ++i) {
    if (i > 0 || !have_first_body_line) {
      if (!detail::next_line(in, line, line_no))
        throw ParseError(line_no + 1,
                         "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(i));
    }
    std::istringstream es(line);
    auto u = detail::parse_field<long long>(es, line_no, "edge tail id");
    auto v = detail::parse_field<long long>(es, line_no, "edge head id");
    auto w = detail::parse_field<double>(es, line_no, "edge weight");
    detail::expect_line_end(es, line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "endpoint out of range [0, " +
                                    std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (!(w > 0) || !std::isfinite(w))
      throw ParseError(line_no, "weight must be finite and positive");
    edges.push_back(Edge{static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    have_first_body_line = false;
  }

  if (have_first_body_line || detail::next_line(in, line, line_no))
    throw ParseError(line_no, "trailing content after last edge");

  return make_graph(static_cast<NodeId>(n), std::move(edges), undirected,
                    std::move(coords));
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  return load_graph(in);
}

// Canonical serialization; see format comment above.
inline std::string save_graph(const Graph& g) {
  std::vector<Edge> edges = g.input_edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to, a.weight) < std::tie(b.from, b.to, b.weight);
  });
  std::string out;
  out += std::to_string(g.n()) + " " + std::to_string(edges.size()) + " " +
         (g.undirected() ? "undirected" : "directed") + "\n";
  if (g.has_coords()) {
    out += "coords\n";
    for (const Coord& c : g.coords())
      out += fmt_shortest(c.x) + " " + fmt_shortest(c.y) + "\n";
  }
  for (const Edge& e : edges)
    out += std::to_string(e.from) + " " + std::to_string(e.to) + " " +
           fmt_shortest(e.weight) + "\n";
  return out;
}

inline void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write graph file: " + path);
  out << save_graph(g);
}

// DOT text; nodes in index order, edges in input order. Labels are emitted
// as raw DOT text apart from quote escaping, so callers may embed \n.
inline std::string export_dot(
    const Graph& g,
    const std::optional<std::vector<std::string>>& annotations = std::nullopt) {
  if (annotations && annotations->size() != g.n())
    throw ValidationError("annotation count does not match node count");
  auto escape = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"') r += '\\';
      r += c;
    }
    return r;
  };
  std::string out;
  out += g.undirected() ? "graph g {\n" : "digraph g {\n";
  for (NodeId v = 0; v < g.n(); ++v) {
    std::string label = annotations ? (*annotations)[v] : std::to_string(v);
    out += "  " + std::to_string(v) + " [label=\"" + escape(label) + "\"];\n";
  }
  const char* arrow = g.undirected() ? " -- " : " -> ";
  for (const Edge& e : g.input_edges())
    out += "  " + std::to_string(e.from) + arrow + std::to_string(e.to) +
           " [label=\"" + fmt_shortest(e.weight) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace meetpoint
