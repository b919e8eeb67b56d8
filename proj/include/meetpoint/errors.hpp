#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meetpoint {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed graph file. line is 1-based and refers to the physical input line.
struct ParseError : Error {
  ParseError(std::size_t line_, const std::string& what_)
      : Error("parse error at line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
  std::size_t line;
};

// Bad arguments: out-of-range node, duplicate source, non-positive weight, ...
struct ValidationError : Error {
  using Error::Error;
};

// No node is reachable from every source, so neither objective has a value.
struct NoIntersection : Error {
  NoIntersection() : Error("no node is reachable from all sources") {}
};

// A geometric heuristic was requested on a graph without coordinates.
struct MissingCoordinates : Error {
  MissingCoordinates() : Error("graph has no coordinates") {}
};

// The generator kept producing graphs with no intersection node.
struct RejectionBudgetExceeded : Error {
  explicit RejectionBudgetExceeded(std::size_t attempts)
      : Error("no viable instance after " + std::to_string(attempts) +
              " attempts") {}
};

// Guard on the O(V^3) all-pairs oracle.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace meetpoint
