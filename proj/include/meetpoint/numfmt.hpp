#pragma once

#include <charconv>
#include <string>

namespace meetpoint {

// Shortest decimal string that round-trips to the same double. Integral
// values come out bare ("4", not "4.000000"), which keeps canonical graph
// files and traces stable and human-readable. Infinity prints as "inf".
inline std::string fmt_shortest(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Fixed six decimal places, for CSV cells.
inline std::string fmt_fixed6(double v) {
  char buf[512];
  auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  return std::string(buf, r.ptr);
}

}  // namespace meetpoint
