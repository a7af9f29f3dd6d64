#pragma once

#include <charconv>
#include <string>

namespace connkit {

// Shortest representation that round-trips the exact double.  Used for all
// human-facing numeric output so text and JSON reports carry the same values.
inline std::string format_double(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace connkit
