#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace dicke {

/// Shortest decimal string that parses back to the same double. Keeps file
/// output deterministic and round-trip exact.
inline std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace dicke
