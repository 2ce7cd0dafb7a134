#pragma once

#include <charconv>
#include <string>

namespace lambertw::detail {

/// Shortest decimal form that round-trips to the same double
/// ("0.5671432904097838", "-inf", "nan").
inline std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace lambertw::detail
