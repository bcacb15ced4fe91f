#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace compcorr {

/// Locale-independent "%.12g"; -0 prints as 0 and NaN as an empty field.
inline std::string format_g12(double v) {
  if (std::isnan(v)) return {};
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

} // namespace compcorr
