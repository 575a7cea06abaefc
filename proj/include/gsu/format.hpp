#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace gsu {

// 17 significant digits: parses back to the identical double.
inline std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace gsu
