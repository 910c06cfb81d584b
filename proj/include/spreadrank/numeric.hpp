#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace spreadrank {

inline constexpr int kComparisonDigits = 12;

/// x rounded to `digits` significant decimal digits. Scores are compared
/// through this so that sums accumulated in different orders still tie.
inline double round_significant(double x, int digits = kComparisonDigits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

}  // namespace spreadrank
