#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxalg {

// All semiring arithmetic runs in the log domain: a matrix entry a > 0 is
// stored as log(a), the entry 0 as the bottom sentinel -inf. Then (x) is +
// and (+) is max, and long circuit products cannot under- or overflow.

inline constexpr double kBottom = -std::numeric_limits<double>::infinity();

// Single tolerance knob: positive values a, b are considered equal iff
// |log a - log b| <= eps. Governs critical-edge detection, eigen residuals
// and span membership alike.
inline constexpr double kDefaultEpsLog = 1e-9;

inline bool is_bottom(double logw) { return logw == kBottom; }

inline double to_log(double value) {
  return value > 0.0 ? std::log(value) : kBottom;
}

inline double to_value(double logw) {
  return is_bottom(logw) ? 0.0 : std::exp(logw);
}

// a (x) b in log domain; bottom absorbs.
inline double otimes(double a, double b) {
  if (is_bottom(a) || is_bottom(b)) return kBottom;
  return a + b;
}

// a (+) b in log domain.
inline double oplus(double a, double b) { return std::max(a, b); }

inline bool log_eq(double a, double b, double eps = kDefaultEpsLog) {
  if (is_bottom(a) || is_bottom(b)) return is_bottom(a) && is_bottom(b);
  return std::abs(a - b) <= eps;
}

}  // namespace maxalg
