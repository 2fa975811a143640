#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace testing {

inline double rel_err(double got, double want) {
  if (got == want) return 0.0;
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

// relative above 1, absolute below
inline double mixed_err(double got, double want) { return std::fabs(got - want) / std::max(1.0, std::fabs(want)); }

// One-sided stable law with alpha = 1/2 (Levy), written out directly.
inline double levy_pdf(double x) {
  return std::exp(-1.0 / (4.0 * x)) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(x, 1.5));
}
inline double levy_cdf(double x) { return std::erfc(1.0 / (2.0 * std::sqrt(x))); }

// alpha = 1/3 density through the modified Bessel function K_{1/3}.
inline double third_pdf(double x) {
  const double arg = 2.0 / (3.0 * std::sqrt(3.0 * x));
  return std::cyl_bessel_k(1.0 / 3.0, arg) / (3.0 * std::numbers::pi * std::pow(x, 1.5));
}

}  // namespace testing
