#pragma once

#include <complex>

#include "prabhakar/numerics.hpp"

namespace prabhakar {

/// Parameters of E^gamma_{alpha,beta}(z) = sum_k (gamma)_k z^k / (k! Gamma(alpha k + beta)).
struct PrabhakarTriple {
  double alpha = 0.5;
  double beta = 1.0;
  double gamma = 1.0;

  /// alpha >= 0, beta > 0, gamma > 0.
  void validate() const;
};

/// |z| bound of the power-series route.
inline constexpr double kSeriesZMax = 30.0;
/// The series route refuses when its round-off estimate exceeds this
/// fraction of max(1, |value|).
inline constexpr double kSeriesCancellationBudget = 1e-8;

struct SeriesResult {
  double value = 0.0;
  /// Round-off (from the sum of |terms|) plus truncation estimate.
  double err_estimate = 0.0;
  double abs_sum = 0.0;
  int terms = 0;
};

/// Power series with Neumaier summation. Enforces |z| <= kSeriesZMax (and
/// |z| < 1 when alpha = 0) but reports rather than refuses cancellation.
SeriesResult prabhakar_series_detail(const PrabhakarTriple& p, double z);

/// E^gamma_{alpha,beta}(z) by the series. Throws RouteError past the |z|
/// bound or when cancellation exceeds kSeriesCancellationBudget.
double prabhakar_series(const PrabhakarTriple& p, double z);

/// E_alpha(z) = E^1_{alpha,1}(z).
double ml1(double alpha, double z);

/// x^{beta-1} E^gamma_{alpha,beta}(-lambda x^alpha) by the series.
double prabhakar_kernel(const PrabhakarTriple& p, double lambda, double x);

/// s^{alpha gamma - beta} / (lambda + s^alpha)^gamma, s > 0.
double prabhakar_laplace_closed(const PrabhakarTriple& p, double lambda, double s);
/// Principal-branch continuation used by the inversion route.
std::complex<double> prabhakar_laplace_closed(const PrabhakarTriple& p, double lambda, std::complex<double> s);

/// The kernel at x by numerical Laplace inversion of the closed form.
double prabhakar_via_inversion(const PrabhakarTriple& p, double lambda, double x, const QuadSpec& spec = {});

/// E^gamma_{alpha,beta}(z): the series when its error estimate is within
/// spec.rel_tol * max(1, |value|), otherwise inversion (z < 0 only).
double prabhakar_function(const PrabhakarTriple& p, double z, const QuadSpec& spec = {});

}  // namespace prabhakar
