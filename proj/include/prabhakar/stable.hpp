#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "prabhakar/numerics.hpp"
#include "prabhakar/random.hpp"

namespace prabhakar {

/// One-sided stable law with Laplace transform exp(-t s^alpha).
/// alpha = 1 is the point mass at t.
struct StableLaw {
  double alpha = 0.5;
  double t = 1.0;

  void validate() const;
  bool degenerate() const { return alpha == 1.0; }
};

/// Laplace exponent psi(s) = s^alpha and the density rho with
/// psi'(s) = int exp(-s x) rho(x) dx.
struct LevyExponent {
  double alpha = 0.5;

  double psi(double s) const;
  double psi_prime(double s) const;
  /// rho(x) = alpha x^{-alpha} / Gamma(1 - alpha), 0 < alpha < 1.
  double levy_density(double x) const;
};

// ---------------------------------------------------------------------------
// Evaluation branches
// ---------------------------------------------------------------------------

/// Coefficients of the inverse-power expansion
///   g(y; nu) = sum_k (-1)^k y^{nu-1-k alpha} / (k! Gamma(nu - k alpha)),
/// which is the order-nu Riemann-Liouville integral of the standard stable
/// density (nu = 0: density, nu = 1: distribution function), together with
/// the smallest y from which the truncated expansion is trusted.
class StableSeries {
 public:
  static constexpr int kTerms = 60;

  StableSeries(double alpha, double nu);

  double alpha() const { return alpha_; }
  double nu() const { return nu_; }
  double switch_point() const { return switch_point_; }

  /// g(y; nu). Accurate for y >= switch_point(); callers decide.
  double value(double y) const;
  /// g(y; nu) without the k = 0 term, i.e. minus the upper tail when nu = 1.
  double value_without_leading(double y) const;

 private:
  double sum(double y, int first_term, double* max_term, double* last_term) const;

  double alpha_;
  double nu_;
  std::vector<double> log_abs_;
  std::vector<int> sign_;
  double switch_point_;
};

/// Cached, immutable series object for (alpha, nu). Thread safe.
std::shared_ptr<const StableSeries> stable_series(double alpha, double nu);

/// Smallest x at which the 60-term series reaches relative increment 1e-16.
double stable_switch_point(double alpha, double nu = 0.0);

/// A(phi) of the Zolotarev representation, 0 < phi < pi.
double zolotarev_A(double alpha, double phi);

/// Integral-branch density and distribution function; valid for any x > 0,
/// accurate below the switch point.
double zolotarev_pdf(double alpha, double x);
double zolotarev_cdf(double alpha, double x);

/// Number of Gauss-Legendre nodes used by the integral branch for alpha.
std::size_t zolotarev_nodes(double alpha);

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

/// f_alpha(x): series above the switch point, Zolotarev integral below.
/// 0 < alpha < 1; returns 0 for x <= 0.
double stable_pdf_standard(double alpha, double x, const QuadSpec& spec = {});

/// f_alpha(x | t) = t^{-1/alpha} f_alpha(x t^{-1/alpha}).
double stable_pdf(const StableLaw& law, double x, const QuadSpec& spec = {});

/// F_alpha(x) and 1 - F_alpha(x) for the standard law.
double stable_cdf(double alpha, double x, const QuadSpec& spec = {});
double stable_ccdf(double alpha, double x, const QuadSpec& spec = {});

/// Bisection inverse of stable_cdf.
double stable_quantile(double alpha, double p, const QuadSpec& spec = {});

/// One draw from the law (Kanter's transform of a uniform angle and an
/// exponential). alpha = 1 returns t.
double stable_sample(const StableLaw& law, RandomSource& rng);

/// x f(x|t) - alpha t {I^{1-alpha} f(.|t)}(x), with the fractional integral
/// computed by direct quadrature.
double id_identity_residual(double alpha, double t, double x, const QuadSpec& spec = {});

}  // namespace prabhakar
