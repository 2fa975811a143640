#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prabhakar/mixture.hpp"
#include "prabhakar/numerics.hpp"
#include "prabhakar/random.hpp"

namespace prabhakar {

/// Three-parameter law on t > 0 with density
/// (1/Gamma(mu)) {I^nu f_alpha(.|t)}(1) t^{mu-1}.
struct MixtureLawR {
  MixtureParams params;

  double density(double t, const QuadSpec& spec = {}) const;
};

/// Four-parameter family: Q (mass 1/Gamma(beta+theta)) and its probability
/// normalisation P = Gamma(beta+theta) Q.
struct PollardLaw {
  BaseParams base;

  double q_density(double t, const QuadSpec& spec = {}) const;
  double p_density(double t, const QuadSpec& spec = {}) const;
  double moment(int n) const;
};

/// Density of Q. The nu = 0 and nu = 1 - alpha cases skip the fractional
/// integral. alpha = 1 gives a Beta shape on (0, 1); alpha = 1 with nu = 0
/// is a point mass and throws DegenerateLawError.
double q_density(const BaseParams& b, double t, const QuadSpec& spec = {});
double p_density(const BaseParams& b, double t, const QuadSpec& spec = {});

/// E[T^n] under P.
double p_moment(const BaseParams& b, int n);
/// E[T^q] under P for real q > -gamma - theta/alpha.
double p_moment_real(const BaseParams& b, double q);

/// int_0^inf t^q exp(-lambda t) p(t) dt by quadrature.
NumResult p_integral(const BaseParams& b, double q, double lambda, const QuadSpec& spec = {});

struct TiltedLaplace {
  double closed_form = 0.0;
  double numeric = 0.0;
  /// |closed - numeric| <= 1e-6 (1 + |closed|)
  bool agrees = false;
};

/// E[T^q exp(-lambda T)] under P, closed form
/// Gamma(beta+theta) Gamma(mu+q)/Gamma(mu) E^{mu+q}_{alpha, beta+alpha q+theta}(-lambda),
/// alongside the quadrature value.
TiltedLaplace p_tilted_laplace(const BaseParams& b, double q, double lambda, const QuadSpec& spec = {});

/// P_alpha(t) = 1 - F_alpha(t^{-1/alpha}).
double pollard_cdf(double alpha, double t, const QuadSpec& spec = {});

/// Polynomially tilted Pollard density; same code path as
/// p_density({alpha, 1, 1, theta}). Requires theta > -alpha.
double gml_density(double alpha, double theta, double t, const QuadSpec& spec = {});

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

enum class SamplerStrategy { ExactTransform, TiltedRejection, InverseCdf, PointMass };

const char* strategy_name(SamplerStrategy s);

/// Draws from P. The strategy is fixed at construction:
///  - (alpha, 1, 1, 0), alpha < 1: T = (E / A(phi))^{1-alpha}
///  - (alpha, 1, 1, theta), 0 < theta/alpha <= 5: rejection on the angle
///    with a Gamma(1 + theta(1-alpha)/alpha) radial part
///  - alpha = 1 with nu = 0: the point mass at 1
///  - otherwise: tabulated inverse distribution function
/// Read-only after construction; share across threads with one
/// RandomSource per thread.
class PollardSampler {
 public:
  explicit PollardSampler(const BaseParams& b, const QuadSpec& spec = {});

  SamplerStrategy strategy() const { return strategy_; }
  double operator()(RandomSource& rng) const;
  std::vector<double> sample(std::size_t n, RandomSource& rng) const;

  /// Inverse-CDF table (empty for other strategies).
  const std::vector<double>& table_cdf() const { return cdf_; }

 private:
  double draw_inverse_cdf(double u) const;
  void build_inverse_cdf(const QuadSpec& spec);

  BaseParams b_;
  SamplerStrategy strategy_;
  double tilt_c_ = 0.0;
  double log_a0_ = 0.0;

  // inverse-CDF table: node variable v (log t, or logit t on (0, 1))
  bool logit_ = false;
  std::vector<double> v_;
  std::vector<double> cdf_;
  std::vector<double> slope_;  // dv/dC at the nodes
  double lower_exponent_ = 1.0;
};

std::vector<double> p_sample(const BaseParams& b, std::size_t n, RandomSource& rng, const QuadSpec& spec = {});

// ---------------------------------------------------------------------------
// Complete monotonicity
// ---------------------------------------------------------------------------

struct CmViolation {
  int order = 0;
  std::size_t index = 0;  // grid index of the first point of the stencil
  double lambda = 0.0;
  double signed_difference = 0.0;  // (-1)^k Delta^k f / h^k
  double tolerance = 0.0;
};

struct CmReport {
  bool passed = true;
  int orders_checked = 0;
  std::optional<CmViolation> first_violation;
  /// Most negative (-1)^k Delta^k f / h^k relative to its tolerance, per order.
  std::vector<double> worst_ratio;
};

/// Finite-difference sign test on a uniform ascending grid: for k up to
/// max_order (<= 6), (-1)^k Delta^k f / h^k >= -1e-8 (2/h)^k max|f|.
/// A necessary condition for complete monotonicity, not a proof.
CmReport cm_check(const RealFunction& f, const std::vector<double>& lambda_grid, int max_order);

/// lambda -> Gamma(beta+theta) E^{mu}_{alpha,beta+theta}(-lambda), the Laplace transform of P.
double p_laplace(const BaseParams& b, double lambda, const QuadSpec& spec = {});

}  // namespace prabhakar
