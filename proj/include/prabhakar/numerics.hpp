#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <variant>

#include "prabhakar/errors.hpp"

namespace prabhakar {

/// Tolerances and budgets shared by every integral, series and inversion.
struct QuadSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  /// Truncation criterion for semi-infinite integrals: the estimated tail
  /// beyond the truncation point must fall below this fraction of |value|.
  double tail_cutoff_mass = 1e-14;
  int inversion_nodes = 48;

  /// Throws ParameterError if any invariant is broken.
  void validate() const;

  /// Same spec with both tolerances scaled by `factor`. Used for inner
  /// integrals that feed an outer adaptive rule.
  QuadSpec tightened(double factor) const;
};

struct NumResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
};

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

// ---------------------------------------------------------------------------
// Gamma function family
// ---------------------------------------------------------------------------

/// ln Gamma(z) for z > 0. Relative error below 1e-14 on [1e-6, 1e6]; the
/// zeros at z = 1 and z = 2 are handled by local expansions.
double log_gamma(double z);

/// Gamma(z) for z > 0 (overflows to +inf past z ~ 171.6).
double gamma_function(double z);

/// 1/Gamma(z) for any real z; exactly zero at the poles z = 0, -1, -2, ...
double reciprocal_gamma(double z);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

/// Algebraic behaviour of an integrand at the ends of [a, b]: the integrand
/// is declared to behave like (u - a)^left * (b - u)^right. Exponents in
/// (-1, 0) are removed by a power substitution; exponents >= 0 need no help.
struct EndpointExponents {
  double left = 0.0;
  double right = 0.0;
};

/// Adaptive 21-point Gauss-Kronrod integration of f over [a, b].
NumResult integrate(const RealFunction& f, double a, double b, const QuadSpec& spec,
                    std::optional<EndpointExponents> endpoint_singularity = std::nullopt);

struct ExponentialDecay {
  double rate;
};
struct PowerLawDecay {
  double exponent;
};

/// Decay hint for a semi-infinite integrand, plus optional layout advice:
/// `scale` is the width of the first panel and `origin_exponent` declares
/// f(t) ~ (t - lower)^origin_exponent at the lower limit.
struct DecayHint {
  std::variant<ExponentialDecay, PowerLawDecay> decay;
  double scale = 1.0;
  std::optional<double> origin_exponent;
};

/// Integral of f over (lower, inf). Panels [L, 2L], [2L, 4L], ... are added
/// until the last panel and the hinted tail bound beyond it both fall below
/// tail_cutoff_mass * |value|.
NumResult integrate_semiinf(const RealFunction& f, const QuadSpec& spec, const DecayHint& hint,
                            double lower = 0.0);

// ---------------------------------------------------------------------------
// Laplace transforms
// ---------------------------------------------------------------------------

/// Integral of exp(-s x) f(x) over (0, inf).
NumResult laplace_numeric(const RealFunction& f, double s, const QuadSpec& spec,
                          std::optional<double> origin_exponent = std::nullopt);

/// Numerical inverse Laplace transform at x > 0 on a Talbot-type cotangent
/// contour with spec.inversion_nodes nodes. F must be analytic off the
/// negative real axis. A second pass with fewer nodes guards against
/// non-convergence.
double inverse_laplace(const ComplexFunction& F, double x, const QuadSpec& spec);

}  // namespace prabhakar
