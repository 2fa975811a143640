#include <cmath>
#include <limits>
#include <numbers>

#include "prabhakar/numerics.hpp"

namespace prabhakar {

NumResult laplace_numeric(const RealFunction& f, double s, const QuadSpec& spec,
                          std::optional<double> origin_exponent) {
  if (!(s > 0.0)) throw DomainError("laplace_numeric requires s > 0");
  RealFunction g = [&](double x) {
    const double e = std::exp(-s * x);
    return e == 0.0 ? 0.0 : e * f(x);
  };
  DecayHint hint{ExponentialDecay{s}, 1.0 / s, origin_exponent};
  return integrate_semiinf(g, spec, hint);
}

namespace {

struct TalbotSum {
  double value;
  double magnitude;  // sum of |contributions|, the round-off scale
};

// Optimised cotangent contour
//   s(th) = (N/x) (a th cot(b th) + c + i d th),  th in (-pi, pi),
// midpoint rule; conjugate symmetry halves the work.
TalbotSum talbot(const ComplexFunction& F, double x, int n) {
  constexpr double a = 0.5017, b = 0.6407, c = -0.6122, d = 0.2645;
  const double scale = n / x;
  double sum = 0.0;
  double mag = 0.0;
  for (int k = n / 2; k < n; ++k) {
    const double th = -std::numbers::pi + (k + 0.5) * 2.0 * std::numbers::pi / n;
    const double cot = std::cos(b * th) / std::sin(b * th);
    const double sn = std::sin(b * th);
    const std::complex<double> s(scale * (a * th * cot + c), scale * d * th);
    const std::complex<double> ds(scale * (a * cot - a * b * th / (sn * sn)), scale * d);
    const std::complex<double> w = std::exp(s * x) * F(s) * ds;
    sum += w.imag();
    mag += std::abs(w);
  }
  return {2.0 * sum / n, 2.0 * mag / n};
}

}  // namespace

double inverse_laplace(const ComplexFunction& F, double x, const QuadSpec& spec) {
  if (!(x > 0.0)) throw DomainError("inverse_laplace requires x > 0");
  spec.validate();
  const int n = spec.inversion_nodes + spec.inversion_nodes % 2;
  const int n_check = std::max(8, (3 * n / 4) & ~1);
  const TalbotSum main = talbot(F, x, n);
  const TalbotSum check = talbot(F, x, n_check);
  if (!std::isfinite(main.value)) {
    throw ConvergenceError("inverse Laplace transform produced a non-finite value", main.value,
                           std::numeric_limits<double>::infinity());
  }
  const double diff = std::fabs(main.value - check.value);
  const double tol = std::max(1e3 * spec.rel_tol * std::fabs(main.value),
                              1e4 * std::numeric_limits<double>::epsilon() * main.magnitude);
  if (diff > tol) {
    throw ConvergenceError("inverse Laplace transform did not converge on the contour", main.value, diff);
  }
  return main.value;
}

}  // namespace prabhakar
