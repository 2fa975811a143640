#include <cmath>
#include <numbers>

#include "prabhakar/fracint.hpp"
#include "prabhakar/stable.hpp"

namespace prabhakar {

void StableLaw::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
  if (!(t > 0.0)) throw ParameterError("stable scale t must be positive");
}

double LevyExponent::psi(double s) const { return std::pow(s, alpha); }

double LevyExponent::psi_prime(double s) const { return alpha * std::pow(s, alpha - 1.0); }

double LevyExponent::levy_density(double x) const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("Levy density requires 0 < alpha < 1");
  if (!(x > 0.0)) return 0.0;
  return alpha * std::pow(x, -alpha) * reciprocal_gamma(1.0 - alpha);
}

namespace {

void require_nondegenerate(double alpha) {
  if (alpha == 1.0) throw DomainError("alpha = 1 is a point mass; use the degenerate branch");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("stable index must satisfy 0 < alpha < 1");
}

}  // namespace

double stable_pdf_standard(double alpha, double x, const QuadSpec&) {
  require_nondegenerate(alpha);
  if (!(x > 0.0)) return 0.0;
  const auto series = stable_series(alpha, 0.0);
  if (x >= series->switch_point()) return series->value(x);
  return zolotarev_pdf(alpha, x);
}

double stable_pdf(const StableLaw& law, double x, const QuadSpec& spec) {
  law.validate();
  if (law.degenerate()) throw DegenerateLawError("the alpha = 1 stable law has no density");
  const double s = std::pow(law.t, -1.0 / law.alpha);
  return s * stable_pdf_standard(law.alpha, x * s, spec);
}

double stable_cdf(double alpha, double x, const QuadSpec&) {
  require_nondegenerate(alpha);
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  const auto series = stable_series(alpha, 1.0);
  if (x >= series->switch_point()) return series->value(x);
  return zolotarev_cdf(alpha, x);
}

double stable_ccdf(double alpha, double x, const QuadSpec&) {
  require_nondegenerate(alpha);
  if (!(x > 0.0)) return 1.0;
  if (std::isinf(x)) return 0.0;
  const auto series = stable_series(alpha, 1.0);
  if (x >= series->switch_point()) return -series->value_without_leading(x);
  return 1.0 - zolotarev_cdf(alpha, x);
}

double stable_quantile(double alpha, double p, const QuadSpec& spec) {
  require_nondegenerate(alpha);
  if (!(p > 0.0 && p < 1.0)) throw DomainError("stable_quantile requires 0 < p < 1");
  double lo = 1.0, hi = 1.0;
  while (stable_cdf(alpha, lo, spec) > p) lo *= 0.5;
  while (stable_cdf(alpha, hi, spec) < p) hi *= 2.0;
  // bisection in log x
  for (int i = 0; i < 200 && hi / lo > 1.0 + 4e-16; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (stable_cdf(alpha, mid, spec) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

double stable_sample(const StableLaw& law, RandomSource& rng) {
  law.validate();
  if (law.degenerate()) return law.t;
  const double alpha = law.alpha;
  const double phi = std::numbers::pi * rng.uniform();
  const double e = rng.exponential();
  const double s = std::pow(zolotarev_A(alpha, phi) / e, (1.0 - alpha) / alpha);
  return std::pow(law.t, 1.0 / alpha) * s;
}

double id_identity_residual(double alpha, double t, double x, const QuadSpec& spec) {
  require_nondegenerate(alpha);
  if (!(x > 0.0)) throw DomainError("id_identity_residual requires x > 0");
  const StableLaw law{alpha, t};
  law.validate();
  const QuadSpec inner = spec.tightened(1e-2);
  const NumResult rl =
      rl_integral([&](double u) { return stable_pdf(law, u, spec); }, 1.0 - alpha, x, inner);
  return x * stable_pdf(law, x, spec) - alpha * t * rl.value;
}

}  // namespace prabhakar
