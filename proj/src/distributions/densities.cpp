#include <cmath>
#include <string>

#include "prabhakar/distributions.hpp"
#include "prabhakar/fracint.hpp"
#include "prabhakar/stable.hpp"

namespace prabhakar {

namespace {

// log of {I^nu f_alpha}(y) y^{1-nu}, or -inf where the value is zero
double log_scaled_rl(const BaseParams& b, const MixtureParams& m, double y, const QuadSpec& spec) {
  const double alpha = b.alpha;
  const double ly = std::log(y);
  switch (special_case(b)) {
    case SpecialCase::NuZero: {
      const double f = stable_pdf_standard(alpha, y, spec);
      return f > 0.0 ? std::log(f) + ly : -HUGE_VAL;
    }
    case SpecialCase::NuOneMinusAlpha: {
      // I^{1-alpha} f_alpha(y) = y f_alpha(y) / alpha
      const double f = stable_pdf_standard(alpha, y, spec);
      return f > 0.0 ? std::log(f / alpha) + (1.0 + alpha) * ly : -HUGE_VAL;
    }
    case SpecialCase::None:
      break;
  }
  const double g = rl_stable_standard(alpha, m.nu, y, spec).value;
  return g > 0.0 ? std::log(g) + (1.0 - m.nu) * ly : -HUGE_VAL;
}

double origin_exponent(const BaseParams& b, const MixtureParams& m) {
  return special_case(b) == SpecialCase::NuZero && b.alpha < 1.0 ? m.mu : m.mu - 1.0;
}

}  // namespace

double q_density(const BaseParams& b, double t, const QuadSpec& spec) {
  const MixtureParams m = base_to_composite(b);
  if (!(t > 0.0)) return 0.0;
  if (b.alpha == 1.0) {
    if (m.nu == 0.0) throw DegenerateLawError("alpha = 1 with beta = gamma is a point mass at t = 1");
    if (!(t < 1.0)) return 0.0;
    return std::exp((m.nu - 1.0) * std::log1p(-t) + (m.mu - 1.0) * std::log(t)) * reciprocal_gamma(m.nu) *
           reciprocal_gamma(m.mu);
  }
  const double y = std::pow(t, -1.0 / b.alpha);
  const double lh = log_scaled_rl(b, m, y, spec);
  if (std::isinf(lh)) return 0.0;
  return std::exp(lh + (m.mu - 1.0) * std::log(t) - log_gamma(m.mu));
}

double p_density(const BaseParams& b, double t, const QuadSpec& spec) {
  return gamma_function(b.beta + b.theta) * q_density(b, t, spec);
}

double p_moment_real(const BaseParams& b, double q) {
  const MixtureParams m = base_to_composite(b);
  if (!(m.mu + q > 0.0)) throw DomainError("moment order must exceed -gamma - theta/alpha");
  return std::exp(log_gamma(b.beta + b.theta) + log_gamma(m.mu + q) - log_gamma(m.mu) -
                  log_gamma(b.beta + b.alpha * q + b.theta));
}

double p_moment(const BaseParams& b, int n) {
  if (n < 0) throw DomainError("moment order n must be non-negative");
  if (n == 0) {
    base_to_composite(b);
    return 1.0;
  }
  return p_moment_real(b, n);
}

NumResult p_integral(const BaseParams& b, double q, double lambda, const QuadSpec& spec) {
  const MixtureParams m = base_to_composite(b);
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  if (!(m.mu + q > 0.0)) throw DomainError("integral order q must exceed -gamma - theta/alpha");
  const QuadSpec inner = spec.tightened(1e-2);
  auto integrand = [&](double t) {
    if (!(t > 0.0)) return 0.0;
    const double p = p_density(b, t, inner);
    return p == 0.0 ? 0.0 : p * std::exp(q * std::log(t) - lambda * t);
  };
  if (b.alpha == 1.0) {
    if (m.nu == 0.0) return {std::exp(-lambda), 0.0, 1};
    return integrate(integrand, 0.0, 1.0, spec,
                     EndpointExponents{std::min(0.0, m.mu - 1.0 + q), std::min(0.0, m.nu - 1.0)});
  }
  DecayHint hint;
  if (lambda > 0.0) {
    hint.decay = ExponentialDecay{lambda};
  } else {
    hint.decay = PowerLawDecay{-2.0};
  }
  hint.scale = 1.0;
  hint.origin_exponent = origin_exponent(b, m) + q;
  return integrate_semiinf(integrand, spec, hint);
}

TiltedLaplace p_tilted_laplace(const BaseParams& b, double q, double lambda, const QuadSpec& spec) {
  const MixtureParams m = base_to_composite(b);
  if (!(m.mu + q > 0.0)) throw DomainError("tilt order q must exceed -gamma - theta/alpha");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  const PrabhakarTriple p{b.alpha, b.beta + b.alpha * q + b.theta, m.mu + q};
  const double pre = std::exp(log_gamma(b.beta + b.theta) + log_gamma(m.mu + q) - log_gamma(m.mu));
  TiltedLaplace r;
  r.closed_form = pre * prabhakar_function(p, -lambda, spec);
  r.numeric = p_integral(b, q, lambda, spec).value;
  r.agrees = std::fabs(r.closed_form - r.numeric) <= 1e-6 * (1.0 + std::fabs(r.closed_form));
  return r;
}

double p_laplace(const BaseParams& b, double lambda, const QuadSpec& spec) {
  const PrabhakarTriple p = prabhakar_triple(b);
  return gamma_function(b.beta + b.theta) * prabhakar_function(p, -lambda, spec);
}

double pollard_cdf(double alpha, double t, const QuadSpec& spec) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("pollard_cdf requires 0 < alpha < 1");
  if (!(t > 0.0)) return 0.0;
  return stable_ccdf(alpha, std::pow(t, -1.0 / alpha), spec);
}

double gml_density(double alpha, double theta, double t, const QuadSpec& spec) {
  if (!(theta > -alpha)) throw DomainError("theta must exceed -alpha");
  return p_density(BaseParams{alpha, 1.0, 1.0, theta}, t, spec);
}

double MixtureLawR::density(double t, const QuadSpec& spec) const {
  params.validate();
  if (!(t > 0.0)) return 0.0;
  const double rl = rl_stable(params.alpha, params.nu, t, 1.0, spec).value;
  return rl * std::exp((params.mu - 1.0) * std::log(t) - log_gamma(params.mu));
}

double PollardLaw::q_density(double t, const QuadSpec& spec) const { return prabhakar::q_density(base, t, spec); }

double PollardLaw::p_density(double t, const QuadSpec& spec) const { return prabhakar::p_density(base, t, spec); }

double PollardLaw::moment(int n) const { return p_moment(base, n); }

}  // namespace prabhakar
