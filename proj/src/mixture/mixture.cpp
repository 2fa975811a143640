#include <algorithm>
#include <cmath>

#include "prabhakar/fracint.hpp"
#include "prabhakar/mixture.hpp"
#include "prabhakar/stable.hpp"

namespace prabhakar {

void GammaWeight::validate() const {
  if (!(mu > 0.0)) throw ParameterError("gamma weight shape mu must be positive");
  if (!(lambda >= 0.0)) throw ParameterError("gamma weight rate lambda must be non-negative");
}

double GammaWeight::density(double t) const {
  validate();
  if (!(t > 0.0)) return 0.0;
  return std::exp((mu - 1.0) * std::log(t) - lambda * t - log_gamma(mu));
}

double GammaWeight::total_mass() const {
  validate();
  if (lambda == 0.0) return HUGE_VAL;
  return std::pow(lambda, -mu);
}

namespace {

constexpr double kSpecialTol = 1e-13;

double nu_slack(const BaseParams& b) {
  return 1e-14 * std::max({1.0, std::fabs(b.beta), b.alpha * b.gamma});
}

}  // namespace

void BaseParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
  if (!(gamma > 0.0)) throw ParameterError("gamma must be positive");
  if (!(beta >= alpha * gamma - nu_slack(*this))) throw ParameterError("beta must be at least alpha*gamma");
  if (!(theta > -alpha * gamma)) throw ParameterError("theta must exceed -alpha*gamma");
  if (!std::isfinite(beta) || !std::isfinite(theta)) throw ParameterError("parameters must be finite");
}

void MixtureParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
  if (!(nu >= 0.0)) throw ParameterError("nu must be non-negative");
  if (!(mu > 0.0)) throw ParameterError("mu must be positive");
}

MixtureParams base_to_composite(const BaseParams& b) {
  b.validate();
  MixtureParams m{b.alpha, std::max(0.0, b.beta - b.alpha * b.gamma), b.gamma + b.theta / b.alpha};
  m.validate();
  return m;
}

PrabhakarTriple prabhakar_triple(const BaseParams& b) {
  b.validate();
  return {b.alpha, b.beta + b.theta, b.gamma + b.theta / b.alpha};
}

SpecialCase special_case(const BaseParams& b) {
  const MixtureParams m = base_to_composite(b);
  if (m.nu <= kSpecialTol) return SpecialCase::NuZero;
  if (std::fabs(m.nu - (1.0 - b.alpha)) <= kSpecialTol) return SpecialCase::NuOneMinusAlpha;
  return SpecialCase::None;
}

MixtureEvaluator::MixtureEvaluator(const MixtureParams& m, const QuadSpec& spec)
    : m_(m), spec_(spec), inner_(spec.tightened(1e-2)), inv_gamma_mu_(reciprocal_gamma(m.mu)) {
  m_.validate();
  spec_.validate();
}

double MixtureEvaluator::scaled_rl(double y) {
  if (auto it = memo_.find(y); it != memo_.end()) return it->second;
  double v;
  if (m_.nu == 0.0) {
    v = stable_pdf_standard(m_.alpha, y, inner_) * y;
  } else {
    v = rl_stable_standard(m_.alpha, m_.nu, y, inner_).value * std::pow(y, 1.0 - m_.nu);
  }
  memo_.emplace(y, v);
  return v;
}

NumResult MixtureEvaluator::operator()(double lambda, double x) {
  if (!(x > 0.0)) throw DomainError("mixture evaluation requires x > 0");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  const double alpha = m_.alpha, nu = m_.nu, mu = m_.mu;

  if (alpha == 1.0) {
    // {I^nu delta(. - t)}(x) = (x - t)^{nu-1} / Gamma(nu) on t < x
    if (nu == 0.0) {
      const double v = std::exp((mu - 1.0) * std::log(x) - lambda * x) * inv_gamma_mu_;
      return {v, 0.0, 1};
    }
    const double c = inv_gamma_mu_ * reciprocal_gamma(nu);
    NumResult r = integrate(
        [&](double t) {
          const double d = x - t;
          if (!(d > 0.0) || !(t > 0.0)) return 0.0;
          return std::exp((nu - 1.0) * std::log(d) + (mu - 1.0) * std::log(t) - lambda * t);
        },
        0.0, x, spec_, EndpointExponents{std::min(mu - 1.0, 0.0), std::min(nu - 1.0, 0.0)});
    return {r.value * c, r.err_estimate * c, r.evaluations};
  }

  // Integrand in t with y = x t^{-1/alpha}:
  //   t^{mu + (nu-1)/alpha - 1} e^{-lambda t} g(y) = t^{mu-1} x^{nu-1} e^{-lambda t} [g(y) y^{1-nu}]
  const double log_x_pow = (nu - 1.0) * std::log(x);
  RealFunction integrand = [&](double t) {
    if (!(t > 0.0)) return 0.0;
    const double y = x * std::pow(t, -1.0 / alpha);
    const double h = scaled_rl(y);
    if (h == 0.0) return 0.0;
    return h * std::exp((mu - 1.0) * std::log(t) + log_x_pow - lambda * t);
  };
  DecayHint hint;
  if (lambda > 0.0) {
    hint.decay = ExponentialDecay{lambda};
  } else {
    // The stable factor decays faster than any power; -2 is a safe tail bound.
    hint.decay = PowerLawDecay{-2.0};
  }
  hint.scale = std::pow(x, alpha);
  hint.origin_exponent = nu == 0.0 ? mu : mu - 1.0;
  NumResult r = integrate_semiinf(integrand, spec_, hint);
  return {r.value * inv_gamma_mu_, r.err_estimate * inv_gamma_mu_, r.evaluations};
}

NumResult mixture_eval(const MixtureParams& m, double lambda, double x, const QuadSpec& spec) {
  MixtureEvaluator ev(m, spec);
  return ev(lambda, x);
}

NumResult mixture_eval_special(const BaseParams& b, double lambda, double x, const QuadSpec& spec) {
  const MixtureParams m = base_to_composite(b);
  const SpecialCase sc = special_case(b);
  if (sc == SpecialCase::None) {
    throw DispatchError("closed variants need beta - alpha*gamma equal to 0 or 1 - alpha");
  }
  if (!(x > 0.0)) throw DomainError("mixture evaluation requires x > 0");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  const double alpha = b.alpha;
  if (alpha == 1.0) {
    // Both variants collapse to nu = 0: the weight evaluated at t = x.
    const double v = std::exp((m.mu - 1.0) * std::log(x) - lambda * x) * reciprocal_gamma(m.mu);
    return {v, 0.0, 1};
  }
  const bool variant_a = sc == SpecialCase::NuZero;
  const double expo = variant_a ? (b.beta + b.theta - 1.0) / alpha - 1.0 : (b.beta + b.theta - 2.0) / alpha - 1.0;
  const double pre = (variant_a ? 1.0 : x / alpha) * reciprocal_gamma(m.mu);
  RealFunction integrand = [&](double t) {
    if (!(t > 0.0)) return 0.0;
    const double y = x * std::pow(t, -1.0 / alpha);
    const double f = stable_pdf_standard(alpha, y, spec);
    if (f == 0.0) return 0.0;
    return f * std::exp(expo * std::log(t) - lambda * t);
  };
  DecayHint hint;
  if (lambda > 0.0) {
    hint.decay = ExponentialDecay{lambda};
  } else {
    hint.decay = PowerLawDecay{-2.0};
  }
  hint.scale = std::pow(x, alpha);
  hint.origin_exponent = variant_a ? m.mu : m.mu - 1.0;
  NumResult r = integrate_semiinf(integrand, spec, hint);
  return {r.value * pre, r.err_estimate * std::fabs(pre), r.evaluations};
}

double theta_shift_residual(const BaseParams& b, double theta2, double t, double x, const QuadSpec& spec) {
  const MixtureParams m = base_to_composite(b);
  base_to_composite(BaseParams{b.alpha, b.beta, b.gamma, theta2});
  if (!(t > 0.0) || !(x > 0.0)) throw DomainError("theta_shift_residual requires t > 0 and x > 0");
  const double alpha = b.alpha, nu = m.nu;
  const QuadSpec inner = spec.tightened(1e-2);

  double direct, standard;
  if (alpha == 1.0) {
    direct = rl_stable(1.0, nu, t, x, inner).value;
    standard = rl_stable(1.0, nu, 1.0, x / t, inner).value;
  } else {
    const StableLaw law{alpha, t};
    direct = rl_integral([&](double u) { return stable_pdf(law, u, inner); }, nu, x, inner).value;
    standard = rl_stable_standard(alpha, nu, x * std::pow(t, -1.0 / alpha), inner).value;
  }
  const double lt = std::log(t);
  const double lhs = std::exp((b.gamma + theta2 / alpha) * lt) * direct;
  const double rhs = std::exp((b.beta + theta2 - 1.0) / alpha * lt) * standard;
  return lhs - rhs;
}

}  // namespace prabhakar
