#include <cmath>

#include "prabhakar/fracint.hpp"
#include "prabhakar/stable.hpp"

namespace prabhakar {

void RLKernel::validate() const {
  if (!(nu >= 0.0)) throw DomainError("fractional order nu must be non-negative");
}

double RLKernel::operator()(double x) const {
  validate();
  if (identity()) throw DomainError("h_0 is the identity convolution and has no pointwise value");
  if (!(x > 0.0)) return 0.0;
  return std::pow(x, nu - 1.0) * reciprocal_gamma(nu);
}

NumResult rl_integral(const RealFunction& f, double nu, double x, const QuadSpec& spec,
                      std::optional<double> f_origin_exponent) {
  RLKernel{nu}.validate();
  if (nu == 0.0) return {f(x), 0.0, 1};
  if (!(x > 0.0)) throw DomainError("rl_integral requires x > 0");
  const double p = f_origin_exponent.value_or(0.0);

  if (nu < 1.0) {
    // (1/Gamma(nu)) int_0^x (x-u)^{nu-1} f(u) du = (1/Gamma(nu+1)) int_0^{x^nu} f(x - v^{1/nu}) dv
    const double upper = std::pow(x, nu);
    const double inv = 1.0 / nu;
    RealFunction g = [&](double v) {
      const double u = x - std::pow(v, inv);
      return f(u > 0.0 ? u : 0.0);
    };
    NumResult r = integrate(g, 0.0, upper, spec, EndpointExponents{0.0, p});
    const double scale = reciprocal_gamma(nu + 1.0);
    return {r.value * scale, r.err_estimate * scale, r.evaluations};
  }

  const double rg = reciprocal_gamma(nu);
  RealFunction g = [&](double u) { return std::pow(x - u, nu - 1.0) * f(u); };
  NumResult r = integrate(g, 0.0, x, spec, EndpointExponents{p, 0.0});
  return {r.value * rg, r.err_estimate * rg, r.evaluations};
}

NumResult rl_stable_standard(double alpha, double nu, double x, const QuadSpec& spec) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("rl_stable_standard requires 0 < alpha < 1");
  RLKernel{nu}.validate();
  if (!(x > 0.0)) return {0.0, 0.0, 1};
  if (nu == 0.0) return {stable_pdf_standard(alpha, x, spec), 0.0, 1};
  const auto series = stable_series(alpha, nu);
  if (x >= series->switch_point()) {
    const double v = series->value(x);
    return {v, 1e-15 * std::fabs(v), 1};
  }
  if (nu == 1.0) return {stable_cdf(alpha, x, spec), 1e-15, 1};
  return rl_integral([&](double u) { return stable_pdf_standard(alpha, u, spec); }, nu, x, spec);
}

NumResult rl_stable(double alpha, double nu, double t, double x, const QuadSpec& spec) {
  StableLaw{alpha, t}.validate();
  RLKernel{nu}.validate();
  if (alpha == 1.0) {
    if (nu == 0.0) throw DegenerateLawError("I^0 of a point mass has no pointwise value");
    if (!(x > t)) return {0.0, 0.0, 1};
    return {std::exp((nu - 1.0) * std::log(x - t)) * reciprocal_gamma(nu), 0.0, 1};
  }
  const double s = std::pow(t, -1.0 / alpha);
  const double pre = std::pow(t, (nu - 1.0) / alpha);
  NumResult r = rl_stable_standard(alpha, nu, x * s, spec);
  return {pre * r.value, pre * r.err_estimate, r.evaluations};
}

}  // namespace prabhakar
