#include <cmath>
#include <limits>
#include <string>

#include "prabhakar/mlf.hpp"

namespace prabhakar {

void PrabhakarTriple::validate() const {
  if (!(alpha >= 0.0)) throw ParameterError("alpha must be non-negative");
  if (!(beta > 0.0)) throw ParameterError("beta must be positive");
  if (!(gamma > 0.0)) throw ParameterError("gamma must be positive");
}

SeriesResult prabhakar_series_detail(const PrabhakarTriple& p, double z) {
  p.validate();
  if (!(std::fabs(z) <= kSeriesZMax)) {
    throw RouteError("|z| = " + std::to_string(std::fabs(z)) +
                     " exceeds the series bound 30; use the mixture or inversion route");
  }
  if (p.alpha == 0.0 && !(std::fabs(z) < 1.0)) {
    throw RouteError("alpha = 0 series needs |z| < 1; use the inversion route");
  }
  SeriesResult r;
  const double first = reciprocal_gamma(p.beta);
  if (z == 0.0) {
    r.value = first;
    r.abs_sum = std::fabs(first);
    r.err_estimate = std::numeric_limits<double>::epsilon() * r.abs_sum;
    r.terms = 1;
    return r;
  }
  const double log_z = std::log(std::fabs(z));
  const bool alternating = z < 0.0;
  double log_coef = -log_gamma(p.beta);
  double sum = 0.0, comp = 0.0, abs_sum = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  int small_run = 0;
  constexpr int kMaxTerms = 200000;
  int k = 0;
  double term = 0.0;
  for (; k < kMaxTerms; ++k) {
    const double mag = std::exp(log_coef + k * log_z);
    term = (alternating && (k % 2 == 1)) ? -mag : mag;
    const double u = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - u) + term : (term - u) + sum;
    sum = u;
    abs_sum += mag;
    if (!std::isfinite(abs_sum)) {
      // terms overflowed long before the sum could settle: unusable here
      r.value = std::numeric_limits<double>::quiet_NaN();
      r.abs_sum = r.err_estimate = std::numeric_limits<double>::infinity();
      r.terms = k + 1;
      return r;
    }
    const double partial = std::fabs(sum + comp);
    if (mag < 1e-18 * partial && mag < previous) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    previous = mag;
    // coef_{k+1}/coef_k = (gamma + k)/(k + 1) * Gamma(alpha k + beta)/Gamma(alpha k + alpha + beta)
    log_coef += std::log((p.gamma + k) / (k + 1.0));
    if (p.alpha > 0.0) log_coef += log_gamma(p.alpha * k + p.beta) - log_gamma(p.alpha * (k + 1) + p.beta);
  }
  r.value = sum + comp;
  r.abs_sum = abs_sum;
  r.terms = k + 1;
  r.err_estimate = 2.0 * std::numeric_limits<double>::epsilon() * abs_sum + std::fabs(term);
  if (k == kMaxTerms) {
    throw ConvergenceError("Prabhakar series did not converge", r.value, r.err_estimate);
  }
  return r;
}

double prabhakar_series(const PrabhakarTriple& p, double z) {
  const SeriesResult r = prabhakar_series_detail(p, z);
  if (r.err_estimate > kSeriesCancellationBudget * std::max(1.0, std::fabs(r.value))) {
    throw RouteError("series cancellation at z = " + std::to_string(z) + " exceeds the error budget (sum|terms| = " +
                     std::to_string(r.abs_sum) + "); use the mixture or inversion route");
  }
  return r.value;
}

double ml1(double alpha, double z) { return prabhakar_series({alpha, 1.0, 1.0}, z); }

double prabhakar_kernel(const PrabhakarTriple& p, double lambda, double x) {
  p.validate();
  if (!(x > 0.0)) throw DomainError("prabhakar_kernel requires x > 0");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  const double pre = std::pow(x, p.beta - 1.0);
  if (lambda == 0.0) return pre * reciprocal_gamma(p.beta);
  return pre * prabhakar_series(p, -lambda * std::pow(x, p.alpha));
}

double prabhakar_laplace_closed(const PrabhakarTriple& p, double lambda, double s) {
  p.validate();
  if (!(s > 0.0)) throw DomainError("closed-form Laplace transform is evaluated for s > 0 only");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  const double ls = std::log(s);
  return std::exp((p.alpha * p.gamma - p.beta) * ls - p.gamma * std::log(lambda + std::exp(p.alpha * ls)));
}

std::complex<double> prabhakar_laplace_closed(const PrabhakarTriple& p, double lambda, std::complex<double> s) {
  const std::complex<double> ls = std::log(s);
  return std::exp((p.alpha * p.gamma - p.beta) * ls - p.gamma * std::log(lambda + std::exp(p.alpha * ls)));
}

double prabhakar_via_inversion(const PrabhakarTriple& p, double lambda, double x, const QuadSpec& spec) {
  p.validate();
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  return inverse_laplace([&](std::complex<double> s) { return prabhakar_laplace_closed(p, lambda, s); }, x, spec);
}

double prabhakar_function(const PrabhakarTriple& p, double z, const QuadSpec& spec) {
  p.validate();
  const bool series_allowed = std::fabs(z) <= kSeriesZMax && (p.alpha > 0.0 || std::fabs(z) < 1.0);
  if (series_allowed) {
    const SeriesResult r = prabhakar_series_detail(p, z);
    if (r.err_estimate <= spec.rel_tol * std::max(1.0, std::fabs(r.value))) return r.value;
  }
  if (z < 0.0) return prabhakar_via_inversion(p, -z, 1.0, spec);
  throw RouteError("no route covers positive z = " + std::to_string(z) + " at the requested accuracy");
}

}  // namespace prabhakar
