#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "prabhakar/numerics.hpp"

namespace prabhakar {

void QuadSpec::validate() const {
  if (!(rel_tol > 0.0)) throw ParameterError("rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw ParameterError("abs_tol must be non-negative");
  if (max_subdivisions < 1) throw ParameterError("max_subdivisions must be at least 1");
  if (!(tail_cutoff_mass > 0.0)) throw ParameterError("tail_cutoff_mass must be positive");
  if (inversion_nodes < 8) throw ParameterError("inversion_nodes must be at least 8");
}

QuadSpec QuadSpec::tightened(double factor) const {
  QuadSpec s = *this;
  s.rel_tol *= factor;
  s.abs_tol *= factor;
  return s;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod extension of the 10-point Gauss rule.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208965039806, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for kXgk[1], kXgk[3], ..., kXgk[9]
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  double abs_sum = std::fabs(kronrod);
  double fv1[10], fv2[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double pair = fv1[j] + fv2[j];
    kronrod += kWgk[j] * pair;
    abs_sum += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[10] * std::fabs(fc - mean);
  for (int j = 0; j < 10; ++j) asc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));

  const double result = kronrod * half;
  const double res_abs = abs_sum * std::fabs(half);
  const double res_asc = asc * std::fabs(half);
  double err = std::fabs((kronrod - gauss) * half);
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * res_abs, err);
  if (!std::isfinite(result)) {
    throw DomainError("integrand is not finite on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return {a, b, result, err};
}

NumResult adaptive(const RealFunction& f, double a, double b, const QuadSpec& spec) {
  std::vector<Segment> heap{gauss_kronrod(f, a, b)};
  std::size_t evals = 21;
  double total = heap.front().value;
  double total_err = heap.front().error;
  int subdivisions = 1;

  auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)); };
  auto resum = [&] {
    total = 0.0;
    total_err = 0.0;
    for (const Segment& s : heap) {
      total += s.value;
      total_err += s.error;
    }
  };
  while (total_err > tolerance()) {
    if (subdivisions >= spec.max_subdivisions) {
      throw ConvergenceError("adaptive quadrature exhausted " + std::to_string(spec.max_subdivisions) +
                                 " subdivisions",
                             total, total_err);
    }
    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) || worst.error == 0.0) {
      std::push_heap(heap.begin(), heap.end());
      resum();
      if (total_err > tolerance()) {
        throw ConvergenceError("adaptive quadrature cannot resolve the integrand below its round-off floor",
                               total, total_err);
      }
      break;
    }
    heap.back() = gauss_kronrod(f, worst.a, mid);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(gauss_kronrod(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end());
    evals += 42;
    ++subdivisions;
    resum();
  }
  return {total, total_err, evals};
}

}  // namespace

NumResult integrate(const RealFunction& f, double a, double b, const QuadSpec& spec,
                    std::optional<EndpointExponents> endpoint_singularity) {
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0, 1};
    throw DomainError("integrate requires a < b");
  }
  double p = 0.0, q = 0.0;
  if (endpoint_singularity) {
    p = endpoint_singularity->left;
    q = endpoint_singularity->right;
    if (!(p > -1.0) || !(q > -1.0)) throw DomainError("endpoint exponents must exceed -1");
  }
  const bool left = p < 0.0;
  const bool right = q < 0.0;
  if (!left && !right) return adaptive(f, a, b, spec);

  if (left && right) {
    const double m = 0.5 * (a + b);
    NumResult r1 = integrate(f, a, m, spec, EndpointExponents{p, 0.0});
    NumResult r2 = integrate(f, m, b, spec, EndpointExponents{0.0, q});
    return {r1.value + r2.value, r1.err_estimate + r2.err_estimate, r1.evaluations + r2.evaluations};
  }
  // u = a + (b - a) w^r on the left, u = b - (b - a) w^r on the right, r = 1/(1 + exponent).
  const double r = 1.0 / (1.0 + (left ? p : q));
  const double width = b - a;
  RealFunction g = [&](double w) {
    const double wr = std::pow(w, r);
    const double u = left ? a + width * wr : b - width * wr;
    return f(u) * width * r * wr / w;
  };
  return adaptive(g, 0.0, 1.0, spec);
}

NumResult integrate_semiinf(const RealFunction& f, const QuadSpec& spec, const DecayHint& hint, double lower) {
  if (const auto* pl = std::get_if<PowerLawDecay>(&hint.decay); pl && !(pl->exponent < -1.0)) {
    throw DomainError("power-law decay exponent must be below -1 for a convergent tail");
  }
  if (const auto* ex = std::get_if<ExponentialDecay>(&hint.decay); ex && !(ex->rate > 0.0)) {
    throw DomainError("exponential decay rate must be positive");
  }
  if (!(hint.scale > 0.0)) throw DomainError("decay hint scale must be positive");

  auto tail_bound = [&](double T) {
    const double fT = std::fabs(f(T));
    if (const auto* ex = std::get_if<ExponentialDecay>(&hint.decay)) return fT / ex->rate;
    const double p = std::get<PowerLawDecay>(hint.decay).exponent;
    return fT * std::fabs(T) / (-p - 1.0);
  };

  std::optional<EndpointExponents> origin;
  if (hint.origin_exponent && *hint.origin_exponent < 0.0) origin = EndpointExponents{*hint.origin_exponent, 0.0};

  NumResult first = integrate(f, lower, lower + hint.scale, spec, origin);
  double total = first.value;
  double err = first.err_estimate;
  std::size_t evals = first.evaluations + 1;
  double width = hint.scale;
  constexpr int kMaxPanels = 400;
  for (int panel = 0; panel < kMaxPanels; ++panel) {
    const double lo = lower + width;
    const double hi = lower + 2.0 * width;
    QuadSpec local = spec;
    local.abs_tol = std::max(spec.abs_tol, 0.5 * spec.rel_tol * std::fabs(total));
    NumResult piece = integrate(f, lo, hi, local);
    total += piece.value;
    err += piece.err_estimate;
    evals += piece.evaluations + 1;
    width *= 2.0;
    const double threshold = spec.tail_cutoff_mass * std::fabs(total);
    const double tail = tail_bound(hi);
    // An all-zero start says nothing about the tail; keep walking outward for a while.
    if (total == 0.0 && panel < 64) continue;
    if (std::fabs(piece.value) <= threshold && tail <= threshold) {
      return {total, err + tail, evals};
    }
  }
  throw ConvergenceError("semi-infinite integral did not meet its tail criterion", total, err);
}

}  // namespace prabhakar
