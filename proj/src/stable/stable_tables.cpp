// Node tables and series coefficients for the standard stable law, built
// lazily per index and shared read-only afterwards.

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include "prabhakar/kernels.hpp"
#include "prabhakar/stable.hpp"
#include "stable_internal.hpp"

namespace prabhakar {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log|1/Gamma(z)| and its sign; sign 0 at the poles of Gamma.
std::pair<double, int> log_abs_rgamma(double z) {
  if (z > 0.0) return {-log_gamma(z), 1};
  if (z == std::floor(z)) return {kNegInf, 0};
  const double s = sin_pi(z);
  return {log_gamma(1.0 - z) + std::log(std::fabs(s)) - std::log(std::numbers::pi), s > 0.0 ? 1 : -1};
}

}  // namespace

StableSeries::StableSeries(double alpha, double nu) : alpha_(alpha), nu_(nu) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("stable series requires 0 < alpha < 1");
  if (!(nu >= 0.0)) throw DomainError("stable series requires nu >= 0");
  log_abs_.resize(kTerms);
  sign_.resize(kTerms);
  for (int k = 0; k < kTerms; ++k) {
    const auto [lr, s] = log_abs_rgamma(nu - k * alpha);
    log_abs_[k] = lr - log_gamma(k + 1.0);
    sign_[k] = (k % 2 == 0) ? s : -s;
  }

  // Scan downward on a geometric grid; the switch point is the bottom of the
  // run of reliable points that starts at the top of the grid.
  const double ratio = std::exp2(-1.0 / 8.0);
  double y = 1e4;
  double last_good = std::numeric_limits<double>::infinity();
  while (y > 1e-6) {
    double max_term = 0.0, last_term = 0.0;
    const double s = sum(y, 0, &max_term, &last_term);
    const bool ok = s != 0.0 && last_term < 1e-16 * std::fabs(s) && max_term < 10.0 * std::fabs(s);
    if (!ok) break;
    last_good = y;
    y *= ratio;
  }
  switch_point_ = last_good;
}

double StableSeries::sum(double y, int first_term, double* max_term, double* last_term) const {
  const double ly = std::log(y);
  double s = 0.0, c = 0.0;
  double mx = 0.0;
  double tail = 0.0;
  const bool full = max_term != nullptr;
  double previous = std::numeric_limits<double>::infinity();
  int small_run = 0;  // a lone tiny term may just sit next to a pole of Gamma
  for (int k = first_term; k < kTerms; ++k) {
    if (sign_[k] == 0) continue;
    const double t = sign_[k] * std::exp(log_abs_[k] + (nu_ - 1.0 - k * alpha_) * ly);
    // Neumaier
    const double u = s + t;
    c += std::fabs(s) >= std::fabs(t) ? (s - u) + t : (t - u) + s;
    s = u;
    const double at = std::fabs(t);
    mx = std::max(mx, at);
    if (k >= kTerms - 2) tail = std::max(tail, at);
    small_run = at < 1e-17 * std::fabs(s + c) && at < previous ? small_run + 1 : 0;
    if (!full && small_run == 3) break;
    previous = at;
  }
  if (max_term) *max_term = mx;
  if (last_term) *last_term = tail;
  return s + c;
}

double StableSeries::value(double y) const { return sum(y, 0, nullptr, nullptr); }

double StableSeries::value_without_leading(double y) const { return sum(y, 1, nullptr, nullptr); }

std::shared_ptr<const StableSeries> stable_series(double alpha, double nu) {
  static std::mutex mutex;
  static std::map<std::pair<double, double>, std::shared_ptr<const StableSeries>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{alpha, nu}];
  if (!slot) slot = std::make_shared<const StableSeries>(alpha, nu);
  return slot;
}

double stable_switch_point(double alpha, double nu) { return stable_series(alpha, nu)->switch_point(); }

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes
// ---------------------------------------------------------------------------

namespace detail {

const GaussLegendre& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (slot) return *slot;
  auto gl = std::make_unique<GaussLegendre>();
  gl->x.resize(n);
  gl->w.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    gl->x[i] = -z;
    gl->x[n - 1 - i] = z;
    gl->w[i] = w;
    gl->w[n - 1 - i] = w;
  }
  if (n % 2 == 1) gl->x[n / 2] = 0.0;
  slot = std::move(gl);
  return *slot;
}

// ---------------------------------------------------------------------------
// Zolotarev tables
// ---------------------------------------------------------------------------

namespace {

// log A(phi), given phi and pi - phi separately for accuracy near pi.
double log_A(double alpha, double phi, double phi_c) {
  const double s_a = std::sin(alpha * phi);
  // pi - phi rounds to pi once phi < 1e-16, so take whichever side is exact
  const double s = phi < 0.5 * std::numbers::pi ? std::sin(phi) : std::sin(phi_c);
  const double s_1a = std::sin((1.0 - alpha) * phi);
  return (std::log(s_a) - std::log(s)) / (1.0 - alpha) + std::log(s_1a) - std::log(s_a);
}

ZolotarevTable build_table(double alpha, std::size_t n) {
  const GaussLegendre& gl = gauss_legendre(n);
  ZolotarevTable t;
  t.alpha = alpha;
  t.w.reserve(n);
  t.a.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double phi = 0.5 * std::numbers::pi * (1.0 + gl.x[j]);
    const double phi_c = 0.5 * std::numbers::pi * (1.0 - gl.x[j]);
    const double la = log_A(alpha, phi, phi_c);
    // Nodes with astronomically large A contribute exp(-X A) = 0 for every
    // x in use; they are dropped rather than carried as inf.
    if (!(la < 690.0)) continue;
    t.w.push_back(0.5 * std::numbers::pi * gl.w[j]);
    t.a.push_back(std::exp(la));
  }
  return t;
}

double relative_error(double approx, double exact) { return std::fabs(approx - exact) / std::fabs(exact); }

// A is increasing on (0, pi). Both integrands switch off where X A(phi)
// passes 1, sharply once alpha is close to 1, so the interval is cut at a
// few levels of X A before the adaptive rule sees it.
double integrate_around_crossing(double alpha, double X, double rough, const RealFunction& f) {
  const double log_X = std::log(X);
  std::vector<double> cuts{0.0};
  for (double level : {-6.0, -1.0, 0.0, 1.0, 3.5, 6.5}) {
    double lo = 0.0, hi = std::numbers::pi;
    if (log_A(alpha, 1e-300, std::numbers::pi) + log_X >= level) continue;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (log_A(alpha, mid, std::numbers::pi - mid) + log_X < level ? lo : hi) = mid;
    }
    if (lo > cuts.back()) cuts.push_back(lo);
  }
  cuts.push_back(std::numbers::pi);
  QuadSpec spec;
  spec.rel_tol = 1e-13;
  // `rough` comes from the fixed rule; the pieces far from the crossing
  // only need to be small against it.
  spec.abs_tol = 1e-14 * std::fabs(rough);
  spec.max_subdivisions = 4000;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate(f, cuts[i], cuts[i + 1], spec).value;
  return total;
}

}  // namespace

double zolotarev_integral_pdf(const ZolotarevTable& t, double x) {
  const double alpha = t.alpha;
  const double X = std::pow(x, -alpha / (1.0 - alpha));
  double wa;
  if (t.adaptive) {
    const double rough = kernels::exp_sums(t.w.data(), t.a.data(), t.w.size(), X).weighted_a;
    wa = integrate_around_crossing(alpha, X, rough, [&](double phi) {
      const double la = log_A(alpha, phi, std::numbers::pi - phi);
      const double e = la - X * std::exp(la);
      return e < -745.0 ? 0.0 : std::exp(e);
    });
  } else {
    wa = kernels::exp_sums(t.w.data(), t.a.data(), t.w.size(), X).weighted_a;
  }
  if (!(wa > 0.0)) return 0.0;
  const double log_pre = std::log(alpha / ((1.0 - alpha) * std::numbers::pi)) - std::log(x) / (1.0 - alpha);
  return std::exp(log_pre + std::log(wa));
}

double zolotarev_integral_cdf(const ZolotarevTable& t, double x) {
  const double alpha = t.alpha;
  const double X = std::pow(x, -alpha / (1.0 - alpha));
  double w;
  if (t.adaptive) {
    const double rough = kernels::exp_sums(t.w.data(), t.a.data(), t.w.size(), X).weighted;
    w = integrate_around_crossing(alpha, X, rough, [&](double phi) {
      const double v = -X * std::exp(log_A(alpha, phi, std::numbers::pi - phi));
      return v < -745.0 ? 0.0 : std::exp(v);
    });
  } else {
    w = kernels::exp_sums(t.w.data(), t.a.data(), t.w.size(), X).weighted;
  }
  return w / std::numbers::pi;
}

const ZolotarevTable& zolotarev_table(double alpha) {
  static std::mutex mutex;
  static std::map<double, std::unique_ptr<ZolotarevTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[alpha];
  if (slot) return *slot;

  // Start from 201 nodes and double until the rule matches the series on
  // the overlap just above both switch points.
  const StableSeries& pdf_series = *stable_series(alpha, 0.0);
  const StableSeries& cdf_series = *stable_series(alpha, 1.0);
  constexpr double kTarget = 1e-13;
  constexpr std::size_t kMaxNodes = 3201;
  std::unique_ptr<ZolotarevTable> table;
  for (std::size_t n = 201; n <= kMaxNodes; n = 2 * n - 1) {
    auto candidate = std::make_unique<ZolotarevTable>(build_table(alpha, n));
    double worst = 0.0;
    for (double f : {1.0, 1.25, 1.5}) {
      const double xp = pdf_series.switch_point() * f;
      const double xc = cdf_series.switch_point() * f;
      if (std::isfinite(xp)) worst = std::max(worst, relative_error(zolotarev_integral_pdf(*candidate, xp), pdf_series.value(xp)));
      if (std::isfinite(xc)) worst = std::max(worst, relative_error(zolotarev_integral_cdf(*candidate, xc), cdf_series.value(xc)));
    }
    candidate->nodes = n;
    candidate->validation_error = worst;
    table = std::move(candidate);
    if (worst <= kTarget) break;
  }
  if (table->validation_error > kTarget) table->adaptive = true;
  slot = std::move(table);
  return *slot;
}

}  // namespace detail

double zolotarev_A(double alpha, double phi) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("zolotarev_A requires 0 < alpha < 1");
  return std::exp(detail::log_A(alpha, phi, std::numbers::pi - phi));
}

double zolotarev_pdf(double alpha, double x) {
  if (!(x > 0.0)) return 0.0;
  return detail::zolotarev_integral_pdf(detail::zolotarev_table(alpha), x);
}

double zolotarev_cdf(double alpha, double x) {
  if (!(x > 0.0)) return 0.0;
  return detail::zolotarev_integral_cdf(detail::zolotarev_table(alpha), x);
}

std::size_t zolotarev_nodes(double alpha) { return detail::zolotarev_table(alpha).nodes; }

}  // namespace prabhakar
