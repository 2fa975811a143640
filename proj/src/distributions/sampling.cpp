#include <algorithm>
#include <cmath>
#include <numbers>

#include "prabhakar/distributions.hpp"
#include "prabhakar/stable.hpp"

namespace prabhakar {

const char* strategy_name(SamplerStrategy s) {
  switch (s) {
    case SamplerStrategy::ExactTransform:
      return "exact-transform";
    case SamplerStrategy::TiltedRejection:
      return "tilted-rejection";
    case SamplerStrategy::InverseCdf:
      return "inverse-cdf";
    case SamplerStrategy::PointMass:
      return "point-mass";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kTableNodes = 1024;
constexpr double kTailQuantile = 1e-6;
constexpr double kMaxTiltRatio = 5.0;

}  // namespace

PollardSampler::PollardSampler(const BaseParams& b, const QuadSpec& spec) : b_(b) {
  const MixtureParams m = base_to_composite(b);
  spec.validate();
  const bool pollard_family = b.alpha < 1.0 && b.beta == 1.0 && b.gamma == 1.0;
  if (b.alpha == 1.0 && m.nu == 0.0) {
    strategy_ = SamplerStrategy::PointMass;
  } else if (pollard_family && b.theta == 0.0) {
    strategy_ = SamplerStrategy::ExactTransform;
  } else if (pollard_family && b.theta > 0.0 && b.theta / b.alpha <= kMaxTiltRatio) {
    strategy_ = SamplerStrategy::TiltedRejection;
    tilt_c_ = b.theta * (1.0 - b.alpha) / b.alpha;
    // A(0+) = alpha^{alpha/(1-alpha)} (1 - alpha) is the minimum of A on (0, pi)
    log_a0_ = b.alpha / (1.0 - b.alpha) * std::log(b.alpha) + std::log1p(-b.alpha);
  } else {
    strategy_ = SamplerStrategy::InverseCdf;
    build_inverse_cdf(spec);
  }
}

void PollardSampler::build_inverse_cdf(const QuadSpec& spec) {
  const MixtureParams m = base_to_composite(b_);
  logit_ = b_.alpha == 1.0;
  const QuadSpec inner = spec.tightened(1e-2);
  auto density = [&](double t) { return p_density(b_, t, inner); };
  const bool nu_zero_stable = b_.alpha < 1.0 && special_case(b_) == SpecialCase::NuZero;
  const double origin = nu_zero_stable ? m.mu : m.mu - 1.0;
  lower_exponent_ = origin + 1.0;
  const std::optional<EndpointExponents> origin_sing =
      origin < 0.0 ? std::optional<EndpointExponents>(EndpointExponents{origin, 0.0}) : std::nullopt;

  auto cdf_from_zero = [&](double t) { return integrate(density, 0.0, t, spec, origin_sing).value; };
  auto upper_tail = [&](double t) {
    if (logit_) {
      return integrate(density, t, 1.0, spec, EndpointExponents{0.0, std::min(0.0, m.nu - 1.0)}).value;
    }
    return integrate_semiinf(density, spec, DecayHint{PowerLawDecay{-2.0}, t, std::nullopt}, t).value;
  };
  auto to_v = [&](double t) { return logit_ ? std::log(t / (1.0 - t)) : std::log(t); };
  auto to_t = [&](double v) { return logit_ ? 1.0 / (1.0 + std::exp(-v)) : std::exp(v); };

  double t_lo = logit_ ? 0.5 : 1.0;
  for (int i = 0; cdf_from_zero(t_lo) > kTailQuantile; ++i) {
    if (i > 400) throw ConvergenceError("inverse-CDF table: lower quantile not bracketed", t_lo, 0.0);
    t_lo /= 8.0;
  }
  double t_hi;
  if (logit_) {
    double s = 0.5;
    for (int i = 0; upper_tail(1.0 - s) > kTailQuantile; ++i) {
      if (i > 400 || 1.0 - s / 8.0 == 1.0) break;
      s /= 8.0;
    }
    t_hi = 1.0 - s;
  } else {
    t_hi = 1.0;
    for (int i = 0; upper_tail(t_hi) > kTailQuantile; ++i) {
      if (i > 1000) throw ConvergenceError("inverse-CDF table: upper quantile not bracketed", t_hi, 0.0);
      t_hi *= 2.0;
    }
  }

  const double v_lo = to_v(t_lo), v_hi = to_v(t_hi);
  std::vector<double> v(kTableNodes), c(kTableNodes);
  double t_prev = t_lo;
  for (std::size_t i = 0; i < kTableNodes; ++i) {
    v[i] = v_lo + (v_hi - v_lo) * static_cast<double>(i) / static_cast<double>(kTableNodes - 1);
    const double t = to_t(v[i]);
    if (i == 0) {
      c[i] = cdf_from_zero(t);
    } else {
      QuadSpec piece = spec;
      piece.abs_tol = std::min(spec.abs_tol, 1e-14);
      c[i] = c[i - 1] + integrate(density, t_prev, t, piece).value;
    }
    t_prev = t;
  }
  const double total = c.back() + upper_tail(to_t(v.back()));
  // keep a strictly increasing sequence for the interpolant
  v_.clear();
  cdf_.clear();
  for (std::size_t i = 0; i < kTableNodes; ++i) {
    const double ci = c[i] / total;
    if (!cdf_.empty() && !(ci > cdf_.back())) continue;
    v_.push_back(v[i]);
    cdf_.push_back(ci);
  }
  if (cdf_.size() < 3) throw ConvergenceError("inverse-CDF table degenerated", total, 0.0);

  // monotone cubic (Fritsch-Carlson) slopes of v as a function of C
  const std::size_t n = cdf_.size();
  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = cdf_[k + 1] - cdf_[k];
    d[k] = (v_[k + 1] - v_[k]) / h[k];
  }
  slope_.assign(n, 0.0);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    slope_[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0) return 0.0;
    if (d0 * d1 <= 0.0 && std::fabs(s) > 3.0 * std::fabs(d0)) s = 3.0 * d0;
    return s;
  };
  if (n > 2) {
    slope_[0] = end_slope(h[0], h[1], d[0], d[1]);
    slope_[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  } else {
    slope_[0] = slope_[1] = d[0];
  }
}

double PollardSampler::draw_inverse_cdf(double u) const {
  auto to_t = [&](double v) { return logit_ ? 1.0 / (1.0 + std::exp(-v)) : std::exp(v); };
  const std::size_t n = cdf_.size();
  if (u <= cdf_.front()) {
    // C(t) ~ C0 (t / t0)^kappa below the table
    return to_t(v_.front()) * std::pow(u / cdf_.front(), 1.0 / lower_exponent_);
  }
  if (u >= cdf_.back()) {
    // log(1 - C) extrapolated linearly in v from the last two nodes
    const double l1 = std::log1p(-cdf_[n - 2]);
    const double l2 = std::log1p(-cdf_[n - 1]);
    const double v = v_[n - 1] + (std::log1p(-u) - l2) * (v_[n - 1] - v_[n - 2]) / (l2 - l1);
    return to_t(v);
  }
  const std::size_t i = static_cast<std::size_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin()) - 1;
  const double h = cdf_[i + 1] - cdf_[i];
  const double s = (u - cdf_[i]) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double v = (2 * s3 - 3 * s2 + 1) * v_[i] + (s3 - 2 * s2 + s) * h * slope_[i] + (-2 * s3 + 3 * s2) * v_[i + 1] +
                   (s3 - s2) * h * slope_[i + 1];
  return to_t(v);
}

double PollardSampler::operator()(RandomSource& rng) const {
  const double alpha = b_.alpha;
  switch (strategy_) {
    case SamplerStrategy::PointMass:
      return 1.0;
    case SamplerStrategy::ExactTransform: {
      // T = S^{-alpha} with S standard stable: (E / A(phi))^{1-alpha}
      const double phi = std::numbers::pi * rng.uniform();
      const double e = rng.exponential();
      return std::pow(e / zolotarev_A(alpha, phi), 1.0 - alpha);
    }
    case SamplerStrategy::TiltedRejection: {
      // Tilting by t^{theta/alpha} = (E/A)^c makes E ~ Gamma(1 + c) and gives
      // the angle density proportional to A^{-c} <= A(0+)^{-c}.
      const double e = rng.gamma(1.0 + tilt_c_);
      for (;;) {
        const double phi = std::numbers::pi * rng.uniform();
        const double log_a = std::log(zolotarev_A(alpha, phi));
        if (std::log(rng.uniform()) <= -tilt_c_ * (log_a - log_a0_)) {
          return std::exp((1.0 - alpha) * (std::log(e) - log_a));
        }
      }
    }
    case SamplerStrategy::InverseCdf:
      return draw_inverse_cdf(rng.uniform());
  }
  return 0.0;
}

std::vector<double> PollardSampler::sample(std::size_t n, RandomSource& rng) const {
  std::vector<double> out(n);
  for (auto& x : out) x = (*this)(rng);
  return out;
}

std::vector<double> p_sample(const BaseParams& b, std::size_t n, RandomSource& rng, const QuadSpec& spec) {
  if (n < 1) throw DomainError("p_sample requires n >= 1");
  return PollardSampler(b, spec).sample(n, rng);
}

}  // namespace prabhakar
