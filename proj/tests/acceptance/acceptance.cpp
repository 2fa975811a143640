// Acceptance criteria. One line per criterion; exit status 0 only if all pass.
// Usage: acceptance <path to prabhakar cli>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "../reference/reference_values.hpp"
#include "prabhakar/distributions.hpp"
#include "prabhakar/fracint.hpp"
#include "prabhakar/mixture.hpp"
#include "prabhakar/mlf.hpp"
#include "prabhakar/stable.hpp"

using namespace prabhakar;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<BaseParams> random_params(std::size_t n, std::uint64_t seed) {
  RandomSource rng(seed);
  std::vector<BaseParams> v;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 0.2 + 0.8 * rng.uniform();
    const double g = 0.4 + 1.6 * rng.uniform();
    const double b = a * g + 2.0 * rng.uniform();
    const double th = -0.6 * a * g + 2.0 * rng.uniform();
    v.push_back({a, b, g, th});
  }
  return v;
}

Outcome c1_theorem() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t compared = 0, failed = 0, refused = 0;
  double worst = 0.0;
  for (double a : {0.3, 0.5, 0.7, 0.9, 1.0}) {
    const std::array<std::pair<double, double>, 4> bg{{{1.0, 1.0}, {1.5, 1.0}, {a, 1.0}, {2.0, 1.5}}};
    for (const auto& [b, g] : bg) {
      for (double th : {-a * g / 2.0, 0.0, 0.7}) {
        const BaseParams base{a, b, g, th};
        const PrabhakarTriple p = prabhakar_triple(base);
        MixtureEvaluator ev(base_to_composite(base));
        for (double la : {0.0, 0.5, 2.0}) {
          for (double x : {0.25, 1.0, 4.0}) {
            double series;
            try {
              series = prabhakar_kernel(p, la, x);
            } catch (const RouteError&) {
              ++refused;
              continue;
            }
            const double m = ev(la, x).value;
            const double r = std::fabs(series - m) / (1.0 + std::fabs(series));
            worst = std::max(worst, r);
            ++compared;
            if (!(r <= 1e-6)) ++failed;
          }
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {failed == 0 && secs < 300.0,
          fmt("%zu points compared, %zu outside |z| bound, max scaled dev %.2e (tol 1e-6), %.1f s", compared, refused,
              worst, secs)};
}

Outcome c2_laplace() {
  RandomSource rng(20240601);
  double worst = 0.0;
  std::size_t failed = 0;
  for (int i = 0; i < 50; ++i) {
    const double a = 0.2 + 0.8 * rng.uniform();
    const double g = 0.3 + 1.7 * rng.uniform();
    const BaseParams b{a, std::max(0.5, a * g) + 1.5 * rng.uniform(), g, 0.0};
    const double la = 2.0 * rng.uniform();
    const double s = 0.5 + 2.5 * rng.uniform();
    const PrabhakarTriple p = prabhakar_triple(b);
    // series where it holds, mixture beyond; never the inversion route
    MixtureEvaluator mixture(base_to_composite(b));
    const auto f = [&](double x) {
      try {
        return prabhakar_kernel(p, la, x);
      } catch (const RouteError&) {
        return mixture(la, x).value;
      }
    };
    const double num = laplace_numeric(f, s, {}, p.beta - 1.0).value;
    const double closed = prabhakar_laplace_closed(p, la, s);
    const double r = std::fabs(num - closed) / std::max(1.0, std::fabs(closed));
    worst = std::max(worst, r);
    if (!(r <= 1e-6)) ++failed;
  }
  return {failed == 0, fmt("50 points, %zu failures, max dev %.2e (tol 1e-6)", failed, worst)};
}

Outcome c3_inversion() {
  double worst_ref = 0.0, worst_series = 0.0;
  std::size_t failed = 0, series_points = 0;
  for (const auto& r : reference::kInversion) {
    const PrabhakarTriple p{r.alpha, r.beta, r.gamma};
    const double inv = prabhakar_via_inversion(p, -r.z, 1.0, {});
    const double d = std::fabs(inv - r.value) / std::max(1.0, std::fabs(r.value));
    worst_ref = std::max(worst_ref, d);
    if (!(d <= 1e-7)) ++failed;
    try {
      const double s = prabhakar_series(p, r.z);
      const double ds = std::fabs(inv - s) / std::max(1.0, std::fabs(s));
      worst_series = std::max(worst_series, ds);
      ++series_points;
      if (!(ds <= 1e-7)) ++failed;
    } catch (const RouteError&) {
    }
  }
  return {failed == 0, fmt("20 points |z|<=5: max dev vs 40-digit series %.2e, vs double series %.2e on %zu points "
                           "(tol 1e-7)",
                           worst_ref, worst_series, series_points)};
}

Outcome c4_mass_moments() {
  const auto sets = random_params(20, 77);
  double worst_mass = 0.0, worst_moment = 0.0;
  for (const auto& b : sets) {
    worst_mass = std::max(worst_mass, std::fabs(p_integral(b, 0.0, 0.0).value - 1.0));
    for (int n = 1; n <= 3; ++n) {
      const double a = p_moment(b, n);
      worst_moment = std::max(worst_moment, std::fabs(p_integral(b, n, 0.0).value - a) / std::max(1.0, a));
    }
  }
  return {worst_mass <= 1e-8 && worst_moment <= 1e-6,
          fmt("20 sets: max |mass-1| %.2e (tol 1e-8), max moment dev %.2e (tol 1e-6)", worst_mass, worst_moment)};
}

Outcome c5_montecarlo() {
  const auto t0 = std::chrono::steady_clock::now();
  RandomSource rng(0);
  const int n = 100000;
  const double alpha = 0.5;
  std::vector<double> draws(n);
  for (auto& d : draws) d = std::pow(stable_sample({alpha, 1.0}, rng), -alpha);  // T = S^{-alpha}
  auto zscore = [&](const std::function<double(double)>& fn, double exact) {
    double s = 0.0, s2 = 0.0;
    for (double d : draws) {
      const double v = fn(d);
      s += v;
      s2 += v * v;
    }
    const double mean = s / n;
    const double se = std::sqrt((s2 / n - mean * mean) / (n - 1));
    return std::fabs(mean - exact) / se;
  };
  // E_{1/2}(-lambda) = exp(lambda^2) erfc(lambda)
  double worst = zscore([](double t) { return t; }, 2.0 / std::sqrt(std::numbers::pi));
  for (double la : {0.5, 1.0, 2.0}) {
    worst = std::max(worst, zscore([la](double t) { return std::exp(-la * t); }, std::exp(la * la) * std::erfc(la)));
  }
  const double secs = seconds_since(t0);
  return {worst <= 3.0 && secs < 30.0, fmt("1e5 draws: max |z| %.2f over mean and 3 Laplace points (tol 3), %.2f s",
                                           worst, secs)};
}

Outcome c6_beta() {
  double worst_density = 0.0, worst_ks = 0.0;
  const BaseParams bases[] = {{1.0, 2.0, 1.0, 0.0}, {1.0, 3.0, 1.5, 0.5}};
  // Beta(1,1) and Beta(2,1.5)
  const std::function<double(double)> cdfs[] = {[](double t) { return t; },
                                                [](double t) { return 1.0 - std::pow(1.0 - t, 1.5) * (1.0 + 1.5 * t); }};
  for (int k = 0; k < 2; ++k) {
    const BaseParams& b = bases[k];
    const double p = b.gamma + b.theta, q = b.beta - b.gamma;
    for (int i = 1; i < 200; ++i) {
      const double t = i / 200.0;
      const double exact =
          std::exp((p - 1.0) * std::log(t) + (q - 1.0) * std::log1p(-t) + std::lgamma(p + q) - std::lgamma(p) -
                   std::lgamma(q));
      worst_density = std::max(worst_density, std::fabs(p_density(b, t) - exact) / std::max(1.0, exact));
    }
    RandomSource rng(1000 + k);
    auto d = p_sample(b, 20000, rng);
    std::sort(d.begin(), d.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double F = cdfs[k](d[i]);
      ks = std::max({ks, F - double(i) / d.size(), double(i + 1) / d.size() - F});
    }
    worst_ks = std::max(worst_ks, ks * std::sqrt(double(d.size())));
  }
  return {worst_density <= 1e-10 && worst_ks <= 1.628,
          fmt("max density dev %.2e (tol 1e-10), max KS sqrt(n)D %.3f (1%% critical 1.628)", worst_density, worst_ks)};
}

Outcome c7_id() {
  double worst = 0.0;
  for (double a : {0.3, 0.5, 0.8}) {
    for (double t : {0.5, 1.0, 2.0}) {
      for (double x : {0.5, 1.0, 2.0}) {
        const double xf = x * stable_pdf({a, t}, x);
        worst = std::max(worst, std::fabs(id_identity_residual(a, t, x)) / (1.0 + xf));
      }
    }
  }
  return {worst <= 1e-7, fmt("27 points: max residual/(1+xf) %.2e (tol 1e-7)", worst)};
}

Outcome c8_semigroup_scaling() {
  const QuadSpec spec;
  const QuadSpec inner = spec.tightened(1e-2);
  const auto f = [](double u) { return std::exp(-u) * (1.0 + u * u); };
  double worst_sg = 0.0, worst_p1 = 0.0;
  for (double n1 : {0.3, 0.7}) {
    for (double n2 : {0.3, 0.7}) {
      for (double x : {0.5, 1.0, 2.0}) {
        const double nested =
            rl_integral([&](double u) { return rl_integral(f, n1, u, inner).value; }, n2, x, spec, n1).value;
        const double direct = rl_integral(f, n1 + n2, x, spec).value;
        worst_sg = std::max(worst_sg, std::fabs(nested - direct) / std::max(1.0, std::fabs(direct)));
      }
    }
  }
  for (double a : {0.3, 0.6, 0.85}) {
    for (double nu : {0.25, 0.9, 1.6}) {
      for (double t : {0.5, 2.0}) {
        for (double x : {0.5, 1.5}) {
          const StableLaw law{a, t};
          const double direct = rl_integral([&](double u) { return stable_pdf(law, u, inner); }, nu, x, spec).value;
          const double scaled = std::pow(t, (nu - 1.0) / a) * rl_stable_standard(a, nu, x * std::pow(t, -1.0 / a)).value;
          worst_p1 = std::max(worst_p1, std::fabs(direct - scaled) / std::max(1.0, std::fabs(scaled)));
        }
      }
    }
  }
  return {worst_sg <= 1e-6 && worst_p1 <= 1e-6,
          fmt("semigroup 12 points max dev %.2e, scaling identity 36 points max dev %.2e (tol 1e-6)", worst_sg,
              worst_p1)};
}

Outcome c9_cm() {
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i) grid.push_back(0.1 * i);
  const auto sets = random_params(10, 99);
  std::size_t passed = 0;
  for (const auto& b : sets) {
    if (cm_check([&](double l) { return p_laplace(b, l); }, grid, 5).passed) ++passed;
  }
  const CmReport cosine = cm_check([](double l) { return std::cos(l); }, grid, 5);
  return {passed == sets.size() && !cosine.passed,
          fmt("%zu/10 parameter sets pass to order 5; cos rejected: %s", passed, cosine.passed ? "no" : "yes")};
}

Outcome c10_cli(const char* cli) {
  if (cli == nullptr) return {false, "no CLI path given"};
  const std::string cmd = std::string(cli) + " verify --suite all --seed 0";
  std::string outputs[2];
  int codes[2];
  for (int k = 0; k < 2; ++k) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return {false, "could not start the CLI"};
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) outputs[k].append(buf, got);
    const int status = pclose(pipe.release());
    codes[k] = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  const bool same = outputs[0] == outputs[1];
  return {codes[0] == 0 && codes[1] == 0 && same && !outputs[0].empty(),
          fmt("exit codes %d, %d; reports %s (%zu bytes)", codes[0], codes[1], same ? "byte-identical" : "differ",
              outputs[0].size())};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<Criterion> criteria{
      {"route agreement, mixture vs series", c1_theorem},
      {"closed-form Laplace transform", c2_laplace},
      {"inversion route", c3_inversion},
      {"mass and moments", c4_mass_moments},
      {"Monte Carlo, T = S^-alpha", c5_montecarlo},
      {"alpha = 1 Beta reduction", c6_beta},
      {"infinite-divisibility identity", c7_id},
      {"RL semigroup and scaling identity", c8_semigroup_scaling},
      {"complete monotonicity", c9_cm},
      {"CLI determinism", [cli] { return c10_cli(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  %2zu  %-36s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
