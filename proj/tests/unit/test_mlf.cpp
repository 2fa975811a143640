#include <doctest.h>

#include <cmath>
#include <numbers>
#include <optional>

#include "../reference/reference_values.hpp"
#include "helpers.hpp"
#include "prabhakar/mlf.hpp"
#include "prabhakar/random.hpp"

using namespace prabhakar;
using testing::mixed_err;
using testing::rel_err;

TEST_SUITE("mlf") {
  TEST_CASE("triple validation") {
    CHECK_THROWS_AS((PrabhakarTriple{0.5, 0.0, 1.0}.validate()), ParameterError);
    CHECK_THROWS_AS((PrabhakarTriple{0.5, 1.0, -1.0}.validate()), ParameterError);
    CHECK_THROWS_AS((PrabhakarTriple{-0.5, 1.0, 1.0}.validate()), ParameterError);
  }

  TEST_CASE("elementary closed forms") {
    // The series is accepted while its rounding estimate stays inside the
    // 1e-8 budget, so agreement is measured on that scale;
    // prabhakar_function tightens it to rel_tol.
    for (double z : {-5.0, -1.0, -0.1, 0.3, 2.0}) {
      CAPTURE(z);
      CHECK(mixed_err(ml1(1.0, z), std::exp(z)) < 1e-12);
      CHECK(mixed_err(prabhakar_series({1.0, 2.0, 1.0}, z), std::expm1(z) / z) < 1e-12);
      // E^gamma_{1,gamma}(z) = exp(z)/Gamma(gamma)
      CHECK(mixed_err(prabhakar_series({1.0, 1.7, 1.7}, z), std::exp(z) / std::tgamma(1.7)) < 1e-12);
      CHECK(rel_err(prabhakar_function({1.0, 1.0, 1.0}, z), std::exp(z)) < 1e-9);
    }
    for (double z : {0.1, 1.0, 2.5, 4.0}) {
      CAPTURE(z);
      CHECK(mixed_err(ml1(2.0, -z * z), std::cos(z)) < 1e-12);
      // E_{1/2}(-z) = exp(z^2) erfc(z)
      const double exact = std::exp(z * z) * std::erfc(z);
      CHECK(mixed_err(ml1(0.5, -z), exact) < 1e-8);
      CHECK(rel_err(prabhakar_function({0.5, 1.0, 1.0}, -z), exact) < 1e-9);
    }
    CHECK(rel_err(ml1(0.5, -1.0), 0.42758357615580700) < 1e-14);
  }

  TEST_CASE("series against high-precision values") {
    for (const auto& r : reference::kPrabhakar) {
      CAPTURE(r.alpha);
      CAPTURE(r.beta);
      CAPTURE(r.gamma);
      CAPTURE(r.z);
      // refused points must still be reachable through prabhakar_function
      std::optional<double> series;
      try {
        series = prabhakar_series({r.alpha, r.beta, r.gamma}, r.z);
      } catch (const RouteError&) {
      }
      if (series) CHECK(mixed_err(*series, r.value) < 1e-11);
      CHECK(mixed_err(prabhakar_function({r.alpha, r.beta, r.gamma}, r.z), r.value) < 1e-9);
    }
  }

  TEST_CASE("series refuses outside its bounds") {
    CHECK_THROWS_AS(prabhakar_series({0.5, 1.0, 1.0}, -31.0), RouteError);
    CHECK_THROWS_AS(prabhakar_series({0.0, 1.0, 1.0}, 1.0), RouteError);
    // alpha = 0 inside the disc is a geometric-type series: (1 - z)^{-gamma}/Gamma(beta)
    CHECK(rel_err(prabhakar_series({0.0, 1.0, 2.0}, 0.5), 4.0) < 1e-14);
    // heavy cancellation for small alpha
    CHECK_THROWS_AS(prabhakar_series({0.2, 1.0, 1.0}, -25.0), RouteError);
    CHECK(prabhakar_series_detail({0.2, 1.0, 1.0}, -25.0).abs_sum > 1e10);
  }

  TEST_CASE("kernel") {
    const PrabhakarTriple p{0.5, 1.5, 2.0};
    CHECK(rel_err(prabhakar_kernel(p, 0.0, 2.0), std::sqrt(2.0) / std::tgamma(1.5)) < 1e-14);
    CHECK(rel_err(prabhakar_kernel(p, 0.7, 2.0), std::sqrt(2.0) * prabhakar_series(p, -0.7 * std::sqrt(2.0))) < 1e-15);
    CHECK_THROWS_AS(prabhakar_kernel(p, 0.7, 0.0), DomainError);
  }

  TEST_CASE("closed-form Laplace transform against quadrature") {
    RandomSource rng(9);
    const QuadSpec spec;
    for (int i = 0; i < 8; ++i) {
      const PrabhakarTriple p{0.3 + 0.7 * rng.uniform(), 0.6 + 1.5 * rng.uniform(), 0.4 + 1.5 * rng.uniform()};
      const double lambda = 0.3 * rng.uniform();
      const double s = 1.0 + rng.uniform();
      CAPTURE(p.alpha);
      CAPTURE(p.beta);
      CAPTURE(p.gamma);
      const double num =
          laplace_numeric([&](double x) { return prabhakar_kernel(p, lambda, x); }, s, spec, p.beta - 1.0).value;
      CHECK(rel_err(num, prabhakar_laplace_closed(p, lambda, s)) < 1e-6);
    }
    CHECK_THROWS_AS(prabhakar_laplace_closed({0.5, 1.0, 1.0}, 1.0, 0.0), DomainError);
  }

  TEST_CASE("inversion route against high-precision values") {
    for (const auto& r : reference::kInversion) {
      CAPTURE(r.alpha);
      CAPTURE(r.z);
      const double v = prabhakar_via_inversion({r.alpha, r.beta, r.gamma}, -r.z, 1.0, {});
      CHECK(mixed_err(v, r.value) < 1e-9);
    }
  }

  TEST_CASE("large negative argument goes through inversion") {
    // E_{1/2}(-40) = exp(1600) erfc(40) ~ 1/(40 sqrt(pi)) (1 - 1/3200 + ...)
    const double v = prabhakar_function({0.5, 1.0, 1.0}, -40.0);
    const double asym = 1.0 / (40.0 * std::sqrt(std::numbers::pi)) * (1.0 - 1.0 / 3200.0 + 3.0 / (3200.0 * 3200.0));
    CHECK(rel_err(v, asym) < 1e-8);
    CHECK_THROWS_AS(prabhakar_function({0.5, 1.0, 1.0}, 40.0), RouteError);
  }

  TEST_CASE("monotone decrease in lambda") {
    for (const PrabhakarTriple p : {PrabhakarTriple{0.5, 1.2, 0.8}, PrabhakarTriple{0.9, 2.0, 1.5}}) {
      double prev = prabhakar_function(p, 0.0);
      for (double la = 0.25; la <= 60.0; la *= 1.4) {
        const double v = prabhakar_function(p, -la);
        CHECK(v <= prev + 1e-12);
        prev = v;
      }
    }
  }
}
