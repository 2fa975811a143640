#pragma once

#include <optional>

#include "prabhakar/numerics.hpp"

namespace prabhakar {

/// h_nu(x) = x^{nu-1} / Gamma(nu); nu = 0 stands for the identity.
struct RLKernel {
  double nu = 0.5;

  void validate() const;
  bool identity() const { return nu == 0.0; }
  /// h_nu(x) for nu > 0, x > 0 (0 for x <= 0).
  double operator()(double x) const;
};

/// {I^nu f}(x) = (1/Gamma(nu)) int_0^x (x-u)^{nu-1} f(u) du; nu = 0 returns
/// f(x). For 0 < nu < 1 the kernel is removed by u = x - v^{1/nu}.
/// `f_origin_exponent` declares f(u) ~ u^p at u = 0.
NumResult rl_integral(const RealFunction& f, double nu, double x, const QuadSpec& spec,
                      std::optional<double> f_origin_exponent = std::nullopt);

/// {I^nu f_alpha}(x) for the standard stable density, 0 < alpha < 1.
/// Uses the inverse-power series above its switch point and quadrature of
/// the density below it.
NumResult rl_stable_standard(double alpha, double nu, double x, const QuadSpec& spec = {});

/// {I^nu f_alpha(.|t)}(x). alpha < 1 uses the scaling identity
/// t^{(nu-1)/alpha} {I^nu f_alpha}(x t^{-1/alpha}); alpha = 1 uses
/// (x - t)^{nu-1} / Gamma(nu) for t < x and refuses nu = 0.
NumResult rl_stable(double alpha, double nu, double t, double x, const QuadSpec& spec = {});

}  // namespace prabhakar
