#pragma once

#include <cstddef>
#include <unordered_map>

#include "prabhakar/mlf.hpp"
#include "prabhakar/numerics.hpp"

namespace prabhakar {

/// Unnormalised gamma weight t^{mu-1} exp(-lambda t) / Gamma(mu).
struct GammaWeight {
  double mu = 1.0;
  double lambda = 0.0;

  void validate() const;
  double density(double t) const;
  /// lambda^{-mu}; infinite for lambda = 0.
  double total_mass() const;
};

/// Four base parameters. Valid range: 0 < alpha <= 1, gamma > 0,
/// beta >= alpha*gamma, theta > -alpha*gamma.
struct BaseParams {
  double alpha = 0.5;
  double beta = 1.0;
  double gamma = 1.0;
  double theta = 0.0;

  void validate() const;
};

/// Composite parameters: RL order nu = beta - alpha*gamma and gamma shape
/// mu = gamma + theta/alpha.
struct MixtureParams {
  double alpha = 0.5;
  double nu = 0.0;
  double mu = 1.0;

  void validate() const;
};

/// Throws ParameterError naming the violated constraint. nu within round-off
/// of zero is clamped to zero.
MixtureParams base_to_composite(const BaseParams& b);

/// The Prabhakar triple (alpha, beta + theta, gamma + theta/alpha) that the
/// mixture reproduces.
PrabhakarTriple prabhakar_triple(const BaseParams& b);

enum class SpecialCase { None, NuZero, NuOneMinusAlpha };

/// Which closed variant applies (tolerance 1e-13 on nu).
SpecialCase special_case(const BaseParams& b);

/// M(x | lambda) = (1/Gamma(mu)) int_0^inf {I^nu f_alpha(.|t)}(x) t^{mu-1} exp(-lambda t) dt.
///
/// Values of {I^nu f_alpha}(y) are memoised by y, so sweeps over lambda (and
/// repeated x) reuse them. Not thread safe; use one evaluator per thread.
class MixtureEvaluator {
 public:
  explicit MixtureEvaluator(const MixtureParams& m, const QuadSpec& spec = {});

  NumResult operator()(double lambda, double x);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  // {I^nu f_alpha}(y) * y^{1-nu}, bounded as y -> inf
  double scaled_rl(double y);

  MixtureParams m_;
  QuadSpec spec_;
  QuadSpec inner_;
  double inv_gamma_mu_;
  std::unordered_map<double, double> memo_;
};

NumResult mixture_eval(const MixtureParams& m, double lambda, double x, const QuadSpec& spec = {});

/// Closed variants without the inner fractional integral: nu = 0 and
/// nu = 1 - alpha. Throws DispatchError otherwise.
NumResult mixture_eval_special(const BaseParams& b, double lambda, double x, const QuadSpec& spec = {});

/// t^{gamma + theta2/alpha} {I^nu f_alpha(.|t)}(x) - t^{(beta + theta2 - 1)/alpha} {I^nu f_alpha}(x t^{-1/alpha}).
/// The first term integrates the scaled density directly, the second uses
/// the standard law; the difference vanishes for every admissible theta2.
double theta_shift_residual(const BaseParams& b, double theta2, double t, double x, const QuadSpec& spec = {});

}  // namespace prabhakar
