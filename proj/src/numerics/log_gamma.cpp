#include <cmath>
#include <limits>
#include <numbers>

#include "prabhakar/numerics.hpp"

namespace prabhakar {
namespace {

// zeta(k) - 1 for k = 2..41
constexpr double kZetaMinusOne[] = {
    0.64493406684822643647,  0.2020569031595942854,    0.082323233711138191516,
    0.036927755143369926331, 0.017343061984449139715,  0.0083492773819228268398,
    0.0040773561979443393787, 0.0020083928260822144179, 0.00099457512781808533715,
    0.0004941886041194645587, 0.00024608655330804829864, 0.00012271334757848914675,
    6.1248135058704829259e-5, 3.0588236307020493552e-5, 1.5282259408651871733e-5,
    7.6371976378997622736e-6, 3.8172932649998398565e-6, 1.9082127165539389257e-6,
    9.5396203387279611315e-7, 4.7693298678780646312e-7, 2.3845050272773299e-7,
    1.1921992596531107307e-7, 5.9608189051259479612e-8, 2.9803503514652280186e-8,
    1.4901554828365041235e-8, 7.450711789835429492e-9,  3.7253340247884570548e-9,
    1.8626597235130490064e-9, 9.3132743241966818287e-10, 4.656629065033784073e-10,
    2.328311833676505492e-10, 1.1641550172700519776e-10, 5.8207720879027008893e-11,
    2.9103850444970996869e-11, 1.4551921891041984236e-11, 7.2759598350574810145e-12,
    3.6379795473786511902e-12, 1.8189896503070659477e-12, 9.0949478402638892829e-13,
    4.547473783042154027e-13,
};
constexpr double kOneMinusEuler = 0.4227843350984671393935;

// Lanczos, g = 607/128, 15 terms
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

// ln Gamma(2 + e), |e| <= 0.5
double log_gamma_near_two(double e) {
  double sum = 0.0;
  double power = -e;  // becomes (-e)^k
  for (int k = 2; k < 42; ++k) {
    power *= -e;
    const double term = kZetaMinusOne[k - 2] / k * power;
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return kOneMinusEuler * e + sum;
}

double log_gamma_lanczos(double z) {
  const double zm = z - 1.0;
  double series = kLanczos[0];
  for (int k = 1; k < 15; ++k) series += kLanczos[k] / (zm + k);
  const double t = zm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (zm + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double z) {
  if (!(z > 0.0)) throw DomainError("log_gamma requires z > 0");
  if (std::isinf(z)) return z;
  double shift = 0.0;
  // Recur upward into [1.5, 2.5]; each step costs one log.
  while (z < 1.5) {
    if (z >= 0.5) {
      // z + 1 would round; z - 1 is exact here
      const double e = z - 1.0;
      return shift - std::log1p(e) + log_gamma_near_two(e);
    }
    shift -= std::log(z);
    z += 1.0;
  }
  if (z <= 2.5) return shift + log_gamma_near_two(z - 2.0);
  return shift + log_gamma_lanczos(z);
}

double gamma_function(double z) {
  if (!(z > 0.0)) throw DomainError("gamma_function requires z > 0");
  if (z > 171.7) return std::numeric_limits<double>::infinity();
  return std::exp(log_gamma(z));
}

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(x, 2.0);  // exact
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  // r in [-1, 1]; sin(pi r) = sin(pi (1 - r)) for r > 0
  double sign = 1.0;
  if (r < 0.0) {
    r = -r;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;
  if (r == 0.0) return 0.0;
  const double v = r <= 0.25 ? std::sin(std::numbers::pi * r) : std::cos(std::numbers::pi * (0.5 - r));
  return sign * v;
}

double reciprocal_gamma(double z) {
  if (std::isnan(z)) return z;
  if (z > 0.0) {
    if (z > 180.0) return 0.0;
    return std::exp(-log_gamma(z));
  }
  if (z == std::floor(z)) return 0.0;
  // 1/Gamma(z) = Gamma(1 - z) sin(pi z) / pi
  const double s = sin_pi(z);
  const double log_mag = log_gamma(1.0 - z) + std::log(std::fabs(s)) - std::log(std::numbers::pi);
  return std::copysign(std::exp(log_mag), s);
}

}  // namespace prabhakar
