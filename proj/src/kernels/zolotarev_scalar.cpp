#include <cmath>

#include "prabhakar/kernels.hpp"

namespace prabhakar::kernels {

ExpSums exp_sums_scalar(const double* w, const double* a, std::size_t n, double X) {
  ExpSums s;
  for (std::size_t j = 0; j < n; ++j) {
    const double arg = -X * a[j];
    const double e = arg < -708.0 ? 0.0 : std::exp(arg);
    const double we = w[j] * e;
    s.weighted += we;
    s.weighted_a += we * a[j];
  }
  return s;
}

}  // namespace prabhakar::kernels
