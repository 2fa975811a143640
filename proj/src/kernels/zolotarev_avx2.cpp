#include <immintrin.h>

#include <cmath>

#include "prabhakar/kernels.hpp"

namespace prabhakar::kernels {
namespace {

// exp(x) for x <= 0. x = k ln2 + r with |r| <= ln2/2 (two-part ln2),
// exp(r) by a degree-13 Taylor polynomial in Horner form, 2^k built in the
// exponent field. Arguments below -708 return 0.
inline __m256d exp_nonpositive(__m256d x) {
  const __m256d lo_limit = _mm256_set1_pd(-708.0);
  const __m256d underflow = _mm256_cmp_pd(x, lo_limit, _CMP_LT_OQ);
  x = _mm256_max_pd(x, lo_limit);

  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);

  static constexpr double inv_fact[14] = {1.0,
                                          1.0,
                                          1.0 / 2,
                                          1.0 / 6,
                                          1.0 / 24,
                                          1.0 / 120,
                                          1.0 / 720,
                                          1.0 / 5040,
                                          1.0 / 40320,
                                          1.0 / 362880,
                                          1.0 / 3628800,
                                          1.0 / 39916800,
                                          1.0 / 479001600,
                                          1.0 / 6227020800.0};
  __m256d p = _mm256_set1_pd(inv_fact[13]);
  for (int i = 12; i >= 0; --i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_fact[i]));

  // 2^k: k in [-1022, 0] after the clamp, so the biased exponent stays normal.
  const __m128i ki = _mm256_cvtpd_epi32(k);
  __m256i bits = _mm256_cvtepi32_epi64(ki);
  bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
  bits = _mm256_slli_epi64(bits, 52);
  const __m256d scale = _mm256_castsi256_pd(bits);
  const __m256d result = _mm256_mul_pd(p, scale);
  return _mm256_andnot_pd(underflow, result);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

ExpSums exp_sums_avx2(const double* w, const double* a, std::size_t n, double X) {
  const __m256d negx = _mm256_set1_pd(-X);
  __m256d acc_w = _mm256_setzero_pd();
  __m256d acc_wa = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d av = _mm256_loadu_pd(a + j);
    const __m256d wv = _mm256_loadu_pd(w + j);
    const __m256d e = exp_nonpositive(_mm256_mul_pd(negx, av));
    const __m256d we = _mm256_mul_pd(wv, e);
    acc_w = _mm256_add_pd(acc_w, we);
    acc_wa = _mm256_fmadd_pd(we, av, acc_wa);
  }
  ExpSums s{hsum(acc_wa), hsum(acc_w)};
  for (; j < n; ++j) {
    const double arg = -X * a[j];
    const double e = arg < -708.0 ? 0.0 : std::exp(arg);
    s.weighted += w[j] * e;
    s.weighted_a += w[j] * e * a[j];
  }
  return s;
}

void exp_nonpositive_avx2(const double* in, double* out, std::size_t n) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) _mm256_storeu_pd(out + j, exp_nonpositive(_mm256_loadu_pd(in + j)));
  for (; j < n; ++j) out[j] = in[j] < -708.0 ? 0.0 : std::exp(in[j]);
}

}  // namespace prabhakar::kernels
