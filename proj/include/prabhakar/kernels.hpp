#pragma once

#include <cstddef>

namespace prabhakar::kernels {

// Weighted exponential sums over a fixed node table:
//   sum_j w_j a_j exp(-X a_j)   and   sum_j w_j exp(-X a_j).
// These are the inner loops of the stable density and distribution
// function. A scalar reference and an AVX2+FMA variant exist; the variant
// is picked once per process from the CPU feature bits.

enum class Isa { Scalar, Avx2 };

struct ExpSums {
  double weighted_a = 0.0;  // sum w a exp(-X a)
  double weighted = 0.0;    // sum w exp(-X a)
};

ExpSums exp_sums_scalar(const double* w, const double* a, std::size_t n, double X);

#if defined(PRABHAKAR_HAVE_AVX2)
ExpSums exp_sums_avx2(const double* w, const double* a, std::size_t n, double X);
/// Elementwise exp of non-positive arguments; below -708 the result is 0.
void exp_nonpositive_avx2(const double* in, double* out, std::size_t n);
#endif

/// True if the running CPU supports the AVX2 variant.
bool avx2_available();

/// Variant in use. Setting PRABHAKAR_SIMD=scalar in the environment forces
/// the scalar reference.
Isa active_isa();
const char* isa_name(Isa isa);

ExpSums exp_sums(const double* w, const double* a, std::size_t n, double X);

}  // namespace prabhakar::kernels
