#include <cstdlib>
#include <cstring>

#include "prabhakar/kernels.hpp"

namespace prabhakar::kernels {
namespace {

using SumFn = ExpSums (*)(const double*, const double*, std::size_t, double);

struct Dispatch {
  Isa isa = Isa::Scalar;
  SumFn sums = &exp_sums_scalar;
};

Dispatch choose() {
  Dispatch d;
  const char* env = std::getenv("PRABHAKAR_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return d;
#if defined(PRABHAKAR_HAVE_AVX2)
  if (avx2_available()) {
    d.isa = Isa::Avx2;
    d.sums = &exp_sums_avx2;
  }
#endif
  return d;
}

const Dispatch& dispatch() {
  static const Dispatch d = choose();
  return d;
}

}  // namespace

bool avx2_available() {
#if defined(PRABHAKAR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return dispatch().isa; }

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

ExpSums exp_sums(const double* w, const double* a, std::size_t n, double X) { return dispatch().sums(w, a, n, X); }

}  // namespace prabhakar::kernels
