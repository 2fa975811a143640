#pragma once

#include <cstdint>
#include <random>

namespace prabhakar {

/// Caller-owned random source. Variates are derived from the raw 64-bit
/// engine output by fixed formulas, so a seed reproduces the same stream on
/// every platform and standard library.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform on the open interval (0, 1).
  double uniform();
  double exponential();
  double normal();
  /// Gamma(shape, 1), shape > 0.
  double gamma(double shape);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace prabhakar
