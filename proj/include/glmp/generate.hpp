#ifndef GLMP_GENERATE_HPP
#define GLMP_GENERATE_HPP

#include <cstdint>

#include "glmp/model.hpp"

namespace glmp {

/// splitmix64: fixed-constant 64-bit generator so seeded instances are
/// bit-identical across platforms (no platform-default RNG).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

enum class GenScheme { P1, P2, P3 };

struct GenSpec {
  GenScheme scheme = GenScheme::P1;
  int p = 2;
  int p_bar_target = 1;  // P3 only
  int m = 10;
  int n = 20;
  std::uint64_t seed = 1;
  int max_retries = 200;
};

/// Draws an instance from the seeded stream, validating each draw
/// (nonempty, bounded, strictly positive bases); invalid draws are
/// discarded and redrawn from the same stream. Throws std::runtime_error
/// naming the last violated assumption when max_retries is exhausted.
///
/// P1: p = 2, alpha = 1, d = 1, x >= 0 rows appended after the m random
///     rows. P2: alpha = 1, d = 0, box 0 <= x <= 1. P3: d in [0,1],
///     |alpha| in (0,1] with signs set to hit p_bar_target, x >= 0.
GlmpInstance generate(const GenSpec& spec);

const char* to_string(GenScheme scheme);

}  // namespace glmp

#endif
