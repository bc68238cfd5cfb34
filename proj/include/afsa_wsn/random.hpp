#pragma once

#include <cstdint>
#include <random>

namespace afsa_wsn {

/// Seeded generator with portable draws. The standard distributions are
/// implementation-defined, so uniform reals are built directly from the
/// 64-bit engine output to keep replays identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi].
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform in [-1, 1], the symmetric draw used by most swarm moves.
  double symmetric() { return uniform(-1.0, 1.0); }

  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(unit() * static_cast<double>(n)) % n;
  }

  bool chance(double p) { return unit() < p; }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace afsa_wsn
