#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vein {

/// Deterministic RNG used everywhere seeded behaviour is part of a contract.
///
/// std::mt19937_64 output is fully specified by the standard, but the
/// std::*_distribution adaptors are not, so this class rolls its own
/// uniform/normal/bounded-int draws. Identical seeds give identical streams
/// on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 bits of randomness.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (polar form avoided to keep the
  /// consumption of engine output fixed at two draws per pair).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * M_PI * u2;
    spare_ = mag * std::sin(ang);
    have_spare_ = true;
    return mag * std::cos(ang);
  }

  double normal(double sigma) { return sigma * normal(); }

  /// Uniform integer in [0, n). n must be >= 1.
  int uniform_int(int n) {
    // multiply-shift; bias is negligible for the small n used here
    return static_cast<int>((static_cast<unsigned __int128>(engine_()) *
                             static_cast<unsigned __int128>(n)) >>
                            64);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// SplitMix64 step; used to derive independent child seeds from a root seed.
inline std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace vein
