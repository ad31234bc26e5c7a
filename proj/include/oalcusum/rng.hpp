#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace oalcusum {

// SplitMix64 output function. Used to turn (master seed, replication index)
// into well-separated engine seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream key for replication `rep` under `master`. The mapping is injective
// in rep for a fixed master (odd multiplier), so replications never share an
// engine seed.
inline std::uint64_t replication_stream_key(std::uint64_t master, std::uint64_t rep) {
  return splitmix64(master ^ (0x9E3779B97F4A7C15ull * (rep + 1)));
}

// Deterministic uniform/normal source. Doubles are derived from the raw
// 64-bit engine output directly (not through std::uniform_real_distribution,
// whose draw counts are implementation-defined), so a fixed seed yields the
// same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller, cosine branch only. Consumes exactly two
  // uniforms per call; no cached state.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    // u1 == 0 would send log to -inf; nudge to the smallest representable draw.
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oalcusum
