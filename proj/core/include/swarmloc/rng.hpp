#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "swarmloc/geometry.hpp"

namespace swarmloc {

/// Deterministic RNG: mt19937_64 with explicit value mappings.
/// The standard pins the engine's output sequence; the standard
/// distributions are implementation-defined, so we map values ourselves
/// to keep scenario streams reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent substream: same scenario seed, distinct purpose tag.
  static Rng stream(std::uint64_t seed, std::uint64_t tag) {
    return Rng(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (tag + 1)));
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in (0, 1].
  double uniform_open0() { return 1.0 - uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // modulo bias is irrelevant at simulation scale
    return engine_() % n;
  }

  /// Standard normal via Box-Muller (deterministic, no cached spare).
  double normal() {
    double u1 = uniform_open0();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace swarmloc
