#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gifpsi/errors.hpp"

namespace gifpsi {

/// Deterministic RNG wrapper. All sampling in the library goes through this
/// class so that a fixed seed reproduces every report byte for byte; the
/// double mappings are spelled out instead of relying on
/// std::uniform_real_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Log-uniform in [lo, hi), lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  /// Uniform over {0, ..., n-1} via rejection-free modulo of a wide draw.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }

  bool coin() { return (engine_() & 1u) != 0; }

  /// Standard normal via Box–Muller (one value per call, deterministic).
  double gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Derive an independent child stream; `salt` distinguishes purposes.
  Rng fork(std::uint64_t salt) const {
    // splitmix64 step over (state hash of the seed, salt)
    std::uint64_t z = seed_mix_ + salt * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_mix_ = engine_();  // consumed once; forks differ from parent draws
};

/// Shared sampling knobs for the numerical axiom checkers.
struct SamplerConfig {
  std::uint64_t seed = 42;
  int samples = 10000;
  double tolerance = 1e-9;

  void validate() const {
    if (samples <= 0) throw config_error("sampler.samples", "must be > 0");
    if (!(tolerance > 0.0)) throw config_error("sampler.tolerance", "must be > 0");
  }
};

}  // namespace gifpsi
