#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "dcsit/types.hpp"

namespace dcsit {

/// Seeded random source. Independent substreams are obtained by hashing a
/// base seed with a list of stream coordinates (e.g. SNR point, draw index),
/// so results do not depend on the order in which streams are consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> coords);

  /// Circularly-symmetric complex standard normal, E|z|^2 = 1.
  cplx complex_normal();

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace dcsit
