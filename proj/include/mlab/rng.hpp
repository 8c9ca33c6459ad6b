#pragma once

#include <cstdint>
#include <random>

#include "mlab/types.hpp"

namespace mlab {

/// Deterministic random source. Draws go through the raw 64-bit engine only,
/// so a seed reproduces the same stream on every platform and run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double sym() { return 2.0 * uniform() - 1.0; }

  cplx csym() { return {sym(), sym()}; }

  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  /// Child generator with a decorrelated seed; lets independent trials draw
  /// from independent streams regardless of evaluation order.
  Rng fork(std::uint64_t salt) {
    std::uint64_t s = gen_() ^ (0x9e3779b97f4a7c15ULL * (salt + 1));
    return Rng(s);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mlab
