#pragma once

#include <cstdint>

#include "semcond/tensor.hpp"

namespace semcond {

// Counter-based deterministic generator (splitmix64 over an advancing
// counter). The stream depends only on the seed and the sequence of calls,
// never on platform or library internals, so fixed seeds reproduce runs
// bit-exactly everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  uint64_t next_u64();

  // Uniform in [0, 1).
  double uniform();

  // Uniform integer in [0, n), n >= 1.
  int64_t uniform_int(int64_t n);

  // Standard normal via Box-Muller; draws are generated in pairs and the
  // spare is cached, so one logical call may consume 0 or 2 raw words.
  double gaussian();

  // Independent stream derived from the current state and a stream id;
  // forking does not advance this generator.
  Rng fork(uint64_t stream) const;

  static uint64_t mix(uint64_t x);

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// n x dim draws from N(0, I).
Tensor sample_gaussian(Rng& rng, int64_t n, int64_t dim);

}  // namespace semcond
