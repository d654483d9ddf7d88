#pragma once

#include <cstdint>
#include <random>

namespace raks {

// std::mt19937_64 is fully specified by the standard, the std distributions
// are not. These two helpers keep seeded output identical across standard
// library implementations.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // 2^64 mod bound values at the bottom are rejected.
  const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % bound;
}

// Uniform real in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace raks
