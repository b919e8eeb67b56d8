#pragma once

#include <cstdint>
#include <random>

// Randomness is part of the external contract: fixed algorithms, so the same
// seed reproduces the same instances on any platform. std::mt19937_64 has a
// standardized sequence; the helpers below avoid std::uniform_int_distribution
// on purpose, because its mapping is implementation-defined.

namespace meetpoint {

using Rng = std::mt19937_64;

// splitmix64 finalizer (Steele, Lea, Flood 2014); bijective on 64-bit words.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform integer in [0, bound) by rejection, bias-free and portable.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // bound == 0 would loop forever; callers guarantee bound >= 1.
  std::uint64_t limit = ~0ull - ~0ull % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace meetpoint
