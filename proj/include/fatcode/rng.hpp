#pragma once

#include <cstdint>

namespace fatcode {

// Deterministic 64-bit generator (splitmix64). Every randomized routine in
// the library draws from one of these, seeded explicitly, so identical seeds
// reproduce identical schemes, linear forms, and reports byte for byte.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [lo, hi] by reduction. The modulo bias for the tiny
  // ranges used here (width <= 19) is below 2^-59 and determinism is what
  // matters, not statistical perfection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t width = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next() % width);
  }

 private:
  std::uint64_t state_;
};

}  // namespace fatcode
