#pragma once

#include <cstdint>

#include "jpair/rat.hpp"

namespace jpair {

// splitmix64. Hand-rolled because std::uniform_int_distribution is not
// bit-reproducible across standard libraries and every randomized sweep here
// must replay byte-identically from its seed.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive. Rejection sampling keeps it unbiased.
  long long range(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(next());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return lo + static_cast<long long>(v % span);
  }

  int index(int n) { return static_cast<int>(range(0, n - 1)); }

  // Numerator in [lo, hi], denominator in [1, max_den].
  Rat rat(long long lo, long long hi, long long max_den = 1) {
    return Rat(range(lo, hi), max_den <= 1 ? 1 : range(1, max_den));
  }

 private:
  std::uint64_t s_;
};

}  // namespace jpair
