#pragma once

#include <cstdint>

namespace walkwatch {

// SplitMix64 (Steele/Lea/Vigna). The algorithm is fixed here, not delegated
// to <random>, so that every seed reproduces the same stream on every
// platform. split() derives a statistically independent child stream, which
// gives per-node walk generators whose output does not depend on scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) using the top 53 bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n), exact (rejection sampling, no modulo bias).
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Child stream for the given index; independent of calls made on *this.
  SplitMix64 split(std::uint64_t stream) const {
    SplitMix64 child(state_ ^ (stream + 1) * 0xd1b54a32d192ed03ULL);
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace walkwatch
