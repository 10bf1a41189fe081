#pragma once

#include <cstdint>

namespace spinvar {

// splitmix64: tiny, portable, and good enough for sampling test instances.
// All randomized suites derive their streams from an explicit seed so that
// runs are reproducible bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

// Splitting rule (seed, trial index) -> child seed, shared by every
// randomized suite.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
  return g.next();
}

}  // namespace spinvar
