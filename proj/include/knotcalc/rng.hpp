#pragma once

#include <cstdint>

namespace knotcalc {

// All randomness in the project (Markov walks, fuzz tests, lower-central
// series elements) flows through this generator, so a 64-bit seed fully
// determines every output byte. splitmix64 is used instead of <random>
// distributions because those are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; deterministic given the seed.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~0ULL - (~0ULL % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  bool coin() { return (next() & 1) != 0; }

  // Derive an independent stream (for per-trial seeding).
  std::uint64_t fork() { return next(); }

 private:
  std::uint64_t state_;
};

}  // namespace knotcalc
