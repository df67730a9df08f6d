#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace fdiag {

// Deterministic cross-platform randomness: mt19937_64 plus a hand-rolled
// bounded draw (std::uniform_int_distribution is not portable across
// standard libraries, which would break byte-identical output).
class rng {
 public:
  explicit rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, n) by rejection from the top of the 64-bit range.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t limit = top - (top % n);
    for (;;) {
      std::uint64_t v = gen_();
      if (v < limit) return v % n;
    }
  }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (gen_() & 1) != 0; }

  // Independent child stream; splitting keeps parallel sampling deterministic.
  rng child(std::uint64_t stream) const { return rng(mix(seed_, stream)); }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace fdiag
