#pragma once

#include <cstdint>

namespace ecwsa {

// All randomness in the library flows through this splitmix64 stream so that
// runs are reproducible across platforms, compilers and thread counts.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // uniform integer in [0, bound), bound > 0; rejection keeps it unbiased
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

// Purpose tags keep substreams for different phases statistically disjoint.
enum class Purpose : std::uint64_t {
  Init = 1,
  Move = 2,
  Repair = 3,
  LocalSearch = 4,
  Folds = 5,
  Chaos = 6,
  RunSeed = 7,
};

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Substream seed derived from (master, a, b, purpose). Whales moving in
// parallel each get their own stream, so scheduling cannot perturb results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                                 Purpose purpose) {
  std::uint64_t h = mix64(master ^ 0x2545f4914f6cdd1dULL);
  h = mix64(h + 0x9e3779b97f4a7c15ULL * a);
  h = mix64(h + 0xc2b2ae3d27d4eb4fULL * b);
  h = mix64(h + static_cast<std::uint64_t>(purpose));
  return h;
}

inline RngStream substream(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                           Purpose purpose) {
  return RngStream(derive_seed(master, a, b, purpose));
}

}  // namespace ecwsa
