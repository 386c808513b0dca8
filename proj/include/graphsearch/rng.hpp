#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace graphsearch {

// splitmix64 step; used to derive well-separated per-trial seeds from a
// master seed so that trial k can be reproduced without running trials 0..k-1.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x2545f4914f6cdd1dULL * (stream + 1));
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

// Thin wrapper around mt19937_64 with explicitly specified mappings to
// doubles and bounded ints, so that identical seeds give identical streams
// independently of standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound >= 1. Rejection sampling, no modulo bias.
  int next_int(int bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = ~0ULL - (~0ULL % b);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return static_cast<int>(x % b);
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(next_int(static_cast<int>(items.size())))];
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace graphsearch
