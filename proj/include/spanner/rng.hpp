#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace spanner {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stable hash-combine for deriving per-cell seeds from a base seed, so results
// do not depend on the order cells are executed in.
inline uint64_t derive_seed(uint64_t base, uint64_t salt) {
  uint64_t s = base ^ (0x9e3779b97f4a7c15ULL * (salt + 0x9e3779b97f4a7c15ULL));
  return splitmix64(s);
}

inline uint64_t hash_str(const char* s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (; *s; ++s) h = (h ^ (unsigned char)*s) * 0x100000001b3ULL;
  return h;
}

// All sampling goes through raw mt19937_64 output. std::* distributions are
// implementation-defined, so uniform/exponential draws are done by hand to keep
// seeded runs bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform double in [0, 1), 53 random bits.
  double unit() { return double(next() >> 11) * 0x1.0p-53; }

  // Unbiased uniform integer in [0, n); rejection sampling.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  int64_t uniform_int(int64_t lo, int64_t hi) {
    return lo + int64_t(below(uint64_t(hi - lo + 1)));
  }

  bool bernoulli(double p) { return unit() < p; }

  // Exponential with rate beta via inverse transform on U in (0, 1].
  double exponential(double beta) {
    double u = 1.0 - unit();
    return -std::log(u) / beta;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace spanner
