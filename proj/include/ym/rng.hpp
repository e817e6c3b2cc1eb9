#pragma once

#include <cmath>
#include <cstdint>

namespace ym {

// Deterministic, portable RNG. We avoid std:: distributions because their
// output is implementation-defined; report bytes must not depend on the
// standard library version.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ (Blackman/Vigna), seeded through SplitMix64.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  // Derive an independent stream, e.g. one per Monte Carlo block.
  Rng stream(uint64_t key) const {
    SplitMix64 sm(s_[0] ^ (0x632be59bd9b4e019ULL * (key + 1)));
    return Rng(sm.next());
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0,1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in {0,...,n-1}; n > 0. Rejection-free Lemire reduction would be
  // biased only below 2^-64 here, acceptable for 64-bit inputs, but we keep
  // the unbiased variant since draws are cheap.
  uint64_t next_below(uint64_t n) {
    uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Standard normal via Box-Muller.
  double next_normal() {
    double u1 = next_double(), u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Poisson by inversion; fine for the moderate means used here.
  uint64_t next_poisson(double mean) {
    if (mean <= 0.0) return 0;
    double u = next_double();
    double p = std::exp(-mean), cdf = p;
    uint64_t k = 0;
    const uint64_t cap = uint64_t(mean + 20.0 * std::sqrt(mean) + 200.0);
    while (u > cdf && k < cap) {
      ++k;
      p *= mean / double(k);
      cdf += p;
    }
    return k;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

}  // namespace ym
