#pragma once

#include <cstdint>

namespace descents {

// Counter-style generator; cheap to seed, deterministic across platforms,
// splittable into independent streams.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  static SplitMix64 stream(uint64_t seed, uint64_t stream_id) {
    SplitMix64 s(seed + 0x9e3779b97f4a7c15ull * (stream_id + 1));
    s.next();
    return s;
  }

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // unbiased uniform in [0, bound)
  uint64_t below(uint64_t bound) {
    if (bound == 0) return 0;
    uint64_t mask = ~0ull;
    unsigned bits = 64;
    while (bits > 1 && (bound - 1) >> (bits - 1) == 0) {
      --bits;
      mask >>= 1;
    }
    for (;;) {
      uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }
};

}  // namespace descents
