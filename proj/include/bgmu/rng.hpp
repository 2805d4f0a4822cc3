#pragma once

// Deterministic splittable random streams. Every sample index gets its own
// stream derived from (seed, index, tag), so parallel draws are reproducible
// and independent of execution order.

#include <cstdint>

namespace bgmu {

class Rng {
 public:
  explicit Rng(uint64_t state) : s_(state) {}

  static Rng stream(uint64_t seed, uint64_t index, uint64_t tag) {
    Rng r(mix(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ mix(index + 0x2545f4914f6cdd1dull)) ^
          mix(tag + 0x6a09e667f3bcc909ull));
    r.next();
    return r;
  }

  uint64_t next() {
    s_ += 0x9e3779b97f4a7c15ull;
    return mix(s_);
  }

  /// Uniform in [0, bound) without modulo bias.
  uint64_t below(uint64_t bound) {
    if (bound == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }
  uint64_t s_;
};

}  // namespace bgmu
