#pragma once

#include <cstdint>

namespace ffproj {

// Deterministic counter-based generator.  Output i of a stream keyed by k is
// mix(k + (i+1)*GOLDEN), so streams are pure functions of (key, counter) and
// behave identically on every platform.  child(i) derives an independent
// stream; the construction is frozen by the test vectors in the test suite.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed ^ SEED_TWEAK)) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * GOLDEN); }

  // Uniform in [0, bound) by rejection; bound 0 is a contract violation.
  std::uint32_t below(std::uint32_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      std::uint64_t x = next_u64();
      if (x < limit) return std::uint32_t(x % bound);
    }
  }

  Rng child(std::uint64_t index) const {
    Rng c(0);
    c.key_ = mix((key_ ^ CHILD_TWEAK) + (index + 1) * GOLDEN);
    c.counter_ = 0;
    return c;
  }

 private:
  static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t SEED_TWEAK = 0x5851F42D4C957F2DULL;
  static constexpr std::uint64_t CHILD_TWEAK = 0xD1342543DE82EF95ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ffproj
