#pragma once

#include <cstdint>
#include <random>

namespace jordanet {

// Seeded sampler used for every randomized choice in the library.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded integers are drawn by rejection sampling on the raw 64-bit
// output (not std::uniform_int_distribution, whose algorithm is
// implementation-defined), so a given seed produces the same stream on every
// platform and can be reproduced from other languages.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return lo + static_cast<std::int64_t>(draw % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jordanet
