#pragma once

#include <cstdint>
#include <random>

namespace tambara {

inline constexpr std::uint32_t kDefaultSeed = 0x5EED0001u;

// mt19937 with modulo reduction; distribution objects are avoided because
// their output differs between standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint32_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint32_t next() { return static_cast<std::uint32_t>(engine_()); }

  // Uniform-ish integer in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937 engine_;
};

}  // namespace tambara
