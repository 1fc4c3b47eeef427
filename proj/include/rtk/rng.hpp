#pragma once

#include <cstdint>

#include "rtk/rational.hpp"

namespace rtk {

/// Counter-based generator: output k is splitmix64(seed, k), so a stream is
/// reproducible from (seed, counter) alone on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  /// Rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rat rational(std::int64_t num_bound, std::int64_t den_bound) {
    const long p = static_cast<long>(uniform(-num_bound, num_bound));
    const long q = static_cast<long>(uniform(1, den_bound));
    Rat r(p, q);
    r.canonicalize();
    return r;
  }

  std::uint64_t counter() const { return counter_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace rtk
