#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "hyperfact/rational.hpp"

namespace hyperfact {

/// Deterministic per-trial source of small random rationals.
///
/// Each (seed, stream, trial) triple gets its own engine, so trials can be
/// drawn in any order or on any thread and still reproduce exactly.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream, std::uint64_t trial);

  /// num uniform in [-20, 20], den uniform in [1, 12].
  Rational rational();
  Rational nonzero_rational();
  /// q = a/b with 1 <= a < b <= 8, so q lies in (0, 1).
  Rational unit_q();
  /// Uniform integer in [lo, hi].
  unsigned uniform(unsigned lo, unsigned hi);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Stable 64-bit FNV-1a hash; used to derive per-stream seeds.
std::uint64_t fnv1a(std::string_view text);

}  // namespace hyperfact
