#pragma once

#include <cstdint>
#include <random>

#include "padehyp/rational.hpp"

namespace padehyp {

// Seeded generator for every randomized sweep. The engine is std::mt19937_64,
// whose output sequence is fixed by the C++ standard; the bounded-integer and
// rational mappings below are implemented here (not via std::*_distribution,
// whose algorithms vary between standard libraries), so a seed replays
// identically on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi], by rejection sampling.
  long uniform_int(long lo, long hi);

  // Uniform choice among the rationals p/q in the open interval (lo, hi) with
  // 1 <= q <= max_den (q drawn first, then p). When non_integer is set, q >= 2
  // and p is not a multiple of q.
  Rational open_rational(const Rational& lo, const Rational& hi, long max_den, bool non_integer = false);

 private:
  std::mt19937_64 engine_;
};

}  // namespace padehyp
