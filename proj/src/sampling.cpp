#include "padehyp/sampling.hpp"

#include <limits>

#include "padehyp/errors.hpp"

namespace padehyp {

long Rng::uniform_int(long lo, long hi) {
  if (hi < lo) throw PreconditionError("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return static_cast<long>(static_cast<std::uint64_t>(lo) + x % span);
}

Rational Rng::open_rational(const Rational& lo, const Rational& hi, long max_den, bool non_integer) {
  if (!(lo < hi)) throw PreconditionError("open_rational: empty interval");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    long q = uniform_int(non_integer ? 2 : 1, max_den);
    // p ranges over the integers with lo < p/q < hi.
    Integer p_lo = floor(Rational(lo * q)) + 1;
    Integer p_hi = ceil(Rational(hi * q)) - 1;
    if (p_hi < p_lo || !p_lo.fits_slong_p() || !p_hi.fits_slong_p()) continue;
    long p = uniform_int(p_lo.get_si(), p_hi.get_si());
    if (non_integer && p % q == 0) continue;
    Rational r{Integer(p), Integer(q)};
    r.canonicalize();
    return r;
  }
  throw PreconditionError("open_rational: no admissible rational found in (" + to_string(lo) + ", " + to_string(hi) + ")");
}

}  // namespace padehyp
