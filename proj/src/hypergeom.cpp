#include "padehyp/hypergeom.hpp"

#include <cmath>
#include <string>

#include "padehyp/errors.hpp"
#include "padehyp/special.hpp"

namespace padehyp {

namespace {

constexpr Precision kGuardBits = 64;
// Bookkeeping precision for error bounds; they only need a few correct digits.
constexpr Precision kBoundBits = 64;

// Terms are nonzero for every index when none of these is a nonpositive integer.
bool terminates_at(const BigFloat& x, long& index) {
  if (x.sign() > 0 || mpfr_integer_p(x.get()) == 0) return false;
  index = -mpfr_get_si(x.get(), MPFR_RNDN);
  return true;
}

}  // namespace

SeriesParams::SeriesParams(Scalar a, Scalar b, Scalar c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (c_.is_nonpositive_integer()) {
    throw InvalidParameter("2F1 parameter c must not be a nonpositive integer, got c = " + c_.to_string());
  }
}

Polynomial terminating_2f1(int n, const Scalar& b, const Scalar& d) {
  if (n < 0) throw PreconditionError("terminating_2f1: n must be nonnegative");
  std::vector<Scalar> coeffs;
  coeffs.reserve(static_cast<size_t>(n) + 1);
  coeffs.emplace_back(1);
  for (int k = 0; k < n; ++k) {
    Scalar numer = Scalar(k - n) * (b + Scalar(k));
    if (numer.is_zero()) break;  // (b)_{k+1} = 0, every later coefficient vanishes
    Scalar denom = (d + Scalar(k)) * Scalar(k + 1);
    if (denom.is_zero()) {
      throw PoleInDenominator("terminating_2f1: (d)_" + std::to_string(k + 1) + " = 0 with d = " + d.to_string() +
                              " while the numerator is nonzero");
    }
    coeffs.push_back(coeffs.back() * numer / denom);
  }
  return Polynomial(std::move(coeffs));
}

SeriesEvaluation eval_2f1_detailed(const SeriesParams& params, const BigComplex& z, const BigFloat& target_abs_error,
                                   const SeriesOptions& options) {
  if (target_abs_error.sign() <= 0) throw PreconditionError("eval_2f1: target_abs_error must be positive");
  const Precision out_bits = target_abs_error.precision();
  const Precision wp = std::max(out_bits, z.precision()) + kGuardBits;

  BigComplex zw(z.re.rounded(wp), z.im.rounded(wp));
  BigFloat modulus = zw.abs().rounded(kBoundBits);
  if (modulus >= BigFloat(1L, kBoundBits)) {
    throw DivergentAtPoint("eval_2f1: |z| = " + modulus.to_string(12) + " is not inside the unit disc");
  }

  BigFloat a = params.a().to_bigfloat(wp);
  BigFloat b = params.b().to_bigfloat(wp);
  BigFloat c = params.c().to_bigfloat(wp);

  long stop_a = 0;
  long stop_b = 0;
  bool finite_a = terminates_at(a, stop_a);
  bool finite_b = terminates_at(b, stop_b);
  long last_nonzero = -1;
  if (finite_a) last_nonzero = stop_a;
  if (finite_b) last_nonzero = last_nonzero < 0 ? stop_b : std::min(last_nonzero, stop_b);

  const BigFloat one(1L, wp);
  const BigFloat one_b(1L, kBoundBits);
  const BigFloat q = (one_b + modulus) / 2L;
  const BigFloat tail_factor = q / (one_b - q);
  const BigFloat unit_roundoff = ldexp(one_b, -static_cast<long>(wp));
  // Index beyond which a + j, b + j, c + j, j + 1 are all positive.
  const double first_positive = std::max({-a.to_double(), -b.to_double(), -c.to_double(), 0.0});
  const BigFloat target = target_abs_error.rounded(kBoundBits);

  BigComplex term(one, BigFloat(wp));
  BigComplex sum = term;
  BigFloat rounding(kBoundBits);

  for (long k = 0;; ++k) {
    // term == t_k, sum == t_0 + ... + t_k.
    BigFloat term_abs = term.abs().rounded(kBoundBits);
    rounding += term_abs * (12L * (k + 1)) * unit_roundoff + sum.abs().rounded(kBoundBits) * unit_roundoff;

    if (last_nonzero >= 0 && k == last_nonzero) {
      return {BigComplex(sum.re.rounded(out_bits), sum.im.rounded(out_bits)), static_cast<int>(k), rounding, true};
    }

    if (k >= options.min_terms && static_cast<double>(k) > first_positive + 1.0) {
      BigFloat kf(k, kBoundBits);
      BigFloat ratio_a = max(one_b, (a.rounded(kBoundBits) + kf) / (kf + one_b));
      BigFloat ratio_bc = max(one_b, (b.rounded(kBoundBits) + kf) / (c.rounded(kBoundBits) + kf));
      // Both factors are nonincreasing in the index from here on.
      BigFloat ratio_bound = modulus * ratio_a * ratio_bc;
      if (ratio_bound <= q) {
        BigFloat bound = term_abs * tail_factor + rounding;
        if (bound <= target) {
          return {BigComplex(sum.re.rounded(out_bits), sum.im.rounded(out_bits)), static_cast<int>(k), bound, false};
        }
      }
    }
    if (k >= options.max_terms) {
      throw NoRatioBound("eval_2f1: no certified tail bound within " + std::to_string(options.max_terms) + " terms");
    }

    BigFloat kw(k, wp);
    BigFloat factor = (a + kw) * (b + kw) / ((c + kw) * (kw + one));
    term = term * zw * factor;
    sum += term;
  }
}

BigComplex eval_2f1(const SeriesParams& params, const ComplexPoint& z, const BigFloat& target_abs_error,
                    const SeriesOptions& options) {
  if (z.is_exact() && z.norm_squared() >= Scalar(1)) {
    throw DivergentAtPoint("eval_2f1: |z| >= 1 (z = " + z.re.to_string() + " + " + z.im.to_string() + "i)");
  }
  Precision bits = std::max({target_abs_error.precision(), z.re.precision().value_or(0), z.im.precision().value_or(0)});
  return eval_2f1_detailed(params, z.to_bigcomplex(bits), target_abs_error, options).value;
}

BigComplex eval_2f1(const SeriesParams& params, const BigComplex& z, const BigFloat& target_abs_error,
                    const SeriesOptions& options) {
  return eval_2f1_detailed(params, z, target_abs_error, options).value;
}

}  // namespace padehyp
