#include "padehyp/special.hpp"

#include "padehyp/errors.hpp"

namespace padehyp {

Scalar pochhammer(const Scalar& x, int k) {
  if (k < 0) throw PreconditionError("pochhammer: k must be nonnegative");
  if (x.is_exact()) {
    Rational acc(1);
    Rational term = x.exact();
    for (int j = 0; j < k; ++j) {
      acc *= term;
      term += 1;
    }
    return Scalar(acc);
  }
  const BigFloat& xf = *x.as_float();
  BigFloat acc(1L, xf.precision());
  BigFloat one(1L, xf.precision());
  BigFloat term = xf;
  for (int j = 0; j < k; ++j) {
    acc *= term;
    term += one;
  }
  return Scalar(acc);
}

Scalar gamma_ratio(const Scalar& x, int k) { return pochhammer(x, k); }

Rational factorial(int k) {
  if (k < 0) throw PreconditionError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r);
}

BigFloat log_gamma(const BigFloat& x) {
  if (x.sign() <= 0) throw DomainError("log_gamma: argument must be positive, got " + x.to_string(12));
  BigFloat r(x.precision());
  mpfr_lngamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace padehyp
