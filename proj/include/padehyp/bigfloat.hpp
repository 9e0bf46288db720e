#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "padehyp/rational.hpp"

namespace padehyp {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecisionBits = 256;
inline constexpr Precision kMinPrecisionBits = 64;

// Arbitrary-precision binary float. Every value carries its own precision;
// there is no global working precision. Arithmetic between two values is
// rounded to nearest at the larger of the two precisions.
class BigFloat {
 public:
  // Zero at the default precision.
  BigFloat();
  explicit BigFloat(Precision bits);
  BigFloat(long value, Precision bits);
  BigFloat(const Rational& value, Precision bits);
  BigFloat(double value, Precision bits);

  // Decimal or scientific notation, correctly rounded to `bits`.
  static BigFloat parse(std::string_view text, Precision bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Precision precision() const { return mpfr_get_prec(value_); }
  BigFloat rounded(Precision bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Exact conversion; the value must be finite.
  Rational to_rational() const;

  // Scientific notation "d.ddd...e±X" with `digits` significant digits;
  // digits == 0 prints every digit the precision supports.
  std::string to_string(int digits = 0) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator-(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator*(const BigFloat& lhs, long rhs);
  friend BigFloat operator/(const BigFloat& lhs, long rhs);

  friend int compare(const BigFloat& lhs, const BigFloat& rhs) { return mpfr_cmp(lhs.value_, rhs.value_); }
  friend bool operator==(const BigFloat& l, const BigFloat& r) { return mpfr_equal_p(l.value_, r.value_) != 0; }
  friend bool operator<(const BigFloat& l, const BigFloat& r) { return mpfr_less_p(l.value_, r.value_) != 0; }
  friend bool operator>(const BigFloat& l, const BigFloat& r) { return r < l; }
  friend bool operator<=(const BigFloat& l, const BigFloat& r) { return mpfr_lessequal_p(l.value_, r.value_) != 0; }
  friend bool operator>=(const BigFloat& l, const BigFloat& r) { return r <= l; }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat max(const BigFloat& x, const BigFloat& y);
BigFloat min(const BigFloat& x, const BigFloat& y);
// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
BigFloat const_pi(Precision bits);

// Wire form: "<scientific decimal>@<bits>", e.g. "1.25e+00@256".
std::string serialize(const BigFloat& x);
BigFloat parse_bigfloat(std::string_view text);

}  // namespace padehyp
