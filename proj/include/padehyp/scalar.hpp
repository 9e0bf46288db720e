#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "padehyp/bigfloat.hpp"
#include "padehyp/rational.hpp"

namespace padehyp {

// Either an exact rational or a BigFloat. Exact-exact arithmetic stays exact;
// any operation involving a float promotes the exact side at the float's
// precision.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(Rational q) : value_(std::move(q)) {}
  Scalar(BigFloat f) : value_(std::move(f)) {}

  // Plain decimals and fractions parse exactly ("3.2" -> 16/5); the float wire
  // form "<decimal>@<bits>" parses to a BigFloat.
  static Scalar parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  // Throws DomainError for float values.
  const Rational& exact() const;
  const BigFloat* as_float() const { return std::get_if<BigFloat>(&value_); }
  // Precision of a float value; nullopt when exact.
  std::optional<Precision> precision() const;
  BigFloat to_bigfloat(Precision bits) const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  bool is_nonpositive_integer() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

  friend Scalar operator+(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator-(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator/(const Scalar& lhs, const Scalar& rhs);

  friend int compare(const Scalar& lhs, const Scalar& rhs);
  friend bool operator==(const Scalar& l, const Scalar& r) { return compare(l, r) == 0; }
  friend bool operator!=(const Scalar& l, const Scalar& r) { return compare(l, r) != 0; }
  friend bool operator<(const Scalar& l, const Scalar& r) { return compare(l, r) < 0; }
  friend bool operator>(const Scalar& l, const Scalar& r) { return compare(l, r) > 0; }
  friend bool operator<=(const Scalar& l, const Scalar& r) { return compare(l, r) <= 0; }
  friend bool operator>=(const Scalar& l, const Scalar& r) { return compare(l, r) >= 0; }

  // "num/den" for exact values, "<decimal>@<bits>" for floats.
  std::string to_string() const;

 private:
  std::variant<Rational, BigFloat> value_;
};

Scalar abs(const Scalar& x);

}  // namespace padehyp
