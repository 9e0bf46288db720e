#include "padehyp/scalar.hpp"

#include <algorithm>

#include "padehyp/errors.hpp"

namespace padehyp {

namespace {

template <class ExactOp, class FloatOp>
Scalar combine(const Scalar& lhs, const Scalar& rhs, ExactOp exact_op, FloatOp float_op) {
  if (lhs.is_exact() && rhs.is_exact()) return Scalar(exact_op(lhs.exact(), rhs.exact()));
  Precision bits = std::max(lhs.precision().value_or(0), rhs.precision().value_or(0));
  return Scalar(float_op(lhs.to_bigfloat(bits), rhs.to_bigfloat(bits)));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  if (text.find('@') != std::string_view::npos) return Scalar(parse_bigfloat(text));
  return Scalar(parse_rational(text));
}

const Rational& Scalar::exact() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw DomainError("scalar is a float, not an exact rational");
}

std::optional<Precision> Scalar::precision() const {
  if (const auto* f = as_float()) return f->precision();
  return std::nullopt;
}

BigFloat Scalar::to_bigfloat(Precision bits) const {
  if (const auto* f = as_float()) return f->rounded(bits);
  return BigFloat(std::get<Rational>(value_), bits);
}

double Scalar::to_double() const {
  if (const auto* f = as_float()) return f->to_double();
  return std::get<Rational>(value_).get_d();
}

int Scalar::sign() const {
  if (const auto* f = as_float()) return f->sign();
  return sgn(std::get<Rational>(value_));
}

bool Scalar::is_integer() const {
  if (const auto* f = as_float()) return mpfr_integer_p(f->get()) != 0;
  return padehyp::is_integer(std::get<Rational>(value_));
}

bool Scalar::is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

Scalar Scalar::operator-() const {
  if (const auto* f = as_float()) return Scalar(-*f);
  return Scalar(Rational(-std::get<Rational>(value_)));
}

Scalar operator+(const Scalar& lhs, const Scalar& rhs) {
  return combine(
      lhs, rhs, [](const Rational& a, const Rational& b) { return Rational(a + b); },
      [](const BigFloat& a, const BigFloat& b) { return a + b; });
}

Scalar operator-(const Scalar& lhs, const Scalar& rhs) {
  return combine(
      lhs, rhs, [](const Rational& a, const Rational& b) { return Rational(a - b); },
      [](const BigFloat& a, const BigFloat& b) { return a - b; });
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
  return combine(
      lhs, rhs, [](const Rational& a, const Rational& b) { return Rational(a * b); },
      [](const BigFloat& a, const BigFloat& b) { return a * b; });
}

Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  return combine(
      lhs, rhs, [](const Rational& a, const Rational& b) { return Rational(a / b); },
      [](const BigFloat& a, const BigFloat& b) { return a / b; });
}

int compare(const Scalar& lhs, const Scalar& rhs) {
  int c = 0;
  if (lhs.is_exact() && rhs.is_exact()) {
    c = cmp(lhs.exact(), rhs.exact());
  } else {
    // Compare exactly: a finite float is itself a rational.
    c = cmp(lhs.is_exact() ? lhs.exact() : lhs.as_float()->to_rational(),
            rhs.is_exact() ? rhs.exact() : rhs.as_float()->to_rational());
  }
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string Scalar::to_string() const {
  if (const auto* f = as_float()) return serialize(*f);
  return padehyp::to_string(std::get<Rational>(value_));
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

}  // namespace padehyp
