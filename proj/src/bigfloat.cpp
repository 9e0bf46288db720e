#include "padehyp/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "padehyp/errors.hpp"

namespace padehyp {

namespace {

Precision checked(Precision bits) {
  if (bits < kMinPrecisionBits) {
    throw InvalidParameter("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits, got " +
                           std::to_string(bits));
  }
  return bits;
}

Precision joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

BigFloat nan_checked(BigFloat r, const char* op) {
  if (mpfr_nan_p(r.get())) throw DomainError(std::string(op) + ": result is not a number");
  return r;
}

}  // namespace

BigFloat::BigFloat() : BigFloat(kDefaultPrecisionBits) {}

BigFloat::BigFloat(Precision bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision bits) : BigFloat(bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value, Precision bits) : BigFloat(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double value, Precision bits) : BigFloat(bits) { mpfr_set_d(value_, value, MPFR_RNDN); }

BigFloat BigFloat::parse(std::string_view text, Precision bits) {
  BigFloat r(bits);
  std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw InvalidParameter("malformed float '" + s + "'");
  }
  return r;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::rounded(Precision bits) const {
  BigFloat r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw DomainError("cannot convert a non-finite float to a rational");
  Integer mantissa;
  mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  Rational r(mantissa);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (digits <= 0) {
    digits = 1 + static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120));
  }
  if (is_zero()) {
    std::string z = "0";
    if (digits > 1) z += "." + std::string(static_cast<size_t>(digits - 1), '0');
    return z + "e+00";
  }
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN),
                                             mpfr_free_str);
  std::string mant(raw.get());
  std::string out;
  if (!mant.empty() && mant.front() == '-') {
    out += '-';
    mant.erase(0, 1);
  }
  out += mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long e = static_cast<long>(exp10) - 1;
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return out + buf;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat operator+(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat r(joint(lhs, rhs));
  mpfr_add(r.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat r(joint(lhs, rhs));
  mpfr_sub(r.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat r(joint(lhs, rhs));
  mpfr_mul(r.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  BigFloat r(joint(lhs, rhs));
  mpfr_div(r.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& lhs, long rhs) {
  BigFloat r(lhs.precision());
  mpfr_mul_si(r.value_, lhs.value_, rhs, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& lhs, long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  BigFloat r(lhs.precision());
  mpfr_div_si(r.value_, lhs.value_, rhs, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw DomainError("log of a nonpositive number");
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat r(joint(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return nan_checked(std::move(r), "pow");
}

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(joint(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& x, const BigFloat& y) { return x < y ? y : x; }
BigFloat min(const BigFloat& x, const BigFloat& y) { return y < x ? y : x; }

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat const_pi(Precision bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

std::string serialize(const BigFloat& x) { return x.to_string() + "@" + std::to_string(x.precision()); }

BigFloat parse_bigfloat(std::string_view text) {
  auto at = text.rfind('@');
  if (at == std::string_view::npos) throw InvalidParameter("float '" + std::string(text) + "' lacks '@<bits>'");
  std::string bits_text(text.substr(at + 1));
  char* end = nullptr;
  long bits = std::strtol(bits_text.c_str(), &end, 10);
  if (bits_text.empty() || *end != '\0') throw InvalidParameter("malformed precision in '" + std::string(text) + "'");
  return BigFloat::parse(text.substr(0, at), static_cast<Precision>(bits));
}

}  // namespace padehyp
