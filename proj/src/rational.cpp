#include "padehyp/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "padehyp/errors.hpp"

namespace padehyp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw InvalidParameter("empty number");

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InvalidParameter("malformed rational '" + std::string(text) + "'");
    }
    Integer d(std::string(den), 10);
    if (d == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
    result = Rational(Integer(std::string(num), 10), d);
    result.canonicalize();
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) {
        throw InvalidParameter("malformed exponent in '" + std::string(text) + "'");
      }
      exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw InvalidParameter("malformed number '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num(digits, 10);
    long scale = exponent - static_cast<long>(frac_part.size());
    if (scale >= 0) {
      result = Rational(num * pow10(static_cast<unsigned long>(scale)));
    } else {
      result = Rational(num, pow10(static_cast<unsigned long>(-scale)));
      result.canonicalize();
    }
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

}  // namespace padehyp
