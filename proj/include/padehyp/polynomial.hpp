#pragma once

#include <span>
#include <string>
#include <vector>

#include "padehyp/complex.hpp"
#include "padehyp/scalar.hpp"

namespace padehyp {

// Dense univariate polynomial, coefficients in ascending power order.
// The trailing coefficient is nonzero unless the polynomial is zero, which is
// stored as an empty coefficient list with degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  Polynomial(std::initializer_list<Scalar> coeffs) : Polynomial(std::vector<Scalar>(coeffs)) {}

  static Polynomial constant(Scalar c) { return Polynomial({std::move(c)}); }
  static Polynomial monomial(Scalar c, int power);
  // prod (z - r_i)
  static Polynomial from_roots(std::span<const Scalar> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  // Coefficient of z^k; zero beyond the degree.
  Scalar coeff(int k) const;
  const Scalar& leading() const;

  Polynomial derivative() const;
  // Drops every power above max_power.
  Polynomial truncated(int max_power) const;
  Polynomial monic() const;
  std::vector<BigFloat> to_bigfloat(Precision bits) const;

  Scalar evaluate(const Scalar& z) const;
  ComplexPoint evaluate(const ComplexPoint& z) const;
  BigComplex evaluate(const BigComplex& z) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator-(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator*(const Scalar& s, const Polynomial& p);
  friend bool operator==(const Polynomial& l, const Polynomial& r);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division over the coefficient field; divisor must be nonzero.
DivMod divmod(const Polynomial& dividend, const Polynomial& divisor);
// Monic gcd; gcd(0, 0) is the zero polynomial.
Polynomial gcd(Polynomial a, Polynomial b);

// Horner evaluation of a float coefficient list at a complex point.
BigComplex horner(std::span<const BigFloat> coeffs, const BigComplex& z);

}  // namespace padehyp
