#pragma once

#include <algorithm>
#include <string>

#include "padehyp/bigfloat.hpp"
#include "padehyp/scalar.hpp"

namespace padehyp {

struct BigComplex;

// A point z = re + i*im with scalar parts; exact when both parts are exact.
struct ComplexPoint {
  Scalar re;
  Scalar im;

  ComplexPoint() = default;
  ComplexPoint(Scalar real) : re(std::move(real)) {}
  ComplexPoint(Scalar real, Scalar imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_exact() const { return re.is_exact() && im.is_exact(); }
  bool is_real() const { return im.is_zero(); }
  // re^2 + im^2, exact when the point is exact.
  Scalar norm_squared() const { return re * re + im * im; }
  BigFloat modulus(Precision bits) const;
  BigComplex to_bigcomplex(Precision bits) const;

  friend ComplexPoint operator+(const ComplexPoint& l, const ComplexPoint& r) { return {l.re + r.re, l.im + r.im}; }
  friend ComplexPoint operator-(const ComplexPoint& l, const ComplexPoint& r) { return {l.re - r.re, l.im - r.im}; }
  friend ComplexPoint operator*(const ComplexPoint& l, const ComplexPoint& r) {
    return {l.re * r.re - l.im * r.im, l.re * r.im + l.im * r.re};
  }
  friend bool operator==(const ComplexPoint& l, const ComplexPoint& r) { return l.re == r.re && l.im == r.im; }
};

struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() = default;
  explicit BigComplex(Precision bits) : re(bits), im(bits) {}
  BigComplex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

  Precision precision() const { return std::max(re.precision(), im.precision()); }
  BigFloat abs() const { return hypot(re, im); }
  // e^{i theta} scaled by r.
  static BigComplex polar(const BigFloat& r, const BigFloat& theta) { return {r * cos(theta), r * sin(theta)}; }

  BigComplex operator-() const { return {-re, -im}; }
  friend BigComplex operator+(const BigComplex& l, const BigComplex& r) { return {l.re + r.re, l.im + r.im}; }
  friend BigComplex operator-(const BigComplex& l, const BigComplex& r) { return {l.re - r.re, l.im - r.im}; }
  friend BigComplex operator*(const BigComplex& l, const BigComplex& r) {
    return {l.re * r.re - l.im * r.im, l.re * r.im + l.im * r.re};
  }
  friend BigComplex operator*(const BigComplex& l, const BigFloat& r) { return {l.re * r, l.im * r}; }
  friend BigComplex operator/(const BigComplex& l, const BigComplex& r);
  BigComplex& operator+=(const BigComplex& r) { return *this = *this + r; }
  BigComplex& operator*=(const BigComplex& r) { return *this = *this * r; }

  std::string to_string(int digits = 0) const;
};

inline BigFloat ComplexPoint::modulus(Precision bits) const { return hypot(re.to_bigfloat(bits), im.to_bigfloat(bits)); }

inline BigComplex ComplexPoint::to_bigcomplex(Precision bits) const {
  return {re.to_bigfloat(bits), im.to_bigfloat(bits)};
}

inline BigComplex operator/(const BigComplex& l, const BigComplex& r) {
  BigFloat den = r.re * r.re + r.im * r.im;
  return {(l.re * r.re + l.im * r.im) / den, (l.im * r.re - l.re * r.im) / den};
}

inline std::string BigComplex::to_string(int digits) const {
  return re.to_string(digits) + (im.sign() < 0 ? " - " : " + ") + padehyp::abs(im).to_string(digits) + "i";
}

}  // namespace padehyp
