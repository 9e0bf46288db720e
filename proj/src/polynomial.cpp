#include "padehyp/polynomial.hpp"

#include <algorithm>

#include "padehyp/errors.hpp"

namespace padehyp {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(Scalar c, int power) {
  if (power < 0) throw PreconditionError("monomial power must be nonnegative");
  std::vector<Scalar> coeffs(static_cast<size_t>(power) + 1);
  coeffs.back() = std::move(c);
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_roots(std::span<const Scalar> roots) {
  Polynomial p = constant(1);
  for (const auto& r : roots) p = p * Polynomial({-r, Scalar(1)});
  return p;
}

bool Polynomial::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_exact(); });
}

Scalar Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar(0);
  return coeffs_[static_cast<size_t>(k)];
}

const Scalar& Polynomial::leading() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d;
  d.reserve(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d.push_back(Scalar(static_cast<long>(k)) * coeffs_[k]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::truncated(int max_power) const {
  if (max_power < 0) return {};
  auto end = std::min(coeffs_.size(), static_cast<size_t>(max_power) + 1);
  return Polynomial(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Scalar inv = Scalar(1) / leading();
  return inv * *this;
}

std::vector<BigFloat> Polynomial::to_bigfloat(Precision bits) const {
  std::vector<BigFloat> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_bigfloat(bits));
  return out;
}

Scalar Polynomial::evaluate(const Scalar& z) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoint Polynomial::evaluate(const ComplexPoint& z) const {
  ComplexPoint acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + ComplexPoint(*it);
  return acc;
}

BigComplex Polynomial::evaluate(const BigComplex& z) const {
  auto coeffs = to_bigfloat(z.precision());
  return horner(coeffs, z);
}

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& l, const Polynomial& r) {
  std::vector<Scalar> out(std::max(l.coeffs_.size(), r.coeffs_.size()));
  for (size_t k = 0; k < out.size(); ++k) {
    if (k < l.coeffs_.size()) out[k] += l.coeffs_[k];
    if (k < r.coeffs_.size()) out[k] += r.coeffs_[k];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& l, const Polynomial& r) { return l + (-r); }

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
  if (l.is_zero() || r.is_zero()) return {};
  std::vector<Scalar> out(l.coeffs_.size() + r.coeffs_.size() - 1);
  for (size_t i = 0; i < l.coeffs_.size(); ++i) {
    for (size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  std::vector<Scalar> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(s * c);
  return Polynomial(std::move(out));
}

bool operator==(const Polynomial& l, const Polynomial& r) {
  if (l.coeffs_.size() != r.coeffs_.size()) return false;
  for (size_t k = 0; k < l.coeffs_.size(); ++k) {
    if (l.coeffs_[k] != r.coeffs_[k]) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k >= 1) out += " z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

DivMod divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Scalar> rem = dividend.coeffs();
  int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial(), dividend};
  std::vector<Scalar> quot(static_cast<size_t>(dividend.degree() - dd) + 1);
  const Scalar& lead = divisor.leading();
  for (int k = dividend.degree(); k >= dd; --k) {
    Scalar factor = rem[static_cast<size_t>(k)] / lead;
    quot[static_cast<size_t>(k - dd)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<size_t>(k - dd + j)] -= factor * divisor.coeffs()[static_cast<size_t>(j)];
    }
    // Exact arithmetic already gives zero here; force it for float coefficients.
    rem[static_cast<size_t>(k)] = Scalar(0);
  }
  rem.resize(static_cast<size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

BigComplex horner(std::span<const BigFloat> coeffs, const BigComplex& z) {
  BigComplex acc(z.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

}  // namespace padehyp
