#pragma once

#include <span>
#include <vector>

#include "padehyp/bigfloat.hpp"
#include "padehyp/complex.hpp"
#include "padehyp/polynomial.hpp"
#include "padehyp/scalar.hpp"

namespace padehyp {

// Parameters a, c of f(z) = 2F1(a, 1; c; z).
class HyParams {
 public:
  // Throws InvalidParameter when c is a nonpositive integer.
  HyParams(Scalar a, Scalar c);

  const Scalar& a() const { return a_; }
  const Scalar& c() const { return c_; }
  // c > a > 0: the Padé table is normal and the poles sit on (1, inf).
  bool normal_regime() const { return normal_; }
  bool is_exact() const { return a_.is_exact() && c_.is_exact(); }

 private:
  Scalar a_;
  Scalar c_;
  bool normal_;
};

// Table index [m/n] with m >= n - 1; anything else is rejected on construction.
class PadeOrder {
 public:
  PadeOrder(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  // Index of the first Taylor coefficient the approximant is not forced to match.
  int contact() const { return m_ + n_ + 1; }

 private:
  int m_;
  int n_;
};

// Numerator/denominator of an [m/n] approximant, normalized so Q(0) = 1.
class PadePair {
 public:
  PadePair(Polynomial p, Polynomial q, PadeOrder order);

  const Polynomial& P() const { return p_; }
  const Polynomial& Q() const { return q_; }
  const PadeOrder& order() const { return order_; }

  BigComplex evaluate(const BigComplex& z) const;

  friend bool operator==(const PadePair& l, const PadePair& r) {
    return l.order_.m() == r.order_.m() && l.order_.n() == r.order_.n() && l.p_ == r.p_ && l.q_ == r.q_;
  }

 private:
  Polynomial p_;
  Polynomial q_;
  PadeOrder order_;
};

struct ContactCertificate {
  // Index of the first nonzero coefficient of Q f - P.
  int verified_order = -1;
  // That coefficient.
  Scalar leading_coeff;
  Scalar s_constant;
  // verified_order == m+n+1 and leading_coeff == s_constant.
  bool matched = false;
  // The following extra-1 coefficients equal S times the Taylor coefficients
  // of 2F1(a+m+1, n+1; c+m+n+1; z).
  bool tail_matched = false;
  int tail_checked = 0;
  // Coefficients 0..m+n+extra of Q f - P.
  std::vector<Scalar> remainder_coeffs;
};

// t_k = (a)_k / (c)_k for k < count.
std::vector<Scalar> taylor_coeffs(const HyParams& params, int count);

// Q_mn(z) = 2F1(-n, -a-m; -c-m-n+1; z).
Polynomial denominator(const HyParams& params, const PadeOrder& order);

// P_mn: the first m+1 terms of f(z) Q_mn(z), i.e.
// p_r = sum_{l<=r} (a)_{r-l} (-n)_l (-a-m)_l / ((-c-m-n+1)_l (c)_{r-l} l!).
Polynomial numerator(const HyParams& params, const PadeOrder& order);

PadePair closed_form_pair(const HyParams& params, const PadeOrder& order);

// S_mn = n! (a)_{m+1} (c-a)_n / ((c)_{m+n} (c+m)_{n+1}); leading coefficient
// of the remainder. Throws ZeroDenominator naming the vanishing factor.
Scalar s_constant(const HyParams& params, const PadeOrder& order);

// Independent route: solves the n x n Toeplitz system that kills coefficients
// m+1..m+n of f Q - P (fraction-free Bareiss elimination for exact input) and
// reads P off f Q. Throws SingularSystem when the system has no unique solution.
PadePair pade_oracle(std::span<const Scalar> taylor, const PadeOrder& order);

// Expands Q f - P exactly through power m+n+extra and certifies the order of
// contact against S_mn and the shifted remainder series. Throws ContactFailure
// with the first nonzero index below m+n+1.
ContactCertificate contact_check(const HyParams& params, const PadeOrder& order, int extra = 3);
// Same certificate for an arbitrary candidate pair (e.g. the oracle's).
ContactCertificate contact_check(const HyParams& params, const PadePair& pair, int extra = 3);

// R_mn(z) = S_mn z^{m+n+1} 2F1(a+m+1, n+1; c+m+n+1; z), accurate to
// target_abs_error. Throws DivergentAtPoint for |z| >= 1.
BigComplex remainder_eval(const HyParams& params, const PadeOrder& order, const BigComplex& z,
                          const BigFloat& target_abs_error);
BigComplex remainder_eval(const HyParams& params, const PadeOrder& order, const ComplexPoint& z,
                          const BigFloat& target_abs_error);

// Q(z) f(z) - P(z) with f summed to target_abs_error; the left-hand route of
// the remainder identity.
BigComplex direct_remainder(const HyParams& params, const PadePair& pair, const BigComplex& z,
                            const BigFloat& target_abs_error);

}  // namespace padehyp
