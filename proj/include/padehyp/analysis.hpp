#pragma once

#include <optional>
#include <vector>

#include "padehyp/bigfloat.hpp"
#include "padehyp/complex.hpp"
#include "padehyp/pade.hpp"
#include "padehyp/polynomial.hpp"
#include "padehyp/rootloc.hpp"

namespace padehyp {

// Weighted integral of F(-n,b;d;z) g(z) over the interval of `which`, with
// weight |z|^(d-1) |1-z|^(b-d-n). Each moment is an exact ratio times one
// Beta value, so the result is zero up to rounding whenever deg g < n.
// Throws IntegrabilityViolation when some moment diverges and
// PreconditionError for Unclassified.
BigFloat orthogonality_residual(int n, const Scalar& b, const Scalar& d, const Polynomial& g, ZeroCase which,
                                Precision bits = kDefaultPrecisionBits);

// |z^(d-1) (1-z)^(b-d-n) F(-n,b;d;z) - D^n[z^(d-1+n) (1-z)^(b-d)] / (d)_n| at
// 0 < z < 1, the derivative expanded by Leibniz' rule.
BigFloat rodrigues_residual(int n, const Scalar& b, const Scalar& d, const Scalar& z,
                            Precision bits = kDefaultPrecisionBits);

struct RemainderBound {
  BigFloat bound;
  // Bound on |2F1(a+m+1, n+1; c+m+n+1; z)|.
  BigFloat gamma_factor;
  bool below_one = false;
  // c - a < 1 only: the factor with |Gamma(c-a-1)| in place of Gamma(a-c+1).
  std::optional<BigFloat> alternative_gamma_factor;
};

// |S_mn| |z|^(m+n+1) times a bound on the hypergeometric factor:
//   c-a > 1: (c+m)_(n+1) / (c-a-1)_(n+1)
//   c-a < 1: |1-z|^(c-a-1) Gamma(c+m+n+1) Gamma(a-c+1) / (n! Gamma(a+m+1))
// Requires c > a > 0 and |z| < 1; c - a = 1 throws BoundaryParameter.
RemainderBound remainder_bound_detail(const HyParams& params, const PadeOrder& order, const ComplexPoint& z,
                                      Precision bits = kDefaultPrecisionBits);
BigFloat remainder_bound(const HyParams& params, const PadeOrder& order, const ComplexPoint& z,
                         Precision bits = kDefaultPrecisionBits);

struct RaySpec {
  Rational rho;
  std::vector<int> m_values;

  // m = m_min..m_max. Throws InvalidParameter unless 0 < rho <= 1.
  static RaySpec up_to(const Rational& rho, int m_max, int m_min = 1);
  // clamp(round(rho m), 1, m+1), halves rounded up.
  int n_for(int m) const;
  std::vector<PadeOrder> orders() const;
};

struct CompactRegion {
  Rational radius;
  int n_radii = 12;
  int n_angles = 24;

  // Throws InvalidParameter unless 0 < radius < 1.
  explicit CompactRegion(Rational r, int radii = 12, int angles = 24);
  // The origin plus (i/n_radii) r e^(2 pi i j / n_angles).
  std::vector<ComplexPoint> points(Precision bits) const;
};

struct ConvergenceRow {
  int m = 0;
  int n = 0;
  BigFloat sup_error;
  // Sup of remainder_bound over the grid; absent when c - a = 1.
  std::optional<BigFloat> remainder_bound;
  BigFloat min_abs_q;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
};

// Grid sup of |f - P/Q| along the ray, f evaluated to within eval_error.
// Requires c > a > 0. Throws PoleOnGrid if Q vanishes on the grid.
ConvergenceTable ray_experiment(const HyParams& params, const RaySpec& ray, const CompactRegion& region,
                                const BigFloat& eval_error);

}  // namespace padehyp
