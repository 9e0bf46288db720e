#pragma once

#include <string>
#include <vector>

#include "padehyp/bigfloat.hpp"
#include "padehyp/pade.hpp"
#include "padehyp/polynomial.hpp"
#include "padehyp/rational.hpp"

namespace padehyp {

// Sturm sequence of a square-free polynomial with exact coefficients.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);

  int sign_changes_at(const Rational& x) const;
  int sign_changes_at_neg_inf() const;
  int sign_changes_at_pos_inf() const;
  // Number of distinct roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return sign_changes_at(lo) - sign_changes_at(hi); }
  int count_real() const { return sign_changes_at_neg_inf() - sign_changes_at_pos_inf(); }

 private:
  std::vector<Polynomial> chain_;
};

// Strict upper bound on |root|: 1 + max_k |a_k / a_deg|.
Rational cauchy_bound(const Polynomial& p);

// Yun factorization: p = lead * prod_i factors[i]^(i+1), each factor monic and
// square-free (factors may be constant 1).
std::vector<Polynomial> squarefree_factors(const Polynomial& p);

// One real root in (lo, hi]; lo == hi marks a root found exactly.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
};

struct RootReport {
  int degree = 0;
  // Pairwise disjoint; none straddles 0 or 1.
  std::vector<IsolatingInterval> intervals;
  // One per interval, refined to width 2^(-precision/2) and polished by Newton.
  std::vector<BigFloat> refined_roots;
  std::vector<int> multiplicities;
  // Real roots counted with multiplicity.
  int real_count = 0;
  // gcd(p, p') is constant.
  bool all_simple = false;
};

// Isolates every real root of a nonzero exact polynomial.
RootReport real_roots(const Polynomial& p, Precision precision_bits = kDefaultPrecisionBits);

enum class ZeroCase { ZerosIn01, ZerosIn1Inf, ZerosInNegInf0, Unclassified };

struct RegimeClass {
  ZeroCase case_id = ZeroCase::Unclassified;
  // The inequalities were decided on exact rational parameters.
  bool hypothesis_checked = false;
};

// "(0,1)", "(1,inf)", "(-inf,0)" or "none".
std::string predicted_interval(ZeroCase c);
// "i", "ii", "iii" or "unclassified".
std::string case_label(ZeroCase c);

// Zero location of F(-n, b; d; z):
//   (i)   d > 0 and b > d+n-1            -> (0,1)
//   (ii)  b < 1-n and d < b+1-n          -> (1,inf)
//   (iii) b < 1-n and d > 0              -> (-inf,0)
// Boundary cases are Unclassified. Requires (d)_n != 0.
RegimeClass classify_zero_regime(int n, const Scalar& b, const Scalar& d);

// Pole location of the [m/n] approximant: zeros of Q_mn, i.e. the zero
// regime with b = -a-m, d = -c-m-n+1.
RegimeClass classify_pole_regime(const HyParams& params, const PadeOrder& order);

struct RegimeEvidence {
  RegimeClass regime;
  RootReport report;
  // Exact Sturm count of distinct roots inside the predicted open interval.
  int count_in_interval = 0;
  bool verified = false;
};

// Certifies that F(-n, b; d; z) has exactly n real simple zeros, all strictly
// inside the interval its regime predicts. Throws UnclassifiedRegime when no
// case applies and RegimeViolation (with the offending interval) otherwise.
RegimeEvidence verify_regime(int n, const Scalar& b, const Scalar& d, Precision precision_bits = kDefaultPrecisionBits);

RegimeEvidence verify_pole_regime(const HyParams& params, const PadeOrder& order,
                                  Precision precision_bits = kDefaultPrecisionBits);

}  // namespace padehyp
