#pragma once

#include "padehyp/bigfloat.hpp"
#include "padehyp/complex.hpp"
#include "padehyp/polynomial.hpp"
#include "padehyp/scalar.hpp"

namespace padehyp {

// Real parameters of 2F1(a, b; c; z). c may not be a nonpositive integer.
class SeriesParams {
 public:
  SeriesParams(Scalar a, Scalar b, Scalar c);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }

 private:
  Scalar a_;
  Scalar b_;
  Scalar c_;
};

// 2F1(-n, b; d; z) as a polynomial: coefficient of z^k is
// (-n)_k (b)_k / ((d)_k k!). Throws PoleInDenominator when some d + k = 0
// is reached while the running numerator is still nonzero.
Polynomial terminating_2f1(int n, const Scalar& b, const Scalar& d);

struct SeriesOptions {
  // Never stop before this many terms.
  int min_terms = 8;
  // NoRatioBound is raised past this index.
  int max_terms = 200000;
};

struct SeriesEvaluation {
  BigComplex value;
  // Index K of the last summed term.
  int last_index = 0;
  // Certified bound on |value - 2F1|: geometric tail plus rounding.
  BigFloat error_bound;
  bool terminated = false;
};

// Sums the series inside the unit disc. Stops at the first K >= min_terms
// where every later term ratio is provably at most q = (1+|z|)/2 and
// |t_K| q/(1-q) plus the rounding budget is below target_abs_error.
// The result carries target_abs_error's precision.
SeriesEvaluation eval_2f1_detailed(const SeriesParams& params, const BigComplex& z, const BigFloat& target_abs_error,
                                   const SeriesOptions& options = {});

BigComplex eval_2f1(const SeriesParams& params, const ComplexPoint& z, const BigFloat& target_abs_error,
                    const SeriesOptions& options = {});
BigComplex eval_2f1(const SeriesParams& params, const BigComplex& z, const BigFloat& target_abs_error,
                    const SeriesOptions& options = {});

// Horner; exact when p and z are exact.
inline ComplexPoint poly_eval(const Polynomial& p, const ComplexPoint& z) { return p.evaluate(z); }

}  // namespace padehyp
