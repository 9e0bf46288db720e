#include <doctest.h>

#include "padehyp/errors.hpp"
#include "padehyp/hypergeom.hpp"
#include "padehyp/sampling.hpp"
#include "padehyp/special.hpp"

using namespace padehyp;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }
Scalar s(long num, long den = 1) { return Scalar(q(num, den)); }

BigFloat tol(long exp10, Precision bits = 256) {
  return pow(BigFloat(10L, bits), exp10);
}

}  // namespace

TEST_CASE("terminating_2f1 examples") {
  CHECK(terminating_2f1(0, s(7, 3), s(5, 2)) == Polynomial{Scalar(1)});
  CHECK(terminating_2f1(1, s(7, 3), s(5, 2)) == Polynomial{Scalar(1), -s(14, 15)});
  // Denominator of the [3/4] approximant for a=2, c=6.
  Polynomial q34 = terminating_2f1(4, s(-5), s(-12));
  CHECK(q34 == Polynomial{Scalar(1), s(-5, 3), s(10, 11), s(-2, 11), s(1, 99)});
  CHECK(q34.degree() == 4);
}

TEST_CASE("terminating_2f1 degree drops exactly when (b)_n vanishes") {
  // b = -1: (b)_2 = 0, so only 1 - 3z survives even though d + 1 = 0 later.
  CHECK(terminating_2f1(3, s(-1), s(-1)) == Polynomial{Scalar(1), Scalar(-3)});
  CHECK(terminating_2f1(3, s(-2), s(1, 2)).degree() == 2);
}

TEST_CASE("terminating_2f1 rejects a pole in (d)_k") {
  CHECK_THROWS_AS(terminating_2f1(3, s(1), s(-1)), PoleInDenominator);
  CHECK_THROWS_AS(terminating_2f1(2, s(1), s(0)), PoleInDenominator);
  CHECK_NOTHROW(terminating_2f1(2, s(1), s(-2)));
  CHECK_THROWS_AS(terminating_2f1(-1, s(1), s(1)), PreconditionError);
}

TEST_CASE("terminating_2f1 agrees with the independently summed series") {
  Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    int n = static_cast<int>(rng.uniform_int(0, 9));
    Scalar b(rng.open_rational(q(-12), q(12), 8));
    Scalar d(rng.open_rational(q(-12), q(12), 8, true));
    Scalar z(rng.open_rational(q(-3), q(3), 11));
    Scalar direct(0);
    for (int k = 0; k <= n; ++k) {
      direct += pochhammer(Scalar(-n), k) * pochhammer(b, k) / (pochhammer(d, k) * Scalar(factorial(k))) *
                pochhammer(z, 0) * [&] {
                  Scalar p(1);
                  for (int j = 0; j < k; ++j) p *= z;
                  return p;
                }();
    }
    CHECK(terminating_2f1(n, b, d).evaluate(z) == direct);
  }
}

TEST_CASE("poly_eval") {
  Polynomial p{Scalar(1), s(-5, 3)};
  CHECK(poly_eval(p, ComplexPoint(s(3, 5))) == ComplexPoint(Scalar(0)));
  Polynomial q34{Scalar(1), s(-5, 3), s(10, 11), s(-2, 11), s(1, 99)};
  CHECK(poly_eval(q34, ComplexPoint(Scalar(0))) == ComplexPoint(Scalar(1)));
  // 1 - 5/3 + 10/11 - 2/11 + 1/99 = 7/99: nonzero, so z = 1 is not a pole.
  ComplexPoint at_one = poly_eval(q34, ComplexPoint(Scalar(1)));
  CHECK(at_one.is_exact());
  CHECK(at_one == ComplexPoint(s(7, 99)));
  // (1 + i)^2 = 2i.
  Polynomial sq{Scalar(0), Scalar(0), Scalar(1)};
  CHECK(poly_eval(sq, ComplexPoint(Scalar(1), Scalar(1))) == ComplexPoint(Scalar(0), Scalar(2)));
}

TEST_CASE("eval_2f1 against closed forms") {
  const Precision bits = 256;
  BigFloat target = tol(-60);

  SUBCASE("2F1(1,1;2;z) = -ln(1-z)/z") {
    BigComplex v = eval_2f1(SeriesParams(1, 1, 2), ComplexPoint(s(1, 2)), target);
    BigFloat expected = log(BigFloat(2L, bits)) * 2L;
    CHECK(abs(v.re - expected) <= target);
    CHECK(v.im.is_zero());
    CHECK(v.re.to_string(11) == "1.3862943611e+00");

    BigComplex near_edge = eval_2f1(SeriesParams(1, 1, 2), ComplexPoint(s(9, 10)), target);
    BigFloat expected_edge = -log(BigFloat(q(1, 10), bits)) / BigFloat(q(9, 10), bits);
    CHECK(abs(near_edge.re - expected_edge) <= target);
  }

  SUBCASE("z = 0 gives 1") {
    BigComplex v = eval_2f1(SeriesParams(s(7, 3), s(-11, 4), s(5, 9)), ComplexPoint(Scalar(0)), target);
    CHECK(v.re == BigFloat(1L, bits));
    CHECK(v.im.is_zero());
  }

  SUBCASE("geometric series 2F1(1,1;1;z) = 1/(1-z), real and complex") {
    BigComplex v = eval_2f1(SeriesParams(1, 1, 1), ComplexPoint(s(1, 4)), target);
    CHECK(abs(v.re - BigFloat(q(4, 3), bits)) <= target);
    ComplexPoint z(s(3, 10), s(-1, 2));
    BigComplex w = eval_2f1(SeriesParams(1, 1, 1), z, target);
    BigComplex one(BigFloat(1L, bits), BigFloat(bits));
    BigComplex expected = one / (one - z.to_bigcomplex(bits));
    CHECK(abs(w.re - expected.re) <= target);
    CHECK(abs(w.im - expected.im) <= target);
  }

  SUBCASE("b = 0 gives exactly 1") {
    for (long k = -4; k <= 4; ++k) {
      BigComplex v = eval_2f1(SeriesParams(s(3, 2), Scalar(0), s(7, 3)), ComplexPoint(s(k, 5), s(1, 7)), target);
      CHECK(v.re == BigFloat(1L, bits));
      CHECK(v.im.is_zero());
    }
  }

  SUBCASE("terminating numerator parameter matches the polynomial") {
    SeriesParams params(Scalar(-4), s(5, 2), s(7, 3));
    Polynomial poly = terminating_2f1(4, s(5, 2), s(7, 3));
    ComplexPoint z(s(-2, 3), s(1, 5));
    SeriesEvaluation ev = eval_2f1_detailed(params, z.to_bigcomplex(bits), target);
    CHECK(ev.terminated);
    BigComplex exact = poly.evaluate(z).to_bigcomplex(bits);
    CHECK(abs(ev.value.re - exact.re) <= target);
    CHECK(abs(ev.value.im - exact.im) <= target);
  }
}

TEST_CASE("eval_2f1 is consistent across precisions") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    SeriesParams params(Scalar(rng.open_rational(q(-5), q(8), 7)), Scalar(rng.open_rational(q(-5), q(8), 7)),
                        Scalar(rng.open_rational(q(1, 10), q(9), 7)));
    ComplexPoint z(Scalar(rng.open_rational(q(-3, 5), q(3, 5), 20)), Scalar(rng.open_rational(q(-3, 5), q(3, 5), 20)));
    BigFloat coarse_target = tol(-30, 128);
    BigComplex coarse = eval_2f1(params, z, coarse_target);
    BigComplex fine = eval_2f1(params, z, tol(-60, 256));
    CHECK(coarse.precision() == 128);
    CHECK(fine.precision() == 256);
    CHECK(abs(coarse.re - fine.re) <= coarse_target);
    CHECK(abs(coarse.im - fine.im) <= coarse_target);
    // Real points give real values.
    BigComplex real = eval_2f1(params, ComplexPoint(z.re), coarse_target);
    CHECK(real.im.is_zero());
  }
}

TEST_CASE("eval_2f1 errors") {
  BigFloat target = tol(-30);
  CHECK_THROWS_AS(eval_2f1(SeriesParams(1, 1, 2), ComplexPoint(Scalar(1)), target), DivergentAtPoint);
  CHECK_THROWS_AS(eval_2f1(SeriesParams(1, 1, 2), ComplexPoint(s(3, 5), s(4, 5)), target), DivergentAtPoint);
  CHECK_THROWS_AS(eval_2f1(SeriesParams(1, 1, 2), ComplexPoint(s(-6, 5)), target), DivergentAtPoint);
  SeriesOptions short_run;
  short_run.max_terms = 12;
  CHECK_THROWS_AS(eval_2f1(SeriesParams(1, 1, 2), ComplexPoint(s(99, 100)), target, short_run), NoRatioBound);
  CHECK_THROWS_AS(SeriesParams(1, 1, -3), InvalidParameter);
  CHECK_THROWS_AS(SeriesParams(1, 1, 0), InvalidParameter);
  CHECK_THROWS_AS(eval_2f1(SeriesParams(1, 1, 2), ComplexPoint(s(1, 2)), BigFloat(0L, 64)), PreconditionError);
}
