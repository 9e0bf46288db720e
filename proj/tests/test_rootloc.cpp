#include <doctest.h>

#include <algorithm>

#include "padehyp/errors.hpp"
#include "padehyp/hypergeom.hpp"
#include "padehyp/rootloc.hpp"
#include "padehyp/sampling.hpp"

using namespace padehyp;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }
Scalar s(long num, long den = 1) { return Scalar(q(num, den)); }

bool near(const BigFloat& x, const char* expected, long exp10) {
  BigFloat e = BigFloat::parse(expected, 256);
  return abs(x - e) < pow(BigFloat(10L, 256), exp10);
}

}  // namespace

TEST_CASE("real_roots on trivial polynomials") {
  // 1 - (a/c) z with a = 2, c = 6
  auto lin = real_roots(Polynomial{s(1), s(-1, 3)});
  REQUIRE(lin.real_count == 1);
  CHECK(lin.all_simple);
  CHECK(lin.refined_roots[0].to_rational() == q(3));

  auto circle = real_roots(Polynomial{s(1), s(0), s(1)});
  CHECK(circle.real_count == 0);
  CHECK(circle.intervals.empty());
  CHECK(circle.all_simple);

  auto constant = real_roots(Polynomial{s(5)});
  CHECK(constant.real_count == 0);
  CHECK_THROWS_AS(real_roots(Polynomial{}), PreconditionError);
  CHECK_THROWS_AS(real_roots(Polynomial{Scalar(BigFloat(1.0, 64)), s(1)}), PreconditionError);
}

TEST_CASE("real_roots on Q_34 for a = 2, c = 6") {
  Polynomial q34{s(1), s(-5, 3), s(10, 11), s(-2, 11), s(1, 99)};
  auto r = real_roots(q34);
  REQUIRE(r.real_count == 4);
  CHECK(r.all_simple);
  for (const auto& iv : r.intervals) CHECK(iv.lo >= 1);
  SturmSequence st(q34);
  CHECK(st.count(q(1), cauchy_bound(q34)) == 4);
  CHECK(st.count_real() == 4);
  CHECK(near(r.refined_roots[0], "1.293423295651030340467666479360993611661289", -35));
  CHECK(near(r.refined_roots[1], "1.903139325198436809713539213191742555115165", -35));
  CHECK(near(r.refined_roots[2], "3.585029170637757440514678431990862068620921", -35));
  CHECK(near(r.refined_roots[3], "11.21840820851277540930411587545640176460258", -35));
}

TEST_CASE("multiplicities and square-free factorization") {
  // (z - 1)^2 (z + 2)^3 (z^2 + 1)
  Polynomial p = Polynomial{s(-1), s(1)} * Polynomial{s(-1), s(1)};
  for (int i = 0; i < 3; ++i) p = p * Polynomial{s(2), s(1)};
  p = p * Polynomial{s(1), s(0), s(1)};
  auto r = real_roots(p);
  CHECK_FALSE(r.all_simple);
  CHECK(r.real_count == 5);
  REQUIRE(r.intervals.size() == 2);
  CHECK(r.multiplicities[0] == 3);
  CHECK(r.multiplicities[1] == 2);
  CHECK(r.refined_roots[0].to_rational() == q(-2));
  CHECK(r.refined_roots[1].to_rational() == q(1));
  auto f = squarefree_factors(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == Polynomial{s(1), s(0), s(1)});
  CHECK(f[1] == Polynomial{s(-1), s(1)});
  CHECK(f[2] == Polynomial{s(2), s(1)});
}

TEST_CASE("constructed roots are recovered inside their intervals") {
  Rng rng(20261015);
  for (int trial = 0; trial < 60; ++trial) {
    int k = static_cast<int>(rng.uniform_int(1, 8));
    std::vector<Rational> roots;
    while (static_cast<int>(roots.size()) < k) {
      Rational r = rng.open_rational(q(-20), q(20), 12);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    std::vector<Scalar> sr(roots.begin(), roots.end());
    auto rep = real_roots(Polynomial::from_roots(sr));
    REQUIRE(rep.real_count == k);
    CHECK(rep.all_simple);
    std::sort(roots.begin(), roots.end());
    for (int i = 0; i < k; ++i) {
      const auto& iv = rep.intervals[i];
      bool contains = (iv.lo == iv.hi) ? iv.lo == roots[i] : (iv.lo < roots[i] && roots[i] <= iv.hi);
      CHECK(contains);
      CHECK(abs(rep.refined_roots[i] - BigFloat(roots[i], 256)) < ldexp(BigFloat(1L, 256), -120));
    }
    for (std::size_t i = 1; i < rep.intervals.size(); ++i) CHECK(rep.intervals[i - 1].hi <= rep.intervals[i].lo);
  }
}

TEST_CASE("classify_zero_regime cases") {
  CHECK(classify_zero_regime(4, s(-5), s(-12)).case_id == ZeroCase::ZerosIn1Inf);
  CHECK(classify_zero_regime(2, s(9, 2), s(3, 2)).case_id == ZeroCase::ZerosIn01);
  CHECK(classify_zero_regime(2, s(-7, 2), s(1, 2)).case_id == ZeroCase::ZerosInNegInf0);
  CHECK(classify_zero_regime(2, s(-7, 2), s(1, 2)).hypothesis_checked);
  // boundary b = d + n - 1 is not covered
  CHECK(classify_zero_regime(2, s(5, 2), s(3, 2)).case_id == ZeroCase::Unclassified);
  CHECK(classify_zero_regime(2, s(1), s(1)).case_id == ZeroCase::Unclassified);
  CHECK(predicted_interval(ZeroCase::ZerosIn1Inf) == "(1,inf)");
  CHECK(case_label(ZeroCase::ZerosInNegInf0) == "iii");
}

TEST_CASE("classify_pole_regime cases") {
  CHECK(classify_pole_regime(HyParams(2, 6), PadeOrder(3, 4)).case_id == ZeroCase::ZerosIn1Inf);
  CHECK(classify_pole_regime(HyParams(s(-11, 2), s(-7, 2)), PadeOrder(1, 2)).case_id == ZeroCase::ZerosIn01);
  CHECK(classify_pole_regime(HyParams(s(1, 2), s(-9, 2)), PadeOrder(2, 2)).case_id ==
        ZeroCase::ZerosInNegInf0);
}

TEST_CASE("verify_regime examples") {
  auto ev = verify_regime(4, s(-5), s(-12));
  CHECK(ev.verified);
  CHECK(ev.count_in_interval == 4);
  CHECK(ev.report.real_count == 4);

  auto i = verify_regime(3, s(11, 2), s(1, 2));
  CHECK(i.verified);
  for (const auto& iv : i.report.intervals) CHECK((iv.lo >= 0 && iv.hi <= 1));

  // Linear case (ii): root at d/b.
  auto lin = verify_regime(1, s(-3, 2), s(-7, 2));
  REQUIRE(lin.report.real_count == 1);
  CHECK(abs(lin.report.refined_roots[0] - BigFloat(q(7, 3), 256)) < ldexp(BigFloat(1L, 256), -250));

  CHECK(verify_pole_regime(HyParams(s(-11, 2), s(-7, 2)), PadeOrder(1, 2)).verified);
  CHECK(verify_pole_regime(HyParams(s(1, 2), s(-9, 2)), PadeOrder(2, 2)).verified);
  CHECK_THROWS_AS(verify_regime(2, s(1), s(1)), UnclassifiedRegime);
}

TEST_CASE("random tuples from each pole case verify") {
  Rng rng(7);
  int done[3] = {0, 0, 0};
  for (int trial = 0; trial < 90; ++trial) {
    int which = trial % 3;
    int n = static_cast<int>(rng.uniform_int(1, 8));
    int m = static_cast<int>(rng.uniform_int(std::max(0, n - 1), 10));
    Rational a, c;
    if (which == 0) {  // (0,1): a < c < 1-m-n
      c = rng.open_rational(q(1 - m - n - 5), q(1 - m - n), 7, true);
      a = rng.open_rational(c - 5, c, 7);
    } else if (which == 1) {  // (1,inf): c > a > n-m-1
      a = rng.open_rational(q(n - m - 1), q(n - m + 4), 7);
      c = rng.open_rational(a, a + 5, 7, true);
    } else {  // (-inf,0): a > n-m-1, c < 1-m-n
      a = rng.open_rational(q(n - m - 1), q(n - m + 4), 7);
      c = rng.open_rational(q(1 - m - n - 5), q(1 - m - n), 7, true);
    }
    HyParams hp{Scalar(a), Scalar(c)};
    PadeOrder ord{m, n};
    auto regime = classify_pole_regime(hp, ord);
    REQUIRE(regime.case_id != ZeroCase::Unclassified);
    auto ev = verify_pole_regime(hp, ord);
    CHECK(ev.verified);
    Polynomial qmn = terminating_2f1(n, -Scalar(a) - Scalar(m), -Scalar(c) - Scalar(m + n - 1));
    CHECK(gcd(qmn, qmn.derivative()).degree() == 0);
    CHECK(SturmSequence(qmn).count_real() == n);
    ++done[which];
  }
  CHECK(done[0] == 30);
}
