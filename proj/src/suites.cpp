#include "padehyp/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "padehyp/analysis.hpp"
#include "padehyp/errors.hpp"

namespace padehyp {
namespace {

Rational q(long v) { return Rational(v); }

void record(SuiteResult& res, bool ok, const std::string& what) {
  if (ok) {
    ++res.passed;
  } else {
    ++res.failed;
    res.failures.push_back(what);
  }
}

// Runs one instance; library errors count as failures.
void check(SuiteResult& res, const std::string& what, const std::function<bool()>& body) {
  try {
    record(res, body(), what);
  } catch (const Error& e) {
    record(res, false, what + ": " + e.what());
  }
}

constexpr ZeroCase kCases[] = {ZeroCase::ZerosIn01, ZeroCase::ZerosIn1Inf, ZeroCase::ZerosInNegInf0};

BigFloat ten_to(long e, Precision bits) { return pow(BigFloat(10L, bits), e); }

}  // namespace

std::string describe(const PadeTuple& t) {
  std::ostringstream s;
  s << "a=" << t.params.a().to_string() << " c=" << t.params.c().to_string() << " m=" << t.order.m()
    << " n=" << t.order.n();
  return s.str();
}

std::string describe(const ZeroTuple& t) {
  std::ostringstream s;
  s << "case=" << case_label(t.which) << " n=" << t.n << " b=" << to_string(t.b) << " d=" << to_string(t.d);
  return s.str();
}

PadeTuple sample_normal_tuple(Rng& rng, int max_m) {
  Rational a = rng.open_rational(q(0), q(6), 9);
  Rational c = a + rng.open_rational(q(0), q(6), 9);
  int m = static_cast<int>(rng.uniform_int(0, max_m));
  int n = static_cast<int>(rng.uniform_int(0, m + 1));
  return {HyParams(Scalar(a), Scalar(c)), PadeOrder(m, n)};
}

PadeTuple sample_pole_tuple(Rng& rng, ZeroCase which) {
  int n = static_cast<int>(rng.uniform_int(1, 8));
  int m = static_cast<int>(rng.uniform_int(std::max(0, n - 1), 10));
  Rational a, c;
  switch (which) {
    case ZeroCase::ZerosIn01:
      c = rng.open_rational(q(1 - m - n - 5), q(1 - m - n), 7, true);
      a = rng.open_rational(c - 5, c, 7);
      break;
    case ZeroCase::ZerosIn1Inf:
      a = rng.open_rational(q(n - m - 1), q(n - m + 4), 7);
      c = rng.open_rational(a, a + 5, 7, true);
      break;
    case ZeroCase::ZerosInNegInf0:
      a = rng.open_rational(q(n - m - 1), q(n - m + 4), 7);
      c = rng.open_rational(q(1 - m - n - 5), q(1 - m - n), 7, true);
      break;
    case ZeroCase::Unclassified:
      throw InvalidParameter("sample_pole_tuple: no case to sample");
  }
  return {HyParams(Scalar(a), Scalar(c)), PadeOrder(m, n)};
}

ZeroTuple sample_zero_tuple(Rng& rng, ZeroCase which, int max_n) {
  ZeroTuple t;
  t.which = which;
  t.n = static_cast<int>(rng.uniform_int(1, max_n));
  const int n = t.n;
  switch (which) {
    case ZeroCase::ZerosIn01:
      t.d = rng.open_rational(q(0), q(5), 8);
      t.b = t.d + (n - 1) + rng.open_rational(q(0), q(5), 8);
      break;
    case ZeroCase::ZerosIn1Inf:
      t.b = rng.open_rational(q(1 - n - 5), q(1 - n), 8);
      t.d = rng.open_rational(t.b + 1 - n - 5, t.b + 1 - n, 8, true);
      break;
    case ZeroCase::ZerosInNegInf0:
      t.b = rng.open_rational(q(1 - n - 5), q(1 - n), 8);
      t.d = rng.open_rational(q(0), q(5), 8);
      break;
    case ZeroCase::Unclassified:
      throw InvalidParameter("sample_zero_tuple: no case to sample");
  }
  return t;
}

HyParams sample_bound_params(Rng& rng, bool above_one) {
  Rational a = rng.open_rational(q(0), q(5), 9);
  Rational delta = above_one ? rng.open_rational(q(1), q(6), 9) : rng.open_rational(q(0), q(1), 9);
  return HyParams(Scalar(a), Scalar(a + delta));
}

SuiteResult run_oracle_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "oracle";
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.oracle_tuples; ++i) {
    PadeTuple t = sample_normal_tuple(rng);
    check(res, describe(t), [&] {
      auto taylor = taylor_coeffs(t.params, t.order.contact());
      return pade_oracle(taylor, t.order) == closed_form_pair(t.params, t.order);
    });
  }
  return res;
}

SuiteResult run_contact_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "contact";
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.oracle_tuples; ++i) {
    PadeTuple t = sample_normal_tuple(rng);
    check(res, describe(t), [&] {
      ContactCertificate cert = contact_check(t.params, t.order, 3);
      return cert.matched && cert.tail_matched && cert.tail_checked == 2;
    });
  }
  return res;
}

SuiteResult run_regime_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "regimes";
  Rng rng(cfg.seed);
  for (ZeroCase which : kCases) {
    for (int i = 0; i < cfg.regime_tuples; ++i) {
      PadeTuple t = sample_pole_tuple(rng, which);
      check(res, "case=" + case_label(which) + " " + describe(t), [&] {
        if (classify_pole_regime(t.params, t.order).case_id != which) return false;
        RegimeEvidence ev = verify_pole_regime(t.params, t.order, cfg.bits);
        return ev.verified && ev.report.real_count == t.order.n() && ev.report.all_simple &&
               ev.count_in_interval == t.order.n();
      });
    }
  }
  return res;
}

SuiteResult run_orthogonality_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "orthogonality";
  Rng rng(cfg.seed);
  const BigFloat limit = ten_to(-30, cfg.bits);
  for (ZeroCase which : kCases) {
    for (int i = 0; i < cfg.orthogonality_tuples; ++i) {
      ZeroTuple t = sample_zero_tuple(rng, which);
      const Scalar b(BigFloat(t.b, cfg.bits)), d(BigFloat(t.d, cfg.bits));
      for (int l = 0; l < t.n; ++l) {
        check(res, describe(t) + " g=z^" + std::to_string(l), [&] {
          return orthogonality_residual(t.n, b, d, Polynomial::monomial(Scalar(1), l), which, cfg.bits) <= limit;
        });
      }
    }
  }
  // Negative control: a degree-n multiplier is not orthogonal.
  check(res, "negative control n=3 b=11/2 d=1/2 g=z^3", [&] {
    return orthogonality_residual(3, Scalar(Rational(11, 2)), Scalar(Rational(1, 2)),
                                  Polynomial::monomial(Scalar(1), 3), ZeroCase::ZerosIn01,
                                  cfg.bits) > ten_to(-10, cfg.bits);
  });
  return res;
}

SuiteResult run_rodrigues_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "rodrigues";
  Rng rng(cfg.seed);
  const BigFloat limit = ten_to(-30, cfg.bits);
  for (ZeroCase which : kCases) {
    for (int i = 0; i < cfg.rodrigues_tuples; ++i) {
      ZeroTuple t = sample_zero_tuple(rng, which);
      for (int k = 0; k < cfg.rodrigues_points; ++k) {
        Rational z = rng.open_rational(q(0), q(1), 64);
        check(res, describe(t) + " z=" + to_string(z), [&] {
          return rodrigues_residual(t.n, Scalar(t.b), Scalar(t.d), Scalar(z), cfg.bits) <= limit;
        });
      }
    }
  }
  return res;
}

SuiteResult run_bound_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "bounds";
  Rng rng(cfg.seed);
  const CompactRegion region(Rational(9, 10), 6, 12);
  const std::vector<ComplexPoint> grid = region.points(cfg.bits);
  const BigFloat target = ten_to(-40, cfg.bits);
  for (bool above_one : {true, false}) {
    for (int i = 0; i < cfg.bound_tuples; ++i) {
      HyParams params = sample_bound_params(rng, above_one);
      int m = static_cast<int>(rng.uniform_int(0, 8));
      int n = static_cast<int>(rng.uniform_int(0, m + 1));
      PadeTuple t{params, PadeOrder(m, n)};
      std::string where;
      check(res, describe(t), [&] {
        for (const auto& z : grid) {
          BigFloat r = remainder_eval(t.params, t.order, z, target).abs();
          if (r > remainder_bound(t.params, t.order, z, cfg.bits)) {
            where = " z=" + z.to_bigcomplex(cfg.bits).to_string(20);
            return false;
          }
        }
        return true;
      });
      if (!where.empty()) res.failures.back() += where;
    }
  }
  return res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "contact", "regimes", "orthogonality", "rodrigues", "bounds"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteConfig& cfg) {
  using Runner = SuiteResult (*)(const SuiteConfig&);
  static const Runner runners[] = {run_oracle_suite,        run_contact_suite,   run_regime_suite,
                                   run_orthogonality_suite, run_rodrigues_suite, run_bound_suite};
  std::vector<SuiteResult> out;
  const auto& names = suite_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (name == "all" || name == names[i]) out.push_back(runners[i](cfg));
  }
  if (out.empty()) throw InvalidParameter("unknown suite '" + name + "'");
  return out;
}

}  // namespace padehyp
