#include "padehyp/rootloc.hpp"

#include <sstream>
#include <utility>

#include "padehyp/errors.hpp"
#include "padehyp/hypergeom.hpp"

namespace padehyp {
namespace {

int sign_of(const Rational& q) { return sgn(q); }

Rational eval_exact(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + it->exact();
  return acc;
}

void require_exact_nonzero(const Polynomial& p, const char* who) {
  if (p.is_zero()) throw PreconditionError(std::string(who) + ": polynomial is identically zero");
  if (!p.is_exact()) throw PreconditionError(std::string(who) + ": coefficients must be exact");
}

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Refines (lo, hi] holding a single simple root of sqf until hi - lo <= width.
void refine(const Polynomial& sqf, Rational& lo, Rational& hi, const Rational& width) {
  int s_hi = sign_of(eval_exact(sqf, hi));
  if (s_hi == 0) {
    lo = hi;
    return;
  }
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int s = sign_of(eval_exact(sqf, mid));
    if (s == 0) {
      lo = hi = mid;
      return;
    }
    if (s == s_hi) hi = mid;
    else lo = mid;
  }
}

BigFloat polish(const Polynomial& sqf, const Rational& lo, const Rational& hi, Precision bits) {
  if (lo == hi) return BigFloat(lo, bits);
  std::vector<BigFloat> f = sqf.to_bigfloat(bits + 32);
  std::vector<BigFloat> df = sqf.derivative().to_bigfloat(bits + 32);
  auto eval = [&](const std::vector<BigFloat>& cs, const BigFloat& x) {
    BigFloat acc(0L, bits + 32);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  BigFloat blo(lo, bits + 32), bhi(hi, bits + 32);
  BigFloat x = (blo + bhi) / 2L;
  for (int iter = 0; iter < 8; ++iter) {
    BigFloat d = eval(df, x);
    if (d.is_zero()) break;
    BigFloat next = x - eval(f, x) / d;
    if (next <= blo || next > bhi) break;
    x = std::move(next);
  }
  return x.rounded(bits);
}

void isolate(const SturmSequence& sturm, const Rational& lo, const Rational& hi,
             std::vector<IsolatingInterval>& out) {
  int k = sturm.count(lo, hi);
  if (k == 0) return;
  if (k == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate(sturm, lo, mid, out);
  isolate(sturm, mid, hi, out);
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  require_exact_nonzero(squarefree, "SturmSequence");
  chain_.push_back(squarefree);
  Polynomial next = squarefree.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    Polynomial rem = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
    next = -rem;
  }
}

int SturmSequence::sign_changes_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_of(eval_exact(p, x)));
  return count_changes(signs);
}

int SturmSequence::sign_changes_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.leading().sign());
  return count_changes(signs);
}

int SturmSequence::sign_changes_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign());
  return count_changes(signs);
}

Rational cauchy_bound(const Polynomial& p) {
  require_exact_nonzero(p, "cauchy_bound");
  Rational lead = abs(p.leading().exact());
  Rational best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(k).exact()) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
  require_exact_nonzero(p, "squarefree_factors");
  std::vector<Polynomial> factors;
  if (p.degree() == 0) return factors;
  Polynomial dp = p.derivative();
  Polynomial a = gcd(p, dp);
  Polynomial b = divmod(p, a).quotient;
  Polynomial c = divmod(dp, a).quotient;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = d.is_zero() ? b.monic() : gcd(b, d);
    factors.push_back(g);
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
  }
  return factors;
}

RootReport real_roots(const Polynomial& p, Precision precision_bits) {
  require_exact_nonzero(p, "real_roots");
  RootReport report;
  report.degree = p.degree();
  Polynomial g = gcd(p, p.derivative());
  report.all_simple = g.degree() <= 0;
  if (p.degree() == 0) {
    report.all_simple = true;
    return report;
  }
  Polynomial sqf = report.all_simple ? p : divmod(p, g).quotient;
  SturmSequence sturm(sqf);
  Rational bound = cauchy_bound(sqf);
  if (bound < 2) bound = 2;

  isolate(sturm, -bound, Rational(0), report.intervals);
  isolate(sturm, Rational(0), Rational(1), report.intervals);
  isolate(sturm, Rational(1), bound, report.intervals);

  std::vector<Polynomial> factors;
  std::vector<SturmSequence> factor_sturm;
  if (!report.all_simple) {
    factors = squarefree_factors(p);
    for (const auto& f : factors) {
      if (f.degree() > 0) factor_sturm.emplace_back(f);
      else factor_sturm.emplace_back(Polynomial{Scalar(1)});
    }
  }

  Rational width;
  mpq_set_ui(width.get_mpq_t(), 1, 1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), static_cast<unsigned long>(precision_bits / 2));

  for (auto& iv : report.intervals) {
    int mult = 1;
    if (!report.all_simple) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() > 0 && factor_sturm[i].count(iv.lo, iv.hi) == 1) {
          mult = static_cast<int>(i) + 1;
          break;
        }
      }
    }
    Rational lo = iv.lo, hi = iv.hi;
    refine(sqf, lo, hi, width);
    // An exact hit shrinks the reported interval to the root itself.
    if (lo == hi) iv.lo = iv.hi = lo;
    report.refined_roots.push_back(polish(sqf, lo, hi, precision_bits));
    report.multiplicities.push_back(mult);
    report.real_count += mult;
  }
  return report;
}

std::string predicted_interval(ZeroCase c) {
  switch (c) {
    case ZeroCase::ZerosIn01: return "(0,1)";
    case ZeroCase::ZerosIn1Inf: return "(1,inf)";
    case ZeroCase::ZerosInNegInf0: return "(-inf,0)";
    case ZeroCase::Unclassified: break;
  }
  return "none";
}

std::string case_label(ZeroCase c) {
  switch (c) {
    case ZeroCase::ZerosIn01: return "i";
    case ZeroCase::ZerosIn1Inf: return "ii";
    case ZeroCase::ZerosInNegInf0: return "iii";
    case ZeroCase::Unclassified: break;
  }
  return "unclassified";
}

RegimeClass classify_zero_regime(int n, const Scalar& b, const Scalar& d) {
  RegimeClass out;
  out.hypothesis_checked = b.is_exact() && d.is_exact();
  const Scalar one_minus_n(1 - n);
  if (d > Scalar(0) && b > d + Scalar(n - 1)) {
    out.case_id = ZeroCase::ZerosIn01;
  } else if (b < one_minus_n && d < b + one_minus_n) {
    out.case_id = ZeroCase::ZerosIn1Inf;
  } else if (b < one_minus_n && d > Scalar(0)) {
    out.case_id = ZeroCase::ZerosInNegInf0;
  }
  return out;
}

RegimeClass classify_pole_regime(const HyParams& params, const PadeOrder& order) {
  const int m = order.m(), n = order.n();
  Scalar b = -params.a() - Scalar(m);
  Scalar d = -params.c() - Scalar(m + n - 1);
  return classify_zero_regime(n, b, d);
}

RegimeEvidence verify_regime(int n, const Scalar& b, const Scalar& d, Precision precision_bits) {
  if (n < 1) throw InvalidOrder("verify_regime: n must be positive, got " + std::to_string(n));
  RegimeEvidence ev;
  ev.regime = classify_zero_regime(n, b, d);
  if (ev.regime.case_id == ZeroCase::Unclassified) {
    throw UnclassifiedRegime("no zero-location case applies to n = " + std::to_string(n) + ", b = " + b.to_string() +
                             ", d = " + d.to_string());
  }
  if (!b.is_exact() || !d.is_exact()) throw PreconditionError("verify_regime: b and d must be exact");

  Polynomial f = terminating_2f1(n, b, d);
  ev.report = real_roots(f, precision_bits);

  Polynomial sqf = ev.report.all_simple ? f : divmod(f, gcd(f, f.derivative())).quotient;
  SturmSequence sturm(sqf);
  Rational bound = cauchy_bound(sqf);
  if (bound < 2) bound = 2;
  Rational lo, hi;
  switch (ev.regime.case_id) {
    case ZeroCase::ZerosIn01: lo = 0; hi = 1; break;
    case ZeroCase::ZerosIn1Inf: lo = 1; hi = bound; break;
    default: lo = -bound; hi = 0; break;
  }
  ev.count_in_interval = sturm.count(lo, hi) - (sign_of(eval_exact(sqf, hi)) == 0 ? 1 : 0);

  auto fail = [&](const std::string& why, const IsolatingInterval* iv) {
    std::ostringstream msg;
    msg << "regime " << case_label(ev.regime.case_id) << " violated for n = " << n << ", b = " << b.to_string()
        << ", d = " << d.to_string() << ": " << why;
    if (iv) msg << " (interval (" << to_string(iv->lo) << ", " << to_string(iv->hi) << "])";
    throw RegimeViolation(msg.str());
  };

  if (f.degree() != n) fail("degree " + std::to_string(f.degree()) + " != n", nullptr);
  if (!ev.report.all_simple) fail("repeated root", nullptr);
  if (ev.report.real_count != n) fail("real_count " + std::to_string(ev.report.real_count) + " != n", nullptr);
  for (const auto& iv : ev.report.intervals) {
    const bool hi_is_root = iv.hi == hi && sign_of(eval_exact(sqf, hi)) == 0;
    const bool lo_is_root = iv.lo == lo && iv.hi == lo;
    const bool inside = iv.lo >= lo && iv.hi <= hi && !hi_is_root && !lo_is_root;
    if (!inside) fail("root outside " + predicted_interval(ev.regime.case_id), &iv);
  }
  if (ev.count_in_interval != n) fail("Sturm count " + std::to_string(ev.count_in_interval) + " != n", nullptr);
  ev.verified = true;
  return ev;
}

RegimeEvidence verify_pole_regime(const HyParams& params, const PadeOrder& order, Precision precision_bits) {
  Scalar b = -params.a() - Scalar(order.m());
  Scalar d = -params.c() - Scalar(order.m() + order.n() - 1);
  return verify_regime(order.n(), b, d, precision_bits);
}

}  // namespace padehyp
