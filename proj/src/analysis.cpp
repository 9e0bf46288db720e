#include "padehyp/analysis.hpp"

#include <algorithm>
#include <string>

#include "padehyp/errors.hpp"
#include "padehyp/hypergeom.hpp"
#include "padehyp/special.hpp"

namespace padehyp {
namespace {

Scalar falling(const Scalar& x, int k) {
  Scalar out(1);
  for (int i = 0; i < k; ++i) out = out * (x - Scalar(i));
  return out;
}

BigFloat log_beta(const Scalar& p, const Scalar& q, Precision bits) {
  BigFloat bp = p.to_bigfloat(bits), bq = q.to_bigfloat(bits);
  return log_gamma(bp) + log_gamma(bq) - log_gamma(bp + bq);
}

void require_positive(const Scalar& x, const std::string& what) {
  if (x.sign() <= 0) throw IntegrabilityViolation("divergent moment: " + what + " = " + x.to_string() + " must be > 0");
}

}  // namespace

BigFloat orthogonality_residual(int n, const Scalar& b, const Scalar& d, const Polynomial& g, ZeroCase which,
                                Precision bits) {
  if (n < 0) throw InvalidOrder("orthogonality_residual: n must be nonnegative");
  if (which == ZeroCase::Unclassified) throw PreconditionError("orthogonality_residual: interval case required");
  const Precision work = bits + 32;
  Polynomial h = terminating_2f1(n, b, d) * g;
  if (h.is_zero()) return BigFloat(0L, bits);
  const int top = h.degree();
  const Scalar e = b - d - Scalar(n - 1);  // exponent of (1-t) in the Beta integrand
  const Scalar x = Scalar(n) - b;

  Scalar sum(0);
  BigFloat base(work);
  switch (which) {
    case ZeroCase::ZerosIn01:
      require_positive(d, "d");
      require_positive(e, "b-d-n+1");
      base = exp(log_beta(d, e, work));
      for (int j = 0; j <= top; ++j) sum = sum + h.coeff(j) * pochhammer(d, j) / pochhammer(d + e, j);
      break;
    case ZeroCase::ZerosIn1Inf:
      require_positive(e, "b-d-n+1");
      require_positive(x - Scalar(top), "n-b-deg");
      base = exp(log_beta(x, e, work));
      for (int j = 0; j <= top; ++j) {
        sum = sum + h.coeff(j) * pochhammer(x + e - Scalar(j), j) / pochhammer(x - Scalar(j), j);
      }
      break;
    default:
      require_positive(d, "d");
      require_positive(x - Scalar(top), "n-b-deg");
      base = exp(log_beta(d, x, work));
      for (int j = 0; j <= top; ++j) {
        Scalar t = h.coeff(j) * pochhammer(d, j) / pochhammer(x - Scalar(j), j);
        sum = (j % 2 == 0) ? sum + t : sum - t;
      }
      break;
  }
  return abs(base * sum.to_bigfloat(work)).rounded(bits);
}

BigFloat rodrigues_residual(int n, const Scalar& b, const Scalar& d, const Scalar& z, Precision bits) {
  if (n < 0) throw InvalidOrder("rodrigues_residual: n must be nonnegative");
  if (z <= Scalar(0) || z >= Scalar(1)) throw PreconditionError("rodrigues_residual: z must lie in (0,1)");
  const Precision work = bits + 32;
  const BigFloat zf = z.to_bigfloat(work);
  const BigFloat wf = BigFloat(1L, work) - zf;

  const Scalar lhs_exact = terminating_2f1(n, b, d).evaluate(z);
  BigFloat lhs = pow(zf, (d - Scalar(1)).to_bigfloat(work)) * pow(wf, (b - d - Scalar(n)).to_bigfloat(work)) *
                 lhs_exact.to_bigfloat(work);

  const Scalar alpha = d + Scalar(n - 1);
  const Scalar beta = b - d;
  BigFloat rhs(0L, work);
  Integer binom = 1;
  for (int k = 0; k <= n; ++k) {
    const int j = n - k;
    Scalar coef = Scalar(Rational(binom)) * falling(alpha, k) * falling(beta, j);
    if (j % 2 == 1) coef = -coef;
    if (!coef.is_zero()) {
      rhs = rhs + coef.to_bigfloat(work) * pow(zf, (alpha - Scalar(k)).to_bigfloat(work)) *
                      pow(wf, (beta - Scalar(j)).to_bigfloat(work));
    }
    binom = binom * (n - k) / (k + 1);
  }
  rhs = rhs / pochhammer(d, n).to_bigfloat(work);
  return abs(lhs - rhs).rounded(bits);
}

RemainderBound remainder_bound_detail(const HyParams& params, const PadeOrder& order, const ComplexPoint& z,
                                      Precision bits) {
  const Scalar& a = params.a();
  const Scalar& c = params.c();
  if (!params.normal_regime()) {
    throw InvalidParameter("remainder_bound requires c > a > 0, got a = " + a.to_string() + ", c = " + c.to_string());
  }
  if (!(z.norm_squared() < Scalar(1))) throw DivergentAtPoint("remainder_bound requires |z| < 1");
  const Scalar delta = c - a;
  if (delta == Scalar(1)) throw BoundaryParameter("remainder_bound: c - a = 1 is covered by neither bound");

  const int m = order.m(), n = order.n();
  const Precision work = bits + 32;
  RemainderBound out;
  out.below_one = delta < Scalar(1);
  if (!out.below_one) {
    out.gamma_factor = (pochhammer(c + Scalar(m), n + 1) / pochhammer(delta - Scalar(1), n + 1)).to_bigfloat(work);
  } else {
    const BigFloat one_minus_z = (ComplexPoint(Scalar(1)) - z).modulus(work);
    const BigFloat shared = log_gamma((c + Scalar(m + n + 1)).to_bigfloat(work)) -
                            log_gamma((a + Scalar(m + 1)).to_bigfloat(work));
    const BigFloat nfact = Scalar(factorial(n)).to_bigfloat(work);
    const BigFloat edge = pow(one_minus_z, (delta - Scalar(1)).to_bigfloat(work));
    out.gamma_factor = exp(shared + log_gamma((a - c + Scalar(1)).to_bigfloat(work))) / nfact * edge;
    const BigFloat alt = exp(shared + log_gamma(delta.to_bigfloat(work))) /
                         abs((delta - Scalar(1)).to_bigfloat(work)) / nfact * edge;
    out.alternative_gamma_factor = alt.rounded(bits);
  }
  const BigFloat s = abs(s_constant(params, order).to_bigfloat(work));
  const BigFloat zpow = pow(z.modulus(work), static_cast<long>(order.contact()));
  // Widen by a few ulps so the float result stays an upper bound.
  const BigFloat slack = BigFloat(1L, work) + ldexp(BigFloat(1L, work), -static_cast<long>(bits) + 8);
  out.bound = (s * zpow * out.gamma_factor * slack).rounded(bits);
  out.gamma_factor = out.gamma_factor.rounded(bits);
  return out;
}

BigFloat remainder_bound(const HyParams& params, const PadeOrder& order, const ComplexPoint& z, Precision bits) {
  return remainder_bound_detail(params, order, z, bits).bound;
}

RaySpec RaySpec::up_to(const Rational& rho, int m_max, int m_min) {
  if (rho <= 0 || rho > 1) throw InvalidParameter("rho must lie in (0,1], got " + to_string(rho));
  if (m_min < 0 || m_max < m_min) throw InvalidParameter("empty m range");
  RaySpec out{rho, {}};
  for (int m = m_min; m <= m_max; ++m) out.m_values.push_back(m);
  return out;
}

int RaySpec::n_for(int m) const {
  Rational t = rho * m + Rational(1, 2);
  long n = floor(t).get_si();
  return static_cast<int>(std::clamp<long>(n, 1, m + 1));
}

std::vector<PadeOrder> RaySpec::orders() const {
  std::vector<PadeOrder> out;
  for (int m : m_values) out.emplace_back(m, n_for(m));
  return out;
}

CompactRegion::CompactRegion(Rational r, int radii, int angles) : radius(std::move(r)), n_radii(radii), n_angles(angles) {
  if (radius <= 0 || radius >= 1) throw InvalidParameter("region radius must lie in (0,1), got " + to_string(radius));
  if (n_radii < 1 || n_angles < 1) throw InvalidParameter("region grid must be nonempty");
}

std::vector<ComplexPoint> CompactRegion::points(Precision bits) const {
  std::vector<ComplexPoint> out;
  out.emplace_back(Scalar(0));
  const BigFloat two_pi = const_pi(bits) * 2L;
  for (int i = 1; i <= n_radii; ++i) {
    const Rational s = radius * Rational(i, n_radii);
    for (int j = 0; j < n_angles; ++j) {
      if (j == 0) {
        out.emplace_back(Scalar(s));
        continue;
      }
      const BigFloat theta = two_pi * static_cast<long>(j) / static_cast<long>(n_angles);
      const BigComplex p = BigComplex::polar(BigFloat(s, bits), theta);
      out.emplace_back(Scalar(p.re), Scalar(p.im));
    }
  }
  return out;
}

ConvergenceTable ray_experiment(const HyParams& params, const RaySpec& ray, const CompactRegion& region,
                                const BigFloat& eval_error) {
  if (!params.normal_regime()) {
    throw InvalidParameter("ray_experiment requires c > a > 0, got a = " + params.a().to_string() +
                           ", c = " + params.c().to_string());
  }
  const Precision bits = eval_error.precision();
  const std::vector<ComplexPoint> pts = region.points(bits);
  const SeriesParams f_params(params.a(), Scalar(1), params.c());
  std::vector<BigComplex> zs, fs;
  for (const auto& p : pts) {
    zs.push_back(p.to_bigcomplex(bits));
    fs.push_back(eval_2f1(f_params, zs.back(), eval_error));
  }
  const bool has_bound = params.c() - params.a() != Scalar(1);

  ConvergenceTable table;
  for (const auto& order : ray.orders()) {
    const PadePair pair = closed_form_pair(params, order);
    const auto pc = pair.P().to_bigfloat(bits);
    const auto qc = pair.Q().to_bigfloat(bits);
    ConvergenceRow row;
    row.m = order.m();
    row.n = order.n();
    row.sup_error = BigFloat(0L, bits);
    std::optional<BigFloat> min_q;
    BigFloat sup_bound(0L, bits);
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const BigComplex qv = horner(qc, zs[i]);
      const BigFloat aq = qv.abs();
      if (aq.is_zero()) {
        throw PoleOnGrid("Q_" + std::to_string(order.m()) + std::to_string(order.n()) + " vanishes at grid point " +
                         zs[i].to_string(20));
      }
      if (!min_q || aq < *min_q) min_q = aq;
      const BigFloat err = (fs[i] - horner(pc, zs[i]) / qv).abs();
      row.sup_error = max(row.sup_error, err);
      if (has_bound) sup_bound = max(sup_bound, remainder_bound(params, order, pts[i], bits));
    }
    row.min_abs_q = *min_q;
    if (has_bound) row.remainder_bound = sup_bound;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace padehyp
