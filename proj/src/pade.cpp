#include "padehyp/pade.hpp"

#include <algorithm>
#include <string>

#include "padehyp/errors.hpp"
#include "padehyp/hypergeom.hpp"
#include "padehyp/special.hpp"

namespace padehyp {

namespace {

constexpr Precision kGuardBits = 64;

Precision params_precision(const HyParams& params) {
  return std::max(params.a().precision().value_or(0), params.c().precision().value_or(0));
}

// Equality test for remainder coefficients: exact when both sides are exact,
// otherwise relative to `scale` at half the working precision.
bool same_value(const Scalar& x, const Scalar& y, const BigFloat& scale) {
  if (x.is_exact() && y.is_exact()) return x == y;
  Precision bits = std::max(x.precision().value_or(0), y.precision().value_or(0));
  BigFloat diff = abs(x.to_bigfloat(bits) - y.to_bigfloat(bits));
  return diff <= ldexp(scale.rounded(bits), -static_cast<long>(bits / 2));
}

// Solves sum_{j=1..n} t_{i-j} q_j = -t_i, i = m+1..m+n, over the rationals with
// Bareiss elimination on the denominator-cleared integer system.
std::vector<Rational> solve_exact(std::span<const Scalar> taylor, int m, int n) {
  auto t = [&](int k) -> Rational { return k < 0 ? Rational(0) : taylor[static_cast<size_t>(k)].exact(); };
  std::vector<std::vector<Integer>> rows(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n) + 1));
  for (int r = 0; r < n; ++r) {
    int i = m + 1 + r;
    std::vector<Rational> entries;
    for (int j = 1; j <= n; ++j) entries.push_back(t(i - j));
    entries.push_back(Rational(-t(i)));
    Integer scale = 1;
    for (const auto& e : entries) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den_mpz_t());
    for (size_t j = 0; j < entries.size(); ++j) {
      rows[static_cast<size_t>(r)][j] = entries[j].get_num() * (scale / entries[j].get_den());
    }
  }

  Integer previous = 1;
  for (int k = 0; k < n; ++k) {
    auto kk = static_cast<size_t>(k);
    if (rows[kk][kk] == 0) {
      auto pivot = std::find_if(rows.begin() + k + 1, rows.end(), [&](const auto& row) { return row[kk] != 0; });
      if (pivot == rows.end()) {
        throw SingularSystem("pade_oracle: singular Toeplitz system at column " + std::to_string(k) + " for [" +
                             std::to_string(m) + "/" + std::to_string(n) + "]");
      }
      std::swap(rows[kk], *pivot);
    }
    for (size_t i = kk + 1; i < rows.size(); ++i) {
      for (size_t j = kk + 1; j <= static_cast<size_t>(n); ++j) {
        Integer v = rows[i][j] * rows[kk][kk] - rows[i][kk] * rows[kk][j];
        mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      rows[i][kk] = 0;
    }
    previous = rows[kk][kk];
  }

  std::vector<Rational> x(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    auto ii = static_cast<size_t>(i);
    Rational acc(rows[ii][static_cast<size_t>(n)]);
    for (int j = i + 1; j < n; ++j) acc -= Rational(rows[ii][static_cast<size_t>(j)]) * x[static_cast<size_t>(j)];
    acc /= Rational(rows[ii][ii]);
    x[ii] = acc;
  }
  return x;
}

// Same system with float entries: Gaussian elimination, partial pivoting.
std::vector<Scalar> solve_float(std::span<const Scalar> taylor, int m, int n) {
  auto t = [&](int k) -> Scalar { return k < 0 ? Scalar(0) : taylor[static_cast<size_t>(k)]; };
  std::vector<std::vector<Scalar>> rows(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    int i = m + 1 + r;
    for (int j = 1; j <= n; ++j) rows[static_cast<size_t>(r)].push_back(t(i - j));
    rows[static_cast<size_t>(r)].push_back(-t(i));
  }
  for (int k = 0; k < n; ++k) {
    auto kk = static_cast<size_t>(k);
    auto pivot = std::max_element(rows.begin() + k, rows.end(),
                                  [&](const auto& l, const auto& r) { return abs(l[kk]) < abs(r[kk]); });
    if (pivot->at(kk).is_zero()) {
      throw SingularSystem("pade_oracle: singular Toeplitz system at column " + std::to_string(k));
    }
    std::swap(rows[kk], *pivot);
    for (size_t i = kk + 1; i < rows.size(); ++i) {
      Scalar factor = rows[i][kk] / rows[kk][kk];
      for (size_t j = kk; j <= static_cast<size_t>(n); ++j) rows[i][j] -= factor * rows[kk][j];
    }
  }
  std::vector<Scalar> x(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    auto ii = static_cast<size_t>(i);
    Scalar acc = rows[ii][static_cast<size_t>(n)];
    for (int j = i + 1; j < n; ++j) acc -= rows[ii][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    x[ii] = acc / rows[ii][ii];
  }
  return x;
}

BigComplex complex_power(BigComplex base, int exponent) {
  BigComplex result(BigFloat(1L, base.precision()), BigFloat(base.precision()));
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace

HyParams::HyParams(Scalar a, Scalar c) : a_(std::move(a)), c_(std::move(c)) {
  if (c_.is_nonpositive_integer()) {
    throw InvalidParameter("c must not be a nonpositive integer, got c = " + c_.to_string());
  }
  normal_ = c_ > a_ && a_ > Scalar(0);
}

PadeOrder::PadeOrder(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0) throw InvalidOrder("m and n must be nonnegative");
  if (m < n - 1) {
    throw InvalidOrder("m >= n-1 violated: m = " + std::to_string(m) + ", n = " + std::to_string(n));
  }
}

PadePair::PadePair(Polynomial p, Polynomial q, PadeOrder order)
    : p_(std::move(p)), q_(std::move(q)), order_(order) {
  if (q_.coeff(0) != Scalar(1)) throw PreconditionError("PadePair: Q(0) must be 1");
  if (p_.degree() > order_.m()) throw PreconditionError("PadePair: deg P exceeds m");
  if (q_.degree() > order_.n()) throw PreconditionError("PadePair: deg Q exceeds n");
}

BigComplex PadePair::evaluate(const BigComplex& z) const { return p_.evaluate(z) / q_.evaluate(z); }

std::vector<Scalar> taylor_coeffs(const HyParams& params, int count) {
  if (count < 1) throw PreconditionError("taylor_coeffs: count must be at least 1");
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(count));
  out.emplace_back(1);
  for (int k = 1; k < count; ++k) {
    // t_k = t_{k-1} (a+k-1)/(c+k-1)
    out.push_back(out.back() * (params.a() + Scalar(k - 1)) / (params.c() + Scalar(k - 1)));
  }
  return out;
}

Polynomial denominator(const HyParams& params, const PadeOrder& order) {
  const int m = order.m();
  const int n = order.n();
  return terminating_2f1(n, -params.a() - Scalar(m), -params.c() - Scalar(m + n - 1));
}

Polynomial numerator(const HyParams& params, const PadeOrder& order) {
  const int m = order.m();
  const int n = order.n();
  const Scalar b = -params.a() - Scalar(m);
  const Scalar d = -params.c() - Scalar(m + n - 1);
  std::vector<Scalar> p;
  p.reserve(static_cast<size_t>(m) + 1);
  for (int r = 0; r <= m; ++r) {
    Scalar sum(0);
    for (int l = 0; l <= r; ++l) {
      Scalar top = pochhammer(params.a(), r - l) * pochhammer(Scalar(-n), l) * pochhammer(b, l);
      if (top.is_zero()) continue;
      Scalar bottom = pochhammer(d, l) * pochhammer(params.c(), r - l) * Scalar(factorial(l));
      if (bottom.is_zero()) {
        throw PoleInDenominator("numerator: (-c-m-n+1)_" + std::to_string(l) + " vanishes for c = " +
                                params.c().to_string());
      }
      sum += top / bottom;
    }
    p.push_back(std::move(sum));
  }
  return Polynomial(std::move(p));
}

PadePair closed_form_pair(const HyParams& params, const PadeOrder& order) {
  return PadePair(numerator(params, order), denominator(params, order), order);
}

Scalar s_constant(const HyParams& params, const PadeOrder& order) {
  const int m = order.m();
  const int n = order.n();
  Scalar c_poch = pochhammer(params.c(), m + n);
  if (c_poch.is_zero()) {
    throw ZeroDenominator("s_constant: (c)_{m+n} = 0 for c = " + params.c().to_string());
  }
  Scalar cm_poch = pochhammer(params.c() + Scalar(m), n + 1);
  if (cm_poch.is_zero()) {
    throw ZeroDenominator("s_constant: (c+m)_{n+1} = 0 for c = " + params.c().to_string() + ", m = " +
                          std::to_string(m));
  }
  return Scalar(factorial(n)) * pochhammer(params.a(), m + 1) * pochhammer(params.c() - params.a(), n) /
         (c_poch * cm_poch);
}

PadePair pade_oracle(std::span<const Scalar> taylor, const PadeOrder& order) {
  const int m = order.m();
  const int n = order.n();
  if (static_cast<int>(taylor.size()) < m + n + 1) {
    throw PreconditionError("pade_oracle: need " + std::to_string(m + n + 1) + " Taylor coefficients, got " +
                            std::to_string(taylor.size()));
  }
  bool exact = std::all_of(taylor.begin(), taylor.begin() + m + n + 1, [](const Scalar& t) { return t.is_exact(); });

  std::vector<Scalar> q_coeffs{Scalar(1)};
  if (exact) {
    for (auto& x : solve_exact(taylor, m, n)) q_coeffs.emplace_back(std::move(x));
  } else {
    for (auto& x : solve_float(taylor, m, n)) q_coeffs.push_back(std::move(x));
  }
  Polynomial q(std::move(q_coeffs));

  std::vector<Scalar> p_coeffs;
  for (int r = 0; r <= m; ++r) {
    Scalar sum(0);
    for (int j = 0; j <= std::min(r, n); ++j) sum += q.coeff(j) * taylor[static_cast<size_t>(r - j)];
    p_coeffs.push_back(std::move(sum));
  }
  return PadePair(Polynomial(std::move(p_coeffs)), std::move(q), order);
}

ContactCertificate contact_check(const HyParams& params, const PadeOrder& order, int extra) {
  if (extra < 1) throw PreconditionError("contact_check: extra must be at least 1");
  return contact_check(params, closed_form_pair(params, order), extra);
}

ContactCertificate contact_check(const HyParams& params, const PadePair& pair, int extra) {
  if (extra < 1) throw PreconditionError("contact_check: extra must be at least 1");
  const PadeOrder& order = pair.order();
  const int m = order.m();
  const int n = order.n();
  const int last = m + n + extra;
  const Polynomial& q = pair.Q();
  const Polynomial& p = pair.P();
  const std::vector<Scalar> t = taylor_coeffs(params, last + 1);

  ContactCertificate cert;
  cert.s_constant = s_constant(params, order);

  // Magnitude scale for the float path: largest |q_j t_{k-j}| seen.
  Precision bits = std::max(params_precision(params), kMinPrecisionBits);
  BigFloat scale(1L, bits);
  for (int k = 0; k <= last; ++k) {
    Scalar sum(0);
    for (int j = 0; j <= std::min(k, n); ++j) {
      Scalar term = q.coeff(j) * t[static_cast<size_t>(k - j)];
      if (!params.is_exact()) scale = max(scale, abs(term.to_bigfloat(bits)));
      sum += term;
    }
    sum -= p.coeff(k);
    cert.remainder_coeffs.push_back(std::move(sum));
  }
  BigFloat zero_scale = scale;

  int first = -1;
  for (int k = 0; k <= last; ++k) {
    if (!same_value(cert.remainder_coeffs[static_cast<size_t>(k)], Scalar(0), zero_scale)) {
      first = k;
      break;
    }
  }
  if (first >= 0 && first < order.contact()) {
    throw ContactFailure("contact_check: coefficient " + std::to_string(first) + " of Q f - P is " +
                             cert.remainder_coeffs[static_cast<size_t>(first)].to_string() + ", expected 0 below " +
                             std::to_string(order.contact()),
                         first);
  }
  cert.verified_order = first;
  cert.leading_coeff = first >= 0 ? cert.remainder_coeffs[static_cast<size_t>(first)] : Scalar(0);
  cert.matched = first == order.contact() && same_value(cert.leading_coeff, cert.s_constant, zero_scale);

  // Shifted series S * (a+m+1)_j (n+1)_j / ((c+m+n+1)_j j!).
  const Scalar shifted_a = params.a() + Scalar(m + 1);
  const Scalar shifted_c = params.c() + Scalar(m + n + 1);
  Scalar expected = cert.s_constant;
  cert.tail_matched = true;
  for (int j = 1; j < extra; ++j) {
    expected = expected * (shifted_a + Scalar(j - 1)) * Scalar(n + j) / ((shifted_c + Scalar(j - 1)) * Scalar(j));
    const Scalar& actual = cert.remainder_coeffs[static_cast<size_t>(order.contact() + j)];
    cert.tail_matched = cert.tail_matched && same_value(actual, expected, zero_scale);
    ++cert.tail_checked;
  }
  return cert;
}

BigComplex remainder_eval(const HyParams& params, const PadeOrder& order, const BigComplex& z,
                          const BigFloat& target_abs_error) {
  if (target_abs_error.sign() <= 0) throw PreconditionError("remainder_eval: target_abs_error must be positive");
  const Precision out_bits = target_abs_error.precision();
  const Precision wp = std::max(out_bits, z.precision()) + kGuardBits;
  BigFloat modulus = z.abs();
  if (modulus >= BigFloat(1L, wp)) {
    throw DivergentAtPoint("remainder_eval: |z| = " + modulus.to_string(12) + " is not inside the unit disc");
  }
  if (z.re.is_zero() && z.im.is_zero()) return BigComplex(out_bits);

  const BigFloat s = s_constant(params, order).to_bigfloat(wp);
  if (s.is_zero()) return BigComplex(out_bits);
  const BigComplex zw(z.re.rounded(wp), z.im.rounded(wp));
  const BigComplex z_power = complex_power(zw, order.contact());
  const BigFloat prefactor = abs(s) * z_power.abs();
  // Split the budget: half for the series, the rest covers the final products.
  BigFloat series_target = (target_abs_error.rounded(wp) / prefactor) / 2L;
  SeriesParams shifted(params.a() + Scalar(order.m() + 1), Scalar(order.n() + 1),
                       params.c() + Scalar(order.m() + order.n() + 1));
  BigComplex series = eval_2f1_detailed(shifted, zw, series_target).value;
  BigComplex r = z_power * series * s;
  return {r.re.rounded(out_bits), r.im.rounded(out_bits)};
}

BigComplex remainder_eval(const HyParams& params, const PadeOrder& order, const ComplexPoint& z,
                          const BigFloat& target_abs_error) {
  if (z.is_exact() && z.norm_squared() >= Scalar(1)) {
    throw DivergentAtPoint("remainder_eval: |z| >= 1");
  }
  Precision bits = std::max({target_abs_error.precision(), z.re.precision().value_or(0), z.im.precision().value_or(0)});
  return remainder_eval(params, order, z.to_bigcomplex(bits), target_abs_error);
}

BigComplex direct_remainder(const HyParams& params, const PadePair& pair, const BigComplex& z,
                            const BigFloat& target_abs_error) {
  const Precision wp = std::max(target_abs_error.precision(), z.precision()) + kGuardBits;
  const BigComplex zw(z.re.rounded(wp), z.im.rounded(wp));
  const BigComplex q = pair.Q().evaluate(zw);
  const BigFloat q_scale = max(BigFloat(1L, wp), q.abs());
  BigFloat series_target = (target_abs_error.rounded(wp) / q_scale) / 2L;
  BigComplex f = eval_2f1_detailed(SeriesParams(params.a(), Scalar(1), params.c()), zw, series_target).value;
  BigComplex r = q * f - pair.P().evaluate(zw);
  const Precision out_bits = target_abs_error.precision();
  return {r.re.rounded(out_bits), r.im.rounded(out_bits)};
}

}  // namespace padehyp
