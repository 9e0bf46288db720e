#pragma once

#include "padehyp/bigfloat.hpp"
#include "padehyp/scalar.hpp"

namespace padehyp {

// Rising factorial (x)_k = x(x+1)...(x+k-1), (x)_0 = 1. Exact for exact x.
Scalar pochhammer(const Scalar& x, int k);

// Gamma(x+k)/Gamma(x) for integer offset k. This is the only sanctioned way to
// form a Gamma ratio whose arguments differ by an integer: it reduces to a
// Pochhammer product, so it never overflows and stays exact for exact x.
Scalar gamma_ratio(const Scalar& x, int k);

Rational factorial(int k);

// ln Gamma(x) for x > 0, correctly rounded at x's precision.
// Throws DomainError for x <= 0.
BigFloat log_gamma(const BigFloat& x);

}  // namespace padehyp
