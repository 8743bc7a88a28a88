#pragma once

#include "talex/polynomial.hpp"

namespace talex {

/// prod_{j=0}^{n-1} f(a^j t) for a primitive n-th root of unity a, as an
/// integer polynomial. Computed as the norm of f(x) in Z[s][x]/(x^n - s)
/// followed by s = t^n, then scaled by -1 if needed so the lowest
/// coefficient is positive. The min exponent of f contributes n * min.
LaurentPolynomial product_over_roots_of_unity(const LaurentPolynomial& f, unsigned n);

} // namespace talex
