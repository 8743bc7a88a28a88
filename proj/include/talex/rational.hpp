#pragma once

#include <string>

#include "talex/polynomial.hpp"

namespace talex {

/// Quotient of two Laurent polynomials over one domain.
///
/// Values produced by rational_normalize are in normal form: coprime parts,
/// both with min exponent 0, and both scaled to the canonical associate
/// (lowest coefficient 1 over GF(p), primitive with positive lowest
/// coefficient over ZZ). Normal form identifies values differing by c*t^k.
class RationalFunction {
public:
    /// Zero over the integers.
    RationalFunction()
        : RationalFunction(LaurentPolynomial())
    {
    }
    explicit RationalFunction(LaurentPolynomial numerator);
    RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator);

    const LaurentPolynomial& numerator() const noexcept { return numerator_; }
    const LaurentPolynomial& denominator() const noexcept { return denominator_; }
    const CoefficientDomain& domain() const noexcept { return numerator_.domain(); }
    bool is_zero() const noexcept { return numerator_.is_zero(); }

    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;
    RationalFunction pow(unsigned exponent) const;

    /// "num" when the denominator is 1, otherwise "(num) / (den)".
    std::string to_string() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    LaurentPolynomial numerator_;
    LaurentPolynomial denominator_;
};

RationalFunction rational_normalize(const RationalFunction& r);

/// a = c * t^k * b for a unit c and an integer k.
bool equal_up_to_unit(const RationalFunction& a, const RationalFunction& b);

RationalFunction reduce_mod(const RationalFunction& r, std::uint32_t p);

} // namespace talex
