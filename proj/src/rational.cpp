#include "talex/rational.hpp"

#include "talex/error.hpp"

namespace talex {

RationalFunction::RationalFunction(LaurentPolynomial numerator)
    : numerator_(std::move(numerator))
    , denominator_(LaurentPolynomial::constant(numerator_.domain(), 1))
{
}

RationalFunction::RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : numerator_(std::move(numerator))
    , denominator_(std::move(denominator))
{
    if (!(numerator_.domain() == denominator_.domain()))
        throw DomainMismatch("rational function parts over different domains");
    if (denominator_.is_zero())
        throw InvalidArgument("zero denominator");
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const
{
    return rational_normalize(RationalFunction(numerator_ * rhs.numerator_, denominator_ * rhs.denominator_));
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const
{
    if (rhs.is_zero())
        throw InvalidArgument("division by the zero rational function");
    return rational_normalize(RationalFunction(numerator_ * rhs.denominator_, denominator_ * rhs.numerator_));
}

RationalFunction RationalFunction::pow(unsigned exponent) const
{
    // Powers of coprime parts stay coprime, so normalizing once is enough.
    const auto base = rational_normalize(*this);
    return RationalFunction(base.numerator_.pow(exponent), base.denominator_.pow(exponent));
}

std::string RationalFunction::to_string() const
{
    if (denominator_ == LaurentPolynomial::constant(domain(), 1))
        return numerator_.to_string();
    return "(" + numerator_.to_string() + ") / (" + denominator_.to_string() + ")";
}

RationalFunction rational_normalize(const RationalFunction& r)
{
    const auto& domain = r.domain();
    if (r.is_zero())
        return RationalFunction(LaurentPolynomial(domain));
    auto num = unit_normalize(r.numerator());
    auto den = unit_normalize(r.denominator());
    if (auto q = exact_quotient(num, den)) {
        num = unit_normalize(*q);
        den = LaurentPolynomial::constant(domain, 1);
    } else if (auto q2 = exact_quotient(den, num)) {
        den = unit_normalize(*q2);
        num = LaurentPolynomial::constant(domain, 1);
    } else {
        const auto g = gcd(num, den);
        if (!(g == LaurentPolynomial::constant(domain, 1))) {
            num = unit_normalize(*exact_quotient(num, g));
            den = unit_normalize(*exact_quotient(den, g));
        }
    }
    return RationalFunction(std::move(num), std::move(den));
}

bool equal_up_to_unit(const RationalFunction& a, const RationalFunction& b)
{
    if (!(a.domain() == b.domain()))
        throw DomainMismatch("comparing rational functions over " + a.domain().to_string() + " and "
            + b.domain().to_string());
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    // Cross multiplication avoids a gcd: a ~ b iff num_a * den_b ~ num_b * den_a.
    return unit_normalize(a.numerator() * b.denominator()) == unit_normalize(b.numerator() * a.denominator());
}

RationalFunction reduce_mod(const RationalFunction& r, std::uint32_t p)
{
    auto den = reduce_mod(r.denominator(), p);
    if (den.is_zero())
        throw DenominatorVanishes("denominator vanishes modulo " + std::to_string(p));
    return rational_normalize(RationalFunction(reduce_mod(r.numerator(), p), std::move(den)));
}

} // namespace talex
