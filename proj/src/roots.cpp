#include "talex/roots.hpp"

#include "talex/error.hpp"
#include "talex/matrix.hpp"

namespace talex {

LaurentPolynomial product_over_roots_of_unity(const LaurentPolynomial& f, unsigned n)
{
    if (n == 0)
        throw InvalidArgument("product over roots of unity needs n >= 1");
    if (!f.domain().is_integers())
        throw DomainMismatch("product over roots of unity is defined over the integers");
    const auto zz = CoefficientDomain::integers();
    if (f.is_zero())
        return LaurentPolynomial(zz);

    // Column k holds x^k * f(x) reduced by x^n = s, as polynomials in s.
    PolyMatrix multiplication(n, n, zz);
    const auto& coefficients = f.coefficients();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            const std::size_t power = k + i;
            multiplication.add_to(power % n, k, LaurentPolynomial::monomial(zz, coefficients[i],
                                                    static_cast<std::int64_t>(power / n)));
        }
    const auto norm = determinant(multiplication);

    std::vector<Integer> spread;
    if (!norm.is_zero()) {
        spread.assign((norm.coefficients().size() - 1) * n + 1, Integer(0));
        for (std::size_t k = 0; k < norm.coefficients().size(); ++k)
            spread[k * n] = norm.coefficients()[k];
        if (spread.front() < 0)
            for (auto& c : spread)
                c = -c;
    }
    const auto shift = static_cast<std::int64_t>(n) * (f.min_exponent() + norm.min_exponent());
    return LaurentPolynomial(zz, shift, std::move(spread));
}

} // namespace talex
