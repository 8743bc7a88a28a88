#include "talex/twisted.hpp"

#include <map>

#include "talex/error.hpp"

namespace talex {

namespace {

    void check_inputs(const Homomorphism& f, const MatrixRep& rep, const CoefficientDomain& domain)
    {
        if (!f.target || !(rep.group() == *f.target))
            throw InvalidArgument("representation and homomorphism have different groups");
        if (!rep.domain().is_integers() && !(rep.domain() == domain))
            throw DomainMismatch("representation over " + rep.domain().to_string() + " used over " + domain.to_string());
    }

    // Sparse accumulator for a matrix of Laurent polynomials with int64 coefficients.
    class Accumulator {
    public:
        Accumulator(std::size_t rows, std::size_t cols)
            : cols_(cols)
            , cells_(rows * cols)
        {
        }

        // Adds c * t^e * rep(g) to the d x d block with top-left corner (row, col).
        void add_block(std::size_t row, std::size_t col, std::int64_t c, std::int64_t e, const MatrixRep& rep, Element g)
        {
            const std::size_t d = rep.dimension();
            if (rep.is_permutation()) {
                const auto& perm = rep.permutation(g);
                for (std::size_t h = 0; h < d; ++h)
                    cells_[(row + perm[h]) * cols_ + col + h][e] += c;
                return;
            }
            const auto& m = rep.image(g);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (m(i, j) != 0)
                        cells_[(row + i) * cols_ + col + j][e] += c * m(i, j);
        }

        PolyMatrix finish(const CoefficientDomain& domain) const
        {
            const std::size_t rows = cols_ == 0 ? 0 : cells_.size() / cols_;
            PolyMatrix out(rows, cols_, domain);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols_; ++j) {
                    const auto& cell = cells_[i * cols_ + j];
                    if (cell.empty())
                        continue;
                    const auto low = cell.begin()->first;
                    const auto high = cell.rbegin()->first;
                    std::vector<Integer> coefficients(static_cast<std::size_t>(high - low + 1), Integer(0));
                    for (const auto& [e, c] : cell)
                        coefficients[static_cast<std::size_t>(e - low)] = static_cast<long>(c);
                    out.set(i, j, LaurentPolynomial(domain, low, std::move(coefficients)));
                }
            return out;
        }

    private:
        std::size_t cols_;
        std::vector<std::map<std::int64_t, std::int64_t>> cells_;
    };

    // det(t P - I) for a permutation matrix P: each cycle of length L gives (-1)^(L+1) (t^L - 1).
    LaurentPolynomial permutation_denominator(const std::vector<std::size_t>& perm, const CoefficientDomain& domain)
    {
        LaurentPolynomial det = LaurentPolynomial::constant(domain, 1);
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t start = 0; start < perm.size(); ++start) {
            if (seen[start])
                continue;
            std::int64_t length = 0;
            for (std::size_t x = start; !seen[x]; x = perm[x]) {
                seen[x] = true;
                ++length;
            }
            auto factor = LaurentPolynomial::monomial(domain, 1, length) - LaurentPolynomial::constant(domain, 1);
            det *= length % 2 == 0 ? -factor : factor;
        }
        return det;
    }

    LaurentPolynomial generator_denominator(int j, const Homomorphism& f, const MatrixRep& rep,
        const CoefficientDomain& domain)
    {
        const Element g = f.images.at(static_cast<std::size_t>(j - 1));
        if (rep.is_permutation())
            return permutation_denominator(rep.permutation(g), domain);
        return determinant(generator_block(j, f, rep, domain));
    }

} // namespace

PolyMatrix evaluate_rep_phi(const GroupRingElement& e, const Homomorphism& f, const MatrixRep& rep,
    const CoefficientDomain& domain)
{
    check_inputs(f, rep, domain);
    const std::size_t d = rep.dimension();
    Accumulator acc(d, d);
    for (const auto& [w, c] : e.terms())
        acc.add_block(0, 0, c, abelian_exponent(w), rep, evaluate_word(*f.target, f.images, w));
    return acc.finish(domain);
}

PolyMatrix generator_block(int j, const Homomorphism& f, const MatrixRep& rep, const CoefficientDomain& domain)
{
    auto x = GroupRingElement::word({ j });
    x.add({}, -1);
    return evaluate_rep_phi(x, f, rep, domain);
}

PolyMatrix twisted_jacobian(const KnotPresentation& p, const Homomorphism& f, const MatrixRep& rep,
    const CoefficientDomain& domain, int dropped)
{
    check_inputs(f, rep, domain);
    f.validate(p);
    const auto m = p.generator_count;
    if (dropped < 1 || dropped > m)
        throw InvalidArgument("dropped generator out of range");
    const std::size_t d = rep.dimension();
    const std::size_t rows = p.relators.size() * d;
    const std::size_t cols = static_cast<std::size_t>(m - 1) * d;
    Accumulator acc(rows, cols);
    const auto& g = *f.target;
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        Element prefix = g.identity();
        std::int64_t exponent = 0;
        for (int letter : p.relators[r]) {
            const int j = letter > 0 ? letter : -letter;
            const Element x = f.images[static_cast<std::size_t>(j - 1)];
            if (j != dropped) {
                const auto col = static_cast<std::size_t>(j < dropped ? j - 1 : j - 2) * d;
                // d(u x)/dx = u;  d(u x^-1)/dx = -u x^-1.
                if (letter > 0)
                    acc.add_block(r * d, col, 1, exponent, rep, prefix);
                else
                    acc.add_block(r * d, col, -1, exponent - 1, rep, g.mul(prefix, g.inverse(x)));
            }
            prefix = g.mul(prefix, letter > 0 ? x : g.inverse(x));
            exponent += letter > 0 ? 1 : -1;
        }
    }
    return acc.finish(domain);
}

PolyMatrix twisted_jacobian_reference(const KnotPresentation& p, const Homomorphism& f, const MatrixRep& rep,
    const CoefficientDomain& domain, int dropped)
{
    const auto m = p.generator_count;
    const std::size_t d = rep.dimension();
    PolyMatrix out(p.relators.size() * d, static_cast<std::size_t>(m - 1) * d, domain);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        std::size_t col = 0;
        for (int j = 1; j <= m; ++j) {
            if (j == dropped)
                continue;
            out.set_block(r * d, col, evaluate_rep_phi(fox_derivative(p.relators[r], j, m), f, rep, domain));
            col += d;
        }
    }
    return out;
}

TwistedAlexanderResult wada_invariant(const KnotPresentation& p, const Homomorphism& f, const MatrixRep& rep,
    const CoefficientDomain& domain, int dropped)
{
    check_inputs(f, rep, domain);
    p.validate();
    f.validate(p);
    if (p.relators.size() + 1 != static_cast<std::size_t>(p.generator_count))
        throw InvalidArgument("presentation has " + std::to_string(p.relators.size()) + " relators for "
            + std::to_string(p.generator_count) + " generators; expected one fewer");
    LaurentPolynomial denominator(domain);
    if (dropped != 0) {
        if (dropped < 1 || dropped > p.generator_count)
            throw InvalidArgument("dropped generator out of range");
        denominator = generator_denominator(dropped, f, rep, domain);
        if (denominator.is_zero())
            throw DenominatorVanishes("denominator for generator " + std::to_string(dropped) + " vanishes");
    } else {
        for (int j = p.generator_count; j >= 1; --j) {
            denominator = generator_denominator(j, f, rep, domain);
            if (!denominator.is_zero()) {
                dropped = j;
                break;
            }
        }
        if (dropped == 0)
            throw DenominatorVanishes("every candidate denominator vanishes over " + domain.to_string());
    }
    auto numerator = determinant(twisted_jacobian(p, f, rep, domain, dropped));
    auto normalized = rational_normalize(RationalFunction(numerator, denominator));
    return TwistedAlexanderResult { std::move(numerator), std::move(denominator), dropped, std::move(normalized), domain };
}

TwistedAlexanderResult twisted_alexander_mod(const KnotPresentation& pres, const Homomorphism& f, const MatrixRep& rep,
    std::uint32_t p)
{
    return wada_invariant(pres, f, rep, CoefficientDomain::prime_field(p));
}

LaurentPolynomial alexander_polynomial(const KnotPresentation& p)
{
    const auto trivial = std::make_shared<const FiniteGroup>(cyclic(1));
    const Homomorphism f { trivial, std::vector<Element>(static_cast<std::size_t>(p.generator_count), 0) };
    const auto result = wada_invariant(p, f, trivial_representation(*trivial));
    const auto zz = CoefficientDomain::integers();
    const auto t_minus_one = LaurentPolynomial::from_ints(zz, { -1, 1 });
    const auto delta = rational_normalize(
        RationalFunction(result.normalized.numerator() * t_minus_one, result.normalized.denominator()));
    if (!(delta.denominator() == LaurentPolynomial::constant(zz, 1)))
        throw InvalidArgument("presentation does not give a polynomial Alexander invariant");
    return delta.numerator();
}

} // namespace talex
