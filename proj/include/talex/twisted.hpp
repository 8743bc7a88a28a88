#pragma once

#include "talex/groups.hpp"
#include "talex/homsearch.hpp"
#include "talex/knots.hpp"
#include "talex/matrix.hpp"
#include "talex/rational.hpp"

namespace talex {

struct TwistedAlexanderResult {
    LaurentPolynomial numerator;
    LaurentPolynomial denominator;
    int dropped_generator = 0; // 1-based
    RationalFunction normalized;
    CoefficientDomain domain;
};

/// sum_w c_w t^{exponent(w)} rep(f(w)) as a matrix over the domain.
PolyMatrix evaluate_rep_phi(const GroupRingElement& e, const Homomorphism& f, const MatrixRep& rep,
    const CoefficientDomain& domain);

/// (rep x phi)(x_j - 1), j 1-based.
PolyMatrix generator_block(int j, const Homomorphism& f, const MatrixRep& rep, const CoefficientDomain& domain);

/// Block Fox Jacobian with generator `dropped` removed: block (r, c) is
/// (rep x phi)(d r / d x_c); rows run over (relator, rep row), columns over
/// (kept generator in increasing order, rep column). Built in one pass per
/// relator, tracking the prefix image and exponent.
PolyMatrix twisted_jacobian(const KnotPresentation& p, const Homomorphism& f, const MatrixRep& rep,
    const CoefficientDomain& domain, int dropped);

/// Same matrix assembled through fox_derivative and evaluate_rep_phi.
PolyMatrix twisted_jacobian_reference(const KnotPresentation& p, const Homomorphism& f, const MatrixRep& rep,
    const CoefficientDomain& domain, int dropped);

/// Wada's invariant. The dropped generator is the largest index whose
/// denominator det((rep x phi)(x_j - 1)) is nonzero over the domain, unless
/// `dropped` names one explicitly.
TwistedAlexanderResult wada_invariant(const KnotPresentation& p, const Homomorphism& f, const MatrixRep& rep,
    const CoefficientDomain& domain = CoefficientDomain::integers(), int dropped = 0);

/// The same pipeline with all arithmetic in GF(p).
TwistedAlexanderResult twisted_alexander_mod(const KnotPresentation& pres, const Homomorphism& f, const MatrixRep& rep,
    std::uint32_t p);

/// Classical Alexander polynomial: (t - 1) times the invariant of the trivial
/// one-dimensional representation, with min exponent 0 and positive lowest
/// coefficient.
LaurentPolynomial alexander_polynomial(const KnotPresentation& p);

} // namespace talex
