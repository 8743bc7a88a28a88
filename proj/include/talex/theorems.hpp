#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "talex/groups.hpp"
#include "talex/homsearch.hpp"
#include "talex/int_matrix.hpp"
#include "talex/knots.hpp"
#include "talex/rational.hpp"

namespace talex {

enum class CaseKind { cyclic, dihedral, dihedral_times_cyclic, metacyclic, dicyclic, a4, d3c3, conjecture };

std::string to_string(CaseKind kind);
/// Inverse of to_string; throws InvalidArgument.
CaseKind parse_case_kind(const std::string& name);

/// A congruence formula with its parameters:
///   cyclic (n), dihedral (p, n), dihedral_times_cyclic (p, n, m),
///   metacyclic (m, p, k), dicyclic (p, n), a4 (), d3c3 (), conjecture (p).
/// q = p^n where it applies. The modulus is p (2 for a4, 3 for d3c3) and
/// absent for cyclic, which is checked exactly.
struct TheoremCase {
    CaseKind kind = CaseKind::cyclic;
    std::vector<std::int64_t> parameters;
    std::optional<std::uint32_t> modulus;

    static TheoremCase cyclic(std::int64_t n);
    static TheoremCase dihedral(std::int64_t p, std::int64_t n);
    static TheoremCase dihedral_times_cyclic(std::int64_t p, std::int64_t n, std::int64_t m);
    static TheoremCase metacyclic(std::int64_t m, std::int64_t p, std::int64_t k);
    static TheoremCase dicyclic(std::int64_t p, std::int64_t n);
    static TheoremCase a4();
    static TheoremCase d3c3();
    static TheoremCase conjecture(std::int64_t p);

    /// Throws NotPrime or InvalidArgument when the hypotheses fail. A
    /// modulus is required except for cyclic, where any prime may be given;
    /// otherwise it must be the case's own prime.
    void validate() const;
    /// p for the prime cases, 2 for a4, 3 for d3c3, 0 for cyclic.
    std::uint32_t natural_modulus() const;
    FiniteGroup group() const;
    /// Group name, e.g. "D9", "G(3,7|2)".
    std::string group_name() const;
};

/// Sorted k in 1..p-1 with k^m = 1 mod p. Needs m | p - 1.
std::vector<std::uint32_t> mth_roots_of_unity_mod_p(std::uint32_t m, std::uint32_t p);

/// Right-hand side of the case's formula for the given Alexander polynomial,
/// normalized, over GF(modulus) or the integers. Root-of-unity products are
/// taken over whole orbits with product_over_roots_of_unity.
RationalFunction rhs(const TheoremCase& c, const LaurentPolynomial& delta);

/// Metacyclic right-hand side in the regrouped form: Delta(t)/(t-1) to the
/// power p, the nontrivial k_j to the power p-1, times the orbit product over
/// the nontrivial m-th roots of unity.
RationalFunction metacyclic_rhs_regrouped(const TheoremCase& c, const LaurentPolynomial& delta);

struct VerdictRecord {
    std::string knot;
    std::string group;
    TheoremCase theorem;
    std::size_t surjections_found = 0;
    std::vector<bool> verdicts;
    std::vector<RationalFunction> lhs;
    RationalFunction rhs;
    double elapsed_ms = 0;

    bool vacuous() const { return surjections_found == 0; }
    bool all_true() const;
    nlohmann::json to_json() const;
};

/// Finds the surjections onto the case's group up to conjugacy, computes each
/// invariant (mod the case's prime, or exactly) and compares it with rhs.
VerdictRecord verify_congruence(const KnotPresentation& pres, const std::string& knot_name, const TheoremCase& c,
    const SearchOptions& options = { true });

/// The 35 groups of order below 24 normally generated by one element, as the
/// cases whose formulas cover them.
std::vector<TheoremCase> order_below_24_cases();

/// C(i-1, j-1) mod p for 1 <= i, j <= p^n.
IntMatrix a_matrix(std::uint32_t p, unsigned n);
/// Upper triangular: 1 on even superdiagonals, -1 on odd ones, reduced mod p.
IntMatrix tau_a(std::uint32_t p, unsigned n);
/// (-1)^(j-1) C(j-1, i-1) mod p.
IntMatrix tau_b(std::uint32_t p, unsigned n);
/// Permutation matrices of the dihedral action on q points: a sends i to
/// i+1, b sends i to q+1-i.
IntMatrix dihedral_rho_bar_a(std::uint32_t q);
IntMatrix dihedral_rho_bar_b(std::uint32_t q);
/// Metacyclic action on p points: entry (i, j) of rho_bar(b) is 1 when
/// j = k i - 1 mod p.
IntMatrix metacyclic_rho_bar_b(std::uint32_t p, std::uint32_t k);

namespace identities {

    /// Each verifier checks its identity exhaustively over the stated range.
    bool lucas(std::uint32_t p, unsigned limit);
    bool pascal(unsigned limit);
    bool vandermonde(unsigned limit);
    /// sum_k (-1)^k C(n,k) f(k) for f = x^r and f = C(a x - 2, r), n <= limit.
    bool euler_finite_difference(unsigned limit);

    /// C(q-1, k) = (-1)^k mod p.
    bool dihedral_lemma_i(std::uint32_t p, unsigned n);
    /// sum_{k<=j} (-1)^(j-k) C(m, k-1) = C(m-1, j-1) for 1 <= m, j <= q.
    bool dihedral_lemma_ii(std::uint32_t p, unsigned n);
    /// (-1)^(j-1) C(i+j-2, j-1) = C(q-i, j-1) mod p.
    bool dihedral_lemma_iii(std::uint32_t p, unsigned n);

    /// sum_{k=j}^{i} C(i-1,k-1) C(p-j,p-k) = C(p-j+i-1, p-1).
    bool metacyclic_lemma_i(std::uint32_t p);
    /// A_p times (C(p-j, p-i)) is the identity mod p.
    bool metacyclic_lemma_ii(std::uint32_t p);
    /// C(p-s, p-i) = (-1)^(i+s) C(i-1, s-1) mod p.
    bool metacyclic_lemma_iii(std::uint32_t p);

} // namespace identities

} // namespace talex
