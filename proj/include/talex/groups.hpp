#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "talex/domain.hpp"
#include "talex/int_matrix.hpp"

namespace talex {

using Element = std::size_t;

/// Finite group given by its Cayley table: mul(a, b) = table[a][b].
///
/// The constructor checks that the table is a Latin square with a two-sided
/// identity and, for order <= 64, that it is associative.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<Element>> table, std::map<std::string, Element> labels = {},
        std::string name = {});

    std::size_t order() const noexcept { return table_.size(); }
    Element identity() const noexcept { return identity_; }
    Element mul(Element a, Element b) const { return table_[a][b]; }
    Element inverse(Element a) const { return inverses_[a]; }
    /// h g h^-1
    Element conjugate(Element g, Element h) const { return mul(mul(h, g), inverses_[h]); }
    Element power(Element g, std::int64_t k) const;

    const std::vector<std::vector<Element>>& table() const noexcept { return table_; }
    const std::map<std::string, Element>& labels() const noexcept { return labels_; }
    /// Element carrying the label; throws InvalidArgument when absent.
    Element label(const std::string& name) const;
    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
    {
        return a.table_ == b.table_ && a.labels_ == b.labels_;
    }

private:
    std::vector<std::vector<Element>> table_;
    std::vector<Element> inverses_;
    Element identity_ = 0;
    std::map<std::string, Element> labels_;
    std::string name_;
};

struct ConjugacyClass {
    Element representative;
    std::vector<Element> members; // sorted

    friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

// Catalog. Index conventions (fixed so that fixtures stay stable):
//   cyclic(n)                a^i                      -> i
//   dihedral(n)              a^i b^e                  -> i + n e
//   dicyclic(n)              a^i b^e, b^2 = a^n       -> i + 2n e
//   metacyclic(m, p, k)      a^i b^e, b a b^-1 = a^k  -> i + p e
//   dp_semidirect_cp(p)      a^i b^j c^e              -> i + p j + p^2 e
//   direct_product(G, H)     (g, h)                   -> g + |G| h
//   alternating4()           breadth-first closure of a = (0 1 2), b = (0 1)(2 3)
FiniteGroup cyclic(std::size_t n);
FiniteGroup dihedral(std::size_t n);
FiniteGroup dicyclic(std::size_t n);
FiniteGroup metacyclic(std::size_t m, std::uint32_t p, std::uint32_t k);
FiniteGroup alternating4();
/// <a, b, c | a^p = b^p = c^2 = 1, ab = ba, cac = a^-1, cbc = b^-1>, order 2p^2.
FiniteGroup dp_semidirect_cp(std::uint32_t p);
inline FiniteGroup d3_semidirect_c3() { return dp_semidirect_cp(3); }
/// Labels of H receive a trailing "'" so they stay distinct from those of G.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

std::size_t element_order(const FiniteGroup& g, Element x);
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);
/// Subgroup generated by the given elements, sorted.
std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& generators);
/// Smallest normal subgroup containing the given elements, sorted.
std::vector<Element> normal_closure(const FiniteGroup& g, const std::vector<Element>& elements);
/// Representative of the first conjugacy class (in class order) whose normal
/// closure is the whole group.
std::optional<Element> is_normally_generated_by_one(const FiniteGroup& g);

/// Cayley-table file: {"order": n, "identity": e, "table": [[...]], "labels": {"a": 1}}.
FiniteGroup load_cayley_group(const std::string& path);
FiniteGroup parse_cayley_group(const std::string& json_text);

/// Group homomorphism into GL(d) over a coefficient domain, stored as one
/// integer matrix per element. Permutation representations also keep the
/// permutation: column j of image(g) has its 1 in row permutation(g)[j].
class MatrixRep {
public:
    MatrixRep(FiniteGroup group, std::vector<IntMatrix> images,
        CoefficientDomain domain = CoefficientDomain::integers());

    const FiniteGroup& group() const noexcept { return group_; }
    std::size_t dimension() const noexcept { return dimension_; }
    const CoefficientDomain& domain() const noexcept { return domain_; }
    const IntMatrix& image(Element g) const { return images_[g]; }
    bool is_permutation() const noexcept { return !permutations_.empty(); }
    const std::vector<std::size_t>& permutation(Element g) const { return permutations_[g]; }

private:
    FiniteGroup group_;
    std::size_t dimension_;
    CoefficientDomain domain_;
    std::vector<IntMatrix> images_;
    std::vector<std::vector<std::size_t>> permutations_;
};

/// Left multiplication on the element basis: column h of image(g) is e_{gh}.
MatrixRep regular_representation(const FiniteGroup& g);
MatrixRep trivial_representation(const FiniteGroup& g);
/// Block-diagonal sum of two representations of the same group.
MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);

} // namespace talex
