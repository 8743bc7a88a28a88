#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "talex/polynomial.hpp"

namespace talex {

/// Word in the free group: +j is x_j, -j is x_j^-1, j >= 1.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& w);
FreeWord inverse(const FreeWord& w);
FreeWord concat(const FreeWord& a, const FreeWord& b);
/// Free reduction followed by cancelling letters that are inverse around the
/// cyclic boundary.
FreeWord cyclic_reduce(const FreeWord& w);
/// Sum of the letter signs.
std::int64_t abelian_exponent(const FreeWord& w);

/// Element of the integral group ring of a free group: freely reduced words
/// with nonzero integer coefficients.
class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement word(const FreeWord& w, std::int64_t coefficient = 1);
    static GroupRingElement one() { return word({}); }

    const std::map<FreeWord, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add(const FreeWord& w, std::int64_t coefficient);

    GroupRingElement& operator+=(const GroupRingElement& rhs);
    GroupRingElement& operator-=(const GroupRingElement& rhs);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    std::string to_string() const;

private:
    std::map<FreeWord, std::int64_t> terms_;
};

/// Free derivative d w / d x_j; j must lie in 1..generator_count.
GroupRingElement fox_derivative(const FreeWord& w, int j, int generator_count);

/// Group presentation <x_1..x_m | r_1..r_n>. When meridional, every generator
/// is a meridian and every relator has exponent sum 0.
struct KnotPresentation {
    int generator_count = 1;
    std::vector<FreeWord> relators;
    bool meridional = true;

    /// Checks letter ranges and, when meridional, exponent sums.
    void validate() const;
    friend bool operator==(const KnotPresentation&, const KnotPresentation&) = default;
};

/// Planar diagram code. Crossing (i, j, k, l): i is the incoming and k the
/// outgoing under-edge, j and l the two over-edges. Edges are numbered
/// 1..2n along the orientation.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;

    void validate() const;
};

/// Wirtinger presentation: one generator per arc (arcs numbered by their
/// smallest edge), one relator per crossing, the last crossing's relator
/// dropped. With over-arc c, incoming under-arc a and outgoing under-arc b,
/// the relator is c a c^-1 b^-1 when the over strand runs from l to j and
/// c^-1 a c b^-1 otherwise. The empty code gives the unknot <x_1 | >.
KnotPresentation wirtinger_from_pd(const PDCode& pd);

/// Tietze reduction of a meridional presentation: repeatedly solves a relator
/// for a generator occurring in it exactly once and substitutes. The surviving
/// generators are original meridians, the deficiency is preserved, and no
/// relator grows past max_relator_length.
KnotPresentation simplify_presentation(const KnotPresentation& p, std::size_t max_relator_length = 1000);

/// Determinant of the Fox Jacobian with the last generator's column removed,
/// every generator sent to 1. Equals +-Delta(1), so +-1 for a knot.
Integer alexander_value_at_one(const KnotPresentation& p);

/// Orders knot names by crossing number, then index, then the raw string.
struct KnotNameLess {
    bool operator()(const std::string& a, const std::string& b) const;
};

using KnotTable = std::map<std::string, KnotPresentation, KnotNameLess>;

/// {"knots": [{"name": "3_1", "pd": [[...], ...]} or
///            {"name": ..., "generators": m, "relators": [[...], ...]}, ...]}
/// Each entry must pass the Delta(1) = +-1 check.
KnotTable parse_knot_table(const std::string& json_text);
KnotTable load_knot_table(const std::string& path);

} // namespace talex
