#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "talex/groups.hpp"
#include "talex/knots.hpp"

namespace talex {

/// Assignment of presentation generators to group elements that kills every
/// relator. images[j] is the image of x_{j+1}.
struct Homomorphism {
    std::shared_ptr<const FiniteGroup> target;
    std::vector<Element> images;

    /// Throws InvalidArgument when a relator does not map to the identity.
    void validate(const KnotPresentation& p) const;
};

/// Product of the images of the letters of w.
Element evaluate_word(const FiniteGroup& g, const std::vector<Element>& images, const FreeWord& w);

/// Subgroup generated by the images, sorted.
std::vector<Element> image_subgroup(const FiniteGroup& g, const std::vector<Element>& images);

struct SearchOptions {
    bool up_to_conjugacy = false;
    /// Maximum number of partial assignments visited before BudgetExceeded.
    std::uint64_t budget = 100'000'000;
};

/// All surjections sending every generator into one conjugacy class; only
/// classes whose normal closure is the whole group are tried. With
/// up_to_conjugacy, one homomorphism per orbit under simultaneous
/// conjugation is kept, namely the orbit's lexicographically smallest image
/// tuple. Output is sorted by image tuple.
std::vector<Homomorphism> find_meridional_surjections(const KnotPresentation& p, const FiniteGroup& g,
    const SearchOptions& options = {});

inline std::vector<Homomorphism> find_meridional_surjections(const KnotPresentation& p, const FiniteGroup& g,
    bool up_to_conjugacy)
{
    return find_meridional_surjections(p, g, SearchOptions { up_to_conjugacy });
}

} // namespace talex
