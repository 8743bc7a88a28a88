#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "reps.hpp"
#include "talex/twisted.hpp"

using namespace talex;

namespace {

const auto ZZ = CoefficientDomain::integers();

std::vector<FiniteGroup> groups_up_to_12()
{
    std::vector<FiniteGroup> out;
    for (std::size_t n = 1; n <= 12; ++n)
        out.push_back(cyclic(n));
    out.push_back(dihedral(3));
    out.push_back(dihedral(5));
    out.push_back(dicyclic(3));
    out.push_back(alternating4());
    return out;
}

const std::vector<std::pair<std::string, KnotPresentation>>& simplified()
{
    static const auto out = [] {
        std::vector<std::pair<std::string, KnotPresentation>> v;
        for (const auto& [name, p] : fixture::table())
            v.emplace_back(name, simplify_presentation(p));
        return v;
    }();
    return out;
}

// Every tuple in G^m that kills the relators and generates G.
std::set<std::vector<Element>> brute_force(const KnotPresentation& p, const FiniteGroup& g)
{
    std::set<std::vector<Element>> out;
    const auto m = static_cast<std::size_t>(p.generator_count);
    std::vector<Element> images(m, 0);
    while (true) {
        bool ok = true;
        for (const auto& r : p.relators)
            ok = ok && evaluate_word(g, images, r) == g.identity();
        if (ok && generated_subgroup(g, images).size() == g.order())
            out.insert(images);
        std::size_t i = 0;
        while (i < m && ++images[i] == g.order())
            images[i++] = 0;
        if (i == m)
            break;
    }
    return out;
}

} // namespace

TEST_CASE("fox fundamental identity on 1000 random words")
{
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 1000; ++k) {
        const int m = 1 + k % 5;
        const auto w = fixture::random_word(rng, m, 16);
        GroupRingElement sum;
        for (int j = 1; j <= m; ++j) {
            auto x = GroupRingElement::word({ j });
            x.add({}, -1);
            sum += fox_derivative(w, j, m) * x;
        }
        auto expected = GroupRingElement::word(w);
        expected.add({}, -1);
        CHECK(sum == expected);
    }
}

TEST_CASE("dropped generator invariance, groups of order up to 12")
{
    const auto gf = CoefficientDomain::prime_field(101);
    std::size_t checked = 0;
    for (const auto& g : groups_up_to_12()) {
        const auto target = std::make_shared<const FiniteGroup>(g);
        const auto rep = regular_representation(g);
        for (const auto& [name, p] : simplified()) {
            for (const auto& h : find_meridional_surjections(p, g, true)) {
                const Homomorphism f { target, h.images };
                const auto base = wada_invariant(p, f, rep, gf).normalized;
                const auto exact = g.order() <= 6 ? wada_invariant(p, f, rep).normalized : RationalFunction();
                for (int j = 1; j < p.generator_count; ++j) {
                    CHECK_MESSAGE(wada_invariant(p, f, rep, gf, j).normalized == base, name, " ", g.name(), " ", j);
                    if (g.order() <= 6)
                        CHECK_MESSAGE(equal_up_to_unit(wada_invariant(p, f, rep, ZZ, j).normalized, exact), name, " ", g.name());
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("direct sum multiplicativity on the trefoil")
{
    const auto& p = fixture::knot("3_1");
    for (const auto& g : { dihedral(3), alternating4(), dicyclic(3) }) {
        const auto target = std::make_shared<const FiniteGroup>(g);
        const auto reg = regular_representation(g);
        const auto triv = trivial_representation(g);
        for (const auto& h : find_meridional_surjections(p, g, true)) {
            const Homomorphism f { target, h.images };
            for (const auto& [a, b] : { std::pair { &reg, &triv }, { &reg, &reg }, { &triv, &triv } }) {
                const auto whole = wada_invariant(p, f, direct_sum(*a, *b)).normalized;
                CHECK(equal_up_to_unit(whole, wada_invariant(p, f, *a).normalized * wada_invariant(p, f, *b).normalized));
            }
        }
    }
    const auto d3 = std::make_shared<const FiniteGroup>(dihedral(3));
    for (const auto& h : find_meridional_surjections(p, *d3, true)) {
        const Homomorphism f { d3, h.images };
        const auto sign = fixture::dihedral_sign(*d3, 3);
        const auto reg = regular_representation(*d3);
        CHECK(equal_up_to_unit(wada_invariant(p, f, direct_sum(sign, reg)).normalized,
            wada_invariant(p, f, sign).normalized * wada_invariant(p, f, reg).normalized));
    }
}

TEST_CASE("scalar twist shifts t on the trefoil")
{
    const auto& p = fixture::knot("3_1");
    for (const auto& left : { dihedral(3), alternating4() }) {
        const auto f = find_meridional_surjections(p, left, true).front();
        // c of order m in GF(q): (m, q, c)
        for (auto [m, q, c] : { std::array<std::int64_t, 3> { 2, 5, 4 }, { 3, 7, 2 }, { 4, 5, 2 }, { 2, 3, 2 } }) {
            const auto domain = CoefficientDomain::prime_field(static_cast<std::uint32_t>(q));
            const auto product = std::make_shared<const FiniteGroup>(direct_product(left, cyclic(static_cast<std::size_t>(m))));
            Homomorphism g { product, f.images };
            for (auto& x : g.images)
                x += left.order();
            const auto twisted = wada_invariant(p, g, fixture::twisted_regular(*product, left, c, domain), domain).normalized;
            const auto base = wada_invariant(p, f, regular_representation(left), domain).normalized;
            CHECK(equal_up_to_unit(twisted,
                RationalFunction(substitute_scale(base.numerator(), c), substitute_scale(base.denominator(), c))));
        }
        // c = -1 exactly
        const auto product = std::make_shared<const FiniteGroup>(direct_product(left, cyclic(2)));
        Homomorphism g { product, f.images };
        for (auto& x : g.images)
            x += left.order();
        const auto twisted = wada_invariant(p, g, fixture::twisted_regular(*product, left, -1, ZZ)).normalized;
        const auto base = wada_invariant(p, f, regular_representation(left)).normalized;
        CHECK(equal_up_to_unit(twisted,
            RationalFunction(substitute_scale(base.numerator(), -1), substitute_scale(base.denominator(), -1))));
    }
}

TEST_CASE("determinant against cofactor expansion, 500 random matrices")
{
    std::mt19937_64 rng(77);
    for (int k = 0; k < 500; ++k) {
        const auto n = static_cast<std::size_t>(k % 5);
        const auto domain = k % 3 == 0 ? CoefficientDomain::prime_field(k % 2 ? 3 : 7) : ZZ;
        const auto m = oracle::random_matrix(rng, n, domain);
        const auto expected = oracle::cofactor_determinant(m);
        CHECK(determinant(m) == expected);
        CHECK(determinant_serial(m) == expected);
    }
}

TEST_CASE("surjection search against brute force, groups of order up to 12")
{
    std::vector<FiniteGroup> groups = groups_up_to_12();
    groups.push_back(direct_product(cyclic(2), cyclic(2)));
    groups.push_back(direct_product(cyclic(2), cyclic(6)));
    groups.push_back(dihedral(4));
    groups.push_back(dihedral(6));
    groups.push_back(dicyclic(2));
    std::size_t compared = 0;
    for (const auto& g : groups)
        for (const auto& [name, p] : simplified()) {
            std::size_t maps = 1;
            for (int i = 0; i < p.generator_count; ++i)
                maps *= g.order();
            if (maps > 25'000)
                continue;
            std::set<std::vector<Element>> found;
            for (const auto& h : find_meridional_surjections(p, g))
                found.insert(h.images);
            CHECK_MESSAGE(found == brute_force(p, g), name, " ", g.name());
            ++compared;
        }
    CHECK(compared > 300);
}
