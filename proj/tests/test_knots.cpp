#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "talex/error.hpp"
#include "talex/knots.hpp"
#include "talex/twisted.hpp"

using namespace talex;

namespace {

LaurentPolynomial zz(std::initializer_list<long> c) { return LaurentPolynomial::from_ints(c); }

GroupRingElement word(const FreeWord& w, std::int64_t c = 1) { return GroupRingElement::word(w, c); }

GroupRingElement generator_minus_one(int j) { return word({ j }) - GroupRingElement::one(); }

} // namespace

TEST_CASE("free_reduce")
{
    CHECK(free_reduce({ 1, -1 }).empty());
    CHECK(free_reduce({ 1, 2, -2, -1 }).empty());
    CHECK(free_reduce({ 1, 2, -2, 3 }) == FreeWord { 1, 3 });
    CHECK(cyclic_reduce({ -2, 1, 3, 2 }) == FreeWord { 1, 3 });

    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        const auto w = fixture::random_word(rng, 3, 12);
        const auto r = free_reduce(w);
        CHECK(r.size() <= w.size());
        CHECK(free_reduce(r) == r);
        CHECK(abelian_exponent(r) == abelian_exponent(w));
    }
}

TEST_CASE("abelian_exponent")
{
    CHECK(abelian_exponent({ 1, 2, -1 }) == 1);
    CHECK(abelian_exponent({ 1, 3, -2, -3 }) == 0);
    CHECK(abelian_exponent({}) == 0);
}

TEST_CASE("fox derivative examples")
{
    CHECK(fox_derivative({ 1 }, 1, 1) == GroupRingElement::one());
    CHECK(fox_derivative({ -1 }, 1, 1) == word({ -1 }, -1));
    CHECK(fox_derivative({ 1, 2, -1 }, 1, 2) == GroupRingElement::one() - word({ 1, 2, -1 }));
    CHECK(fox_derivative({ 1, 2, -1 }, 2, 2) == word({ 1 }));
    CHECK(fox_derivative({ 2, 2 }, 1, 2).is_zero());
    CHECK_THROWS_AS(fox_derivative({ 1 }, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(fox_derivative({ 1 }, 2, 1), InvalidArgument);
    // unreduced input is reduced first
    CHECK(fox_derivative({ 1, 2, -2 }, 2, 2).is_zero());
}

TEST_CASE("fundamental identity and product rule on random words")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        const auto u = fixture::random_word(rng, 4, 10);
        const auto v = fixture::random_word(rng, 4, 10);
        GroupRingElement sum;
        for (int j = 1; j <= 4; ++j) {
            sum += fox_derivative(u, j, 4) * generator_minus_one(j);
            CHECK(fox_derivative(concat(u, v), j, 4) == fox_derivative(u, j, 4) + word(u) * fox_derivative(v, j, 4));
        }
        CHECK(sum == word(u) - GroupRingElement::one());
    }
}

TEST_CASE("fundamental identity on bundled relators")
{
    for (const auto& [name, p] : fixture::table())
        for (const auto& r : p.relators) {
            GroupRingElement sum;
            for (int j = 1; j <= p.generator_count; ++j)
                sum += fox_derivative(r, j, p.generator_count) * generator_minus_one(j);
            CHECK_MESSAGE(sum == word(r) - GroupRingElement::one(), name);
        }
}

TEST_CASE("wirtinger presentation of the trefoil")
{
    const auto p = wirtinger_from_pd({ { { 1, 4, 2, 5 }, { 3, 6, 4, 1 }, { 5, 2, 6, 3 } } });
    CHECK(p.generator_count == 3);
    CHECK(p.relators.size() == 2);
    CHECK(p.meridional);
    for (const auto& r : p.relators) {
        CHECK(r.size() == 4);
        CHECK(abelian_exponent(r) == 0);
    }
    CHECK(alexander_polynomial(p) == zz({ 1, -1, 1 }));
}

TEST_CASE("small diagrams")
{
    CHECK(alexander_polynomial(wirtinger_from_pd({ { { 1, 2, 2, 1 } } })) == zz({ 1 }));
    CHECK(alexander_polynomial(wirtinger_from_pd({ { { 2, 1, 1, 2 } } })) == zz({ 1 }));
    const auto unknot = wirtinger_from_pd({});
    CHECK(unknot.generator_count == 1);
    CHECK(unknot.relators.empty());
    CHECK(alexander_polynomial(unknot) == zz({ 1 }));
    // figure eight, KnotInfo diagram
    const auto fig8 = wirtinger_from_pd({ { { 4, 2, 5, 1 }, { 8, 6, 1, 5 }, { 6, 3, 7, 4 }, { 2, 7, 3, 8 } } });
    CHECK(fig8.generator_count == 4);
    CHECK(alexander_polynomial(fig8) == zz({ 1, -3, 1 }));
}

TEST_CASE("hand-written presentations")
{
    // <x, y | xyx = yxy>
    KnotPresentation trefoil { 2, { { 1, 2, 1, -2, -1, -2 } } };
    CHECK(alexander_polynomial(trefoil) == zz({ 1, -1, 1 }));
    // figure eight: y w = w x with w = x^-1 y x y^-1
    KnotPresentation fig8 { 2, { { 2, -1, 2, 1, -2, -1, 2, -1, -2, 1 } } };
    CHECK(abelian_exponent(fig8.relators[0]) == 0);
    CHECK(equal_up_to_unit(RationalFunction(alexander_polynomial(fig8)), RationalFunction(zz({ 1, -3, 1 }))));
}

TEST_CASE("pd validation")
{
    CHECK_THROWS_AS(wirtinger_from_pd({ { { 1, 4, 2, 5 }, { 3, 6, 4, 1 }, { 5, 2, 6, 7 } } }), InvalidArgument);
    CHECK_THROWS_AS(wirtinger_from_pd({ { { 1, 4, 2, 5 }, { 3, 6, 4, 1 }, { 5, 2, 6, 6 } } }), InvalidArgument);
    CHECK_THROWS_AS(wirtinger_from_pd({ { { 0, 1, 1, 2 } } }), InvalidArgument);
}

TEST_CASE("presentation validation")
{
    CHECK_THROWS_AS((KnotPresentation { 2, { { 1, 1, -2 } } }.validate()), InvalidArgument);
    CHECK_THROWS_AS((KnotPresentation { 2, { { 1, 3, -1, -3 } } }.validate()), InvalidArgument);
    CHECK_NOTHROW((KnotPresentation { 2, { { 1, 1, -2 } }, false }.validate()));
}

TEST_CASE("bundled table")
{
    const auto& t = fixture::table();
    for (const char* name : { "3_1", "4_1", "5_2", "6_1", "7_4", "8_18" })
        CHECK_MESSAGE(t.count(name) == 1, name);
    CHECK(alexander_polynomial(fixture::knot("3_1")) == zz({ 1, -1, 1 }));
    const auto d61 = alexander_polynomial(fixture::knot("6_1"));
    CHECK(d61.evaluate(1) * d61.evaluate(1) == 1);
    CHECK(d61.evaluate(2) % 7 == 0);
    for (const auto& [name, p] : t) {
        for (const auto& r : p.relators)
            CHECK(abelian_exponent(r) == 0);
        const auto delta = alexander_polynomial(p);
        CHECK_MESSAGE(delta.evaluate(1) * delta.evaluate(1) == 1, name);
        CHECK_MESSAGE(delta == fixture::knotinfo_alexander().at(name), name);
    }
    // names sort by crossing number, then index
    std::vector<std::string> names;
    for (const auto& entry : t)
        names.push_back(entry.first);
    CHECK(names.front() == "0_1");
    CHECK(names[1] == "3_1");
    CHECK(std::find(names.begin(), names.end(), "10_103") > std::find(names.begin(), names.end(), "9_46"));
}

TEST_CASE("knot table parsing")
{
    CHECK(parse_knot_table("").empty());
    CHECK(parse_knot_table(R"({"knots": []})").empty());
    const auto t = parse_knot_table(
        R"({"knots": [{"name": "3_1", "generators": 2, "relators": [[1, 2, 1, -2, -1, -2]]},
                      {"name": "4_1", "pd": [[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]}]})");
    CHECK(t.size() == 2);
    CHECK(t.at("3_1").generator_count == 2);
    CHECK_THROWS_AS(parse_knot_table("{"), ParseError);
    CHECK_THROWS_AS(parse_knot_table(R"({"knots": [{"name": "x"}]})"), ParseError);
    // two-component link: Delta(1) = 0
    CHECK_THROWS_AS(parse_knot_table(R"({"knots": [{"name": "L", "generators": 2, "relators": [[1, 2, -1, -2]]}]})"),
        ParseError);
    try {
        parse_knot_table(R"({"knots": [{"name": "ok", "pd": []}, {"name": "bad", "pd": [[1,2,3,4]]}]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("bad") != std::string::npos);
        CHECK(what.find('1') != std::string::npos);
    }
    CHECK_THROWS_AS(load_knot_table("/nonexistent/knots.json"), ParseError);
}

TEST_CASE("simplification keeps the Alexander polynomial")
{
    for (const auto& [name, p] : fixture::table()) {
        const auto s = simplify_presentation(p);
        CHECK(s.generator_count >= 1);
        CHECK(s.relators.size() + 1 == static_cast<std::size_t>(s.generator_count));
        CHECK(s.generator_count <= p.generator_count);
        CHECK_MESSAGE(alexander_polynomial(s) == alexander_polynomial(p), name);
    }
    CHECK(simplify_presentation(fixture::knot("3_1")).generator_count == 2);
}
