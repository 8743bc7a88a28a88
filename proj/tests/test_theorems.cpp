#include <doctest.h>

#include <array>

#include "binomial_matrices.hpp"
#include "fixtures.hpp"
#include "talex/error.hpp"
#include "talex/roots.hpp"
#include "talex/theorems.hpp"
#include "talex/twisted.hpp"

using namespace talex;

namespace {

const auto ZZ = CoefficientDomain::integers();

LaurentPolynomial zz(std::initializer_list<long> c) { return LaurentPolynomial::from_ints(c); }

LaurentPolynomial gf(std::uint32_t p, std::initializer_list<long> c)
{
    return LaurentPolynomial::from_ints(CoefficientDomain::prime_field(p), c);
}

RationalFunction frac(LaurentPolynomial n, LaurentPolynomial d) { return RationalFunction(n, d); }

// Polynomials over Z[w], w^2 = -1 - w (cube roots) or w^2 = -1 (i), as
// coefficient pairs x + y w.
struct Quadratic {
    long square_constant; // w^2 = square_constant + square_linear * w
    long square_linear;
};
using QPoly = std::vector<std::array<long, 2>>;

QPoly q_multiply(const QPoly& a, const QPoly& b, Quadratic rule)
{
    QPoly out(a.size() + b.size() - 1, { 0, 0 });
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            const long x = a[i][0] * b[j][0];
            const long cross = a[i][0] * b[j][1] + a[i][1] * b[j][0];
            const long ww = a[i][1] * b[j][1];
            out[i + j][0] += x + ww * rule.square_constant;
            out[i + j][1] += cross + ww * rule.square_linear;
        }
    return out;
}

// f(u t) with u = w^e for e in {1, 2}, f integer, ascending coefficients from t^0.
QPoly q_scale(const LaurentPolynomial& f, std::array<long, 2> u, Quadratic rule)
{
    QPoly out;
    std::array<long, 2> power { 1, 0 };
    for (std::int64_t e = 0; e <= f.max_exponent(); ++e) {
        const long c = f.coefficient(e).get_si();
        out.push_back({ c * power[0], c * power[1] });
        power = q_multiply({ power }, { u }, rule)[0];
    }
    return out;
}

LaurentPolynomial q_to_integer(const QPoly& f)
{
    std::vector<Integer> c;
    for (const auto& x : f) {
        REQUIRE(x[1] == 0);
        c.emplace_back(x[0]);
    }
    return LaurentPolynomial(ZZ, 0, c);
}

} // namespace

TEST_CASE("roots of unity mod p")
{
    CHECK(mth_roots_of_unity_mod_p(3, 7) == std::vector<std::uint32_t> { 1, 2, 4 });
    CHECK(mth_roots_of_unity_mod_p(2, 5) == std::vector<std::uint32_t> { 1, 4 });
    CHECK(mth_roots_of_unity_mod_p(1, 11) == std::vector<std::uint32_t> { 1 });
    CHECK(mth_roots_of_unity_mod_p(4, 5) == std::vector<std::uint32_t> { 1, 2, 3, 4 });
    CHECK_THROWS_AS(mth_roots_of_unity_mod_p(3, 5), InvalidArgument);
    CHECK_THROWS_AS(mth_roots_of_unity_mod_p(2, 9), NotPrime);
}

TEST_CASE("case validation")
{
    CHECK_NOTHROW(TheoremCase::dihedral(3, 2).validate());
    CHECK_THROWS_AS(TheoremCase::dihedral(9, 1).validate(), NotPrime);
    CHECK_THROWS_AS(TheoremCase::dihedral(2, 1).validate(), NotPrime);
    CHECK_THROWS_AS(TheoremCase::dicyclic(4, 1).validate(), NotPrime);
    CHECK_THROWS_AS(TheoremCase::metacyclic(3, 7, 3).validate(), InvalidArgument);
    CHECK_THROWS_AS(TheoremCase::metacyclic(3, 7, 1).validate(), InvalidArgument);
    CHECK_THROWS_AS(TheoremCase::metacyclic(3, 5, 2).validate(), InvalidArgument);
    CHECK_THROWS_AS(TheoremCase::cyclic(0).validate(), InvalidArgument);
    CHECK_THROWS_AS((TheoremCase { CaseKind::dihedral, { 3 }, 3u }.validate()), InvalidArgument);
    CHECK(TheoremCase::dihedral(3, 2).group_name() == "D9");
    CHECK(TheoremCase::metacyclic(3, 7, 2).group_name() == "G(3,7|2)");
    CHECK(TheoremCase::dihedral(3, 2).modulus == 3u);
    CHECK(!TheoremCase::cyclic(4).modulus);
    CHECK(parse_case_kind("d3c3") == CaseKind::d3c3);
    CHECK_THROWS_AS(parse_case_kind("nope"), InvalidArgument);
    for (const auto& c : order_below_24_cases())
        CHECK(c.group().order() < 24);
    CHECK(order_below_24_cases().size() == 35);
}

TEST_CASE("right-hand sides")
{
    const auto trefoil = zz({ 1, -1, 1 });
    // ((t+1)^2 (t-1)^2 / ((t+1)(t-1)))^9 mod 3
    const auto expected = frac(gf(3, { 1, 1 }).pow(18) * gf(3, { -1, 1 }).pow(18), gf(3, { 1, 1 }).pow(9) * gf(3, { -1, 1 }).pow(9));
    CHECK(equal_up_to_unit(rhs(TheoremCase::dihedral(3, 2), trefoil), expected));
    CHECK(rhs(TheoremCase::dihedral(3, 2), trefoil).domain() == CoefficientDomain::prime_field(3));

    for (const auto& [name, delta] : fixture::knotinfo_alexander()) {
        CHECK(equal_up_to_unit(rhs(TheoremCase::cyclic(1), delta), frac(delta, zz({ -1, 1 }))));
        // n = 2: Delta(t) Delta(-t) / ((t-1)(t+1))
        CHECK(equal_up_to_unit(rhs(TheoremCase::cyclic(2), delta),
            frac(delta * substitute_scale(delta, -1), zz({ -1, 0, 1 }))));
    }
}

TEST_CASE("orbit products against Z[w] arithmetic")
{
    const Quadratic cube { -1, -1 };   // w^2 = -1 - w
    const Quadratic fourth { -1, 0 };  // i^2 = -1
    for (const auto& [name, delta] : fixture::knotinfo_alexander()) {
        // Delta(w t) Delta(w^2 t)
        const auto w_part = q_to_integer(q_multiply(q_scale(delta, { 0, 1 }, cube), q_scale(delta, { -1, -1 }, cube), cube));
        CHECK_MESSAGE(equal_up_to_unit(RationalFunction(delta * w_part), RationalFunction(product_over_roots_of_unity(delta, 3))), name);
        // Delta(i t) Delta(-i t)
        const auto i_part = q_to_integer(q_multiply(q_scale(delta, { 0, 1 }, fourth), q_scale(delta, { 0, -1 }, fourth), fourth));
        CHECK(equal_up_to_unit(RationalFunction(delta * substitute_scale(delta, -1) * i_part),
            RationalFunction(product_over_roots_of_unity(delta, 4))));

        // dicyclic: the bracket with i, -i factors, raised to q, mod p
        for (auto [p, n] : { std::pair { 3, 1 }, { 5, 1 } }) {
            const auto bracket = frac(delta * substitute_scale(delta, -1) * i_part, zz({ -1, 0, 0, 0, 1 }));
            auto expected = reduce_mod(bracket, static_cast<std::uint32_t>(p)).pow(static_cast<unsigned>(p));
            CHECK(equal_up_to_unit(rhs(TheoremCase::dicyclic(p, n), delta), expected));
        }
        // a4
        const auto a4 = reduce_mod(frac(delta * w_part, zz({ -1, 0, 0, 1 })), 2).pow(4);
        CHECK(equal_up_to_unit(rhs(TheoremCase::a4(), delta), a4));

        // metacyclic G(3,7|2): the regrouped display
        const auto d7 = reduce_mod(delta, 7);
        auto factor = [&](long k) {
            return frac(substitute_scale(d7, k), LaurentPolynomial::monomial(d7.domain(), k, 1) - gf(7, { 1 }));
        };
        const auto regrouped = factor(1).pow(7) * factor(2).pow(6) * factor(4).pow(6)
            * reduce_mod(frac(w_part, zz({ 1, 1, 1 })), 7);
        const auto c372 = TheoremCase::metacyclic(3, 7, 2);
        CHECK(equal_up_to_unit(rhs(c372, delta), regrouped));
        CHECK(equal_up_to_unit(metacyclic_rhs_regrouped(c372, delta), rhs(c372, delta)));
        const auto c452 = TheoremCase::metacyclic(4, 5, 2);
        CHECK(equal_up_to_unit(metacyclic_rhs_regrouped(c452, delta), rhs(c452, delta)));
    }
}

TEST_CASE("binomial matrices")
{
    const auto a32 = fixture::a_3_2();
    const auto ta = fixture::tau_a_3_2();
    const auto tb = fixture::tau_b_3_2();
    CHECK(a_matrix(3, 2) == a32);
    CHECK(tau_a(3, 2) == ta);
    CHECK(tau_b(3, 2) == tb);
    for (std::uint32_t p : { 3u, 5u, 7u }) {
        const auto a = a_matrix(p, 1);
        CHECK(a(0, 0) == 1);
        for (std::size_t j = 1; j < p; ++j)
            CHECK(a(0, j) == 0);
        CHECK(tau_a(p, 1).is_upper_triangular());
        CHECK(tau_b(p, 1).is_upper_triangular());
        for (std::size_t i = 0; i < p; ++i) {
            CHECK(tau_a(p, 1)(i, i) == 1);
            CHECK(tau_b(p, 1)(i, i) == (i % 2 == 0 ? 1 : static_cast<std::int64_t>(p) - 1));
        }
    }
}

TEST_CASE("conjugating matrices")
{
    for (auto [p, n] : { std::pair { 3u, 1u }, { 3u, 2u }, { 5u, 1u }, { 7u, 1u } }) {
        const auto q = static_cast<std::uint32_t>(a_matrix(p, n).size());
        const auto a = a_matrix(p, n);
        const auto inverse = a.inverse_mod(p);
        REQUIRE(inverse);
        CHECK(inverse->multiply_mod(dihedral_rho_bar_a(q), p).multiply_mod(a, p) == tau_a(p, n));
        CHECK(inverse->multiply_mod(dihedral_rho_bar_b(q), p).multiply_mod(a, p) == tau_b(p, n));
        // every reflection conjugates to an upper triangular matrix with alternating diagonal
        for (std::uint32_t s = 0; s < q; ++s) {
            IntMatrix reflection = dihedral_rho_bar_b(q);
            for (std::uint32_t k = 0; k < s; ++k)
                reflection = dihedral_rho_bar_a(q) * reflection;
            const auto t = inverse->multiply_mod(reflection, p).multiply_mod(a, p);
            CHECK(t.is_upper_triangular());
            for (std::size_t i = 0; i < q; ++i)
                CHECK(t(i, i) == (i % 2 == 0 ? 1 : static_cast<std::int64_t>(p) - 1));
        }
    }
    for (auto [m, p, k] : { std::array { 3u, 7u, 2u }, { 2u, 5u, 4u } }) {
        const auto a = a_matrix(p, 1);
        const auto t = a.inverse_mod(p)->multiply_mod(metacyclic_rho_bar_b(p, k), p).multiply_mod(a, p);
        CHECK(t.is_upper_triangular());
        std::int64_t power = 1;
        for (std::size_t i = 0; i < p; ++i) {
            CHECK(t(i, i) == power);
            power = power * k % p;
        }
        CHECK(metacyclic_rho_bar_b(p, k).is_permutation());
        (void)m;
    }
}

TEST_CASE("binomial identities")
{
    CHECK(identities::lucas(3, 27));
    CHECK(identities::lucas(2, 12));
    CHECK(identities::pascal(40));
    CHECK(identities::vandermonde(20));
    CHECK(identities::euler_finite_difference(20));
    for (auto [p, n] : { std::pair { 2u, 1u }, { 3u, 1u }, { 3u, 2u }, { 5u, 1u }, { 7u, 1u } }) {
        CHECK(identities::dihedral_lemma_i(p, n));
        CHECK(identities::dihedral_lemma_ii(p, n));
        CHECK(identities::dihedral_lemma_iii(p, n));
    }
    for (std::uint32_t p : { 3u, 5u, 7u }) {
        CHECK(identities::metacyclic_lemma_i(p));
        CHECK(identities::metacyclic_lemma_ii(p));
        CHECK(identities::metacyclic_lemma_iii(p));
    }
    // C(10, 4) = 210 = 0 mod 3, and C(1,0) C(0,1) C(1,1) = 0
    CHECK(210 % 3 == 0);
    // lemma (ii) for p = 5 by direct product
    const auto a = a_matrix(5, 1);
    auto binomial = [](long n, long k) {
        long c = 1;
        for (long i = 0; i < k; ++i)
            c = c * (n - i) / (i + 1);
        return k < 0 || k > n ? 0 : c;
    };
    IntMatrix m(5);
    // entry (i, j) = C(p - j, p - i), 1-based
    for (long i = 1; i <= 5; ++i)
        for (long j = 1; j <= 5; ++j)
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = binomial(5 - j, 5 - i) % 5;
    CHECK(a.multiply_mod(m, 5) == IntMatrix::identity(5));
}

TEST_CASE("congruence verdicts")
{
    const auto d3 = verify_congruence(fixture::knot("3_1"), "3_1", TheoremCase::dihedral(3, 1));
    CHECK(d3.surjections_found == 1);
    CHECK(d3.all_true());
    CHECK(d3.group == "D3");

    const auto none = verify_congruence(fixture::knot("4_1"), "4_1", TheoremCase::dihedral(3, 1));
    CHECK(none.vacuous());
    CHECK(none.verdicts.empty());

    for (const auto& [name, p] : fixture::table()) {
        const auto r = verify_congruence(simplify_presentation(p), name, TheoremCase::cyclic(2));
        CHECK(r.surjections_found == 1);
        CHECK_MESSAGE(r.all_true(), name);
        CHECK(r.lhs[0].domain().is_integers());
    }

    struct Expect {
        const char* knot;
        TheoremCase theorem;
    };
    for (const auto& [knot, theorem] : { Expect { "6_1", TheoremCase::metacyclic(3, 7, 2) },
             Expect { "6_1", TheoremCase::metacyclic(4, 5, 2) }, Expect { "3_1", TheoremCase::dicyclic(3, 1) },
             Expect { "4_1", TheoremCase::dicyclic(5, 1) }, Expect { "3_1", TheoremCase::a4() },
             Expect { "8_18", TheoremCase::d3c3() }, Expect { "8_18", TheoremCase::conjecture(3) },
             Expect { "3_1", TheoremCase::dihedral_times_cyclic(3, 1, 3) }, Expect { "7_4", TheoremCase::dihedral(3, 1) } }) {
        const auto r = verify_congruence(simplify_presentation(fixture::knot(knot)), knot, theorem);
        CHECK_MESSAGE(r.surjections_found > 0, knot, " ", r.group);
        CHECK_MESSAGE(r.all_true(), knot, " ", r.group);
    }
}

TEST_CASE("conjecture at p = 3 matches the d3c3 case")
{
    const auto p = simplify_presentation(fixture::knot("8_18"));
    const auto a = verify_congruence(p, "8_18", TheoremCase::conjecture(3));
    const auto b = verify_congruence(p, "8_18", TheoremCase::d3c3());
    REQUIRE(a.lhs.size() == b.lhs.size());
    for (std::size_t i = 0; i < a.lhs.size(); ++i)
        CHECK(a.lhs[i] == b.lhs[i]);
    CHECK(a.rhs == b.rhs);
}

TEST_CASE("trefoil onto D3 x C3, exact")
{
    // The exact invariant factors as (t+1)^3 (t^2-t+1)^3 (t-1)^3 (t^2+t+1)^3.
    const auto& p = fixture::knot("3_1");
    const auto g = std::make_shared<const FiniteGroup>(direct_product(dihedral(3), cyclic(3)));
    const auto homs = find_meridional_surjections(p, *g, true);
    // the C3 coordinate of the meridian is c or c^2
    REQUIRE(homs.size() == 2);
    const auto expected = (zz({ 1, 1 }) * zz({ 1, -1, 1 }) * zz({ -1, 1 }) * zz({ 1, 1, 1 })).pow(3);
    for (const auto& f : homs)
        CHECK(equal_up_to_unit(wada_invariant(p, f, regular_representation(*g)).normalized, RationalFunction(expected)));
}

TEST_CASE("trefoil has no D9 quotient")
{
    // Reflections x, y with xyx = yxy force (xy)^3 = 1, so the image is at most D3.
    CHECK(find_meridional_surjections(fixture::knot("3_1"), dihedral(9)).empty());
    const auto p = simplify_presentation(fixture::knot("3_1"));
    REQUIRE(p.generator_count == 2);
    const auto d9 = dihedral(9);
    for (Element x = 0; x < d9.order(); ++x)
        for (Element y = 0; y < d9.order(); ++y) {
            const std::vector<Element> images { x, y };
            if (evaluate_word(d9, images, p.relators[0]) == d9.identity())
                CHECK(generated_subgroup(d9, images).size() < d9.order());
        }
    const auto r = verify_congruence(fixture::knot("3_1"), "3_1", TheoremCase::dihedral(3, 2));
    CHECK(r.vacuous());
}

TEST_CASE("verdict JSON")
{
    const auto r = verify_congruence(fixture::knot("3_1"), "3_1", TheoremCase::dihedral(3, 1));
    const auto j = r.to_json();
    for (const char* key : { "knot", "group", "parameters", "surjections_found", "verdicts", "lhs", "rhs", "modulus", "elapsed_ms" })
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["modulus"] == 3);
    CHECK(j["parameters"] == nlohmann::json::array({ 3, 1 }));
    const auto cyclic = verify_congruence(fixture::knot("3_1"), "3_1", TheoremCase::cyclic(3)).to_json();
    CHECK(cyclic["modulus"].is_null());
}
