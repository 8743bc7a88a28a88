#include "talex/theorems.hpp"

#include <chrono>
#include <exception>

#include "talex/error.hpp"
#include "talex/report.hpp"
#include "talex/roots.hpp"
#include "talex/twisted.hpp"

namespace talex {

namespace {

    const std::pair<CaseKind, const char*> kCaseNames[] = {
        { CaseKind::cyclic, "cyclic" },
        { CaseKind::dihedral, "dihedral" },
        { CaseKind::dihedral_times_cyclic, "dihedral_times_cyclic" },
        { CaseKind::metacyclic, "metacyclic" },
        { CaseKind::dicyclic, "dicyclic" },
        { CaseKind::a4, "a4" },
        { CaseKind::d3c3, "d3c3" },
        { CaseKind::conjecture, "conjecture" },
    };

    std::int64_t ipow(std::int64_t base, std::int64_t e)
    {
        std::int64_t out = 1;
        while (e-- > 0)
            out *= base;
        return out;
    }

    void require_odd_prime(std::int64_t p)
    {
        if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
            throw NotPrime(static_cast<std::uint64_t>(p < 0 ? 0 : p));
    }

    void require_positive(std::int64_t x, const char* what)
    {
        if (x < 1)
            throw InvalidArgument(std::string(what) + " must be positive");
    }

    Integer binomial(std::int64_t n, std::int64_t k)
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        Integer out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return out;
    }

    std::int64_t binomial_mod(std::int64_t n, std::int64_t k, std::uint32_t p)
    {
        Integer b = binomial(n, k) % p;
        return b.get_si();
    }

    // C(i, j) mod p through base-p digits.
    std::int64_t lucas_binomial(std::uint64_t i, std::uint64_t j, std::uint32_t p)
    {
        std::int64_t out = 1;
        while ((i > 0 || j > 0) && out != 0) {
            out = out * binomial_mod(static_cast<std::int64_t>(i % p), static_cast<std::int64_t>(j % p), p) % p;
            i /= p;
            j /= p;
        }
        return out;
    }

    const CoefficientDomain ZZ = CoefficientDomain::integers();

    LaurentPolynomial t_minus(const CoefficientDomain& d, std::int64_t c)
    {
        // c t - 1
        return LaurentPolynomial::monomial(d, Integer(static_cast<long>(c)), 1) - LaurentPolynomial::constant(d, 1);
    }

    // prod over all n-th roots of unity a of Delta(c a t) / (c a t - 1), over the integers.
    RationalFunction orbit(const LaurentPolynomial& delta, unsigned n, std::int64_t c = 1)
    {
        return rational_normalize(RationalFunction(product_over_roots_of_unity(substitute_scale(delta, c), n),
            product_over_roots_of_unity(t_minus(ZZ, c), n)));
    }

    RationalFunction power(const RationalFunction& r, std::int64_t e) { return r.pow(static_cast<unsigned>(e)); }

    RationalFunction scaled_factor(const LaurentPolynomial& delta_mod_p, std::uint32_t k)
    {
        const auto& d = delta_mod_p.domain();
        return RationalFunction(substitute_scale(delta_mod_p, k), t_minus(d, k));
    }

} // namespace

std::string to_string(CaseKind kind)
{
    for (const auto& [k, name] : kCaseNames)
        if (k == kind)
            return name;
    return "?";
}

CaseKind parse_case_kind(const std::string& name)
{
    for (const auto& [k, n] : kCaseNames)
        if (name == n)
            return k;
    throw InvalidArgument("unknown case '" + name
        + "'; expected cyclic, dihedral, dihedral_times_cyclic, metacyclic, dicyclic, a4, d3c3 or conjecture");
}

TheoremCase TheoremCase::cyclic(std::int64_t n) { return { CaseKind::cyclic, { n }, std::nullopt }; }

TheoremCase TheoremCase::dihedral(std::int64_t p, std::int64_t n)
{
    return { CaseKind::dihedral, { p, n }, static_cast<std::uint32_t>(p) };
}

TheoremCase TheoremCase::dihedral_times_cyclic(std::int64_t p, std::int64_t n, std::int64_t m)
{
    return { CaseKind::dihedral_times_cyclic, { p, n, m }, static_cast<std::uint32_t>(p) };
}

TheoremCase TheoremCase::metacyclic(std::int64_t m, std::int64_t p, std::int64_t k)
{
    return { CaseKind::metacyclic, { m, p, k }, static_cast<std::uint32_t>(p) };
}

TheoremCase TheoremCase::dicyclic(std::int64_t p, std::int64_t n)
{
    return { CaseKind::dicyclic, { p, n }, static_cast<std::uint32_t>(p) };
}

TheoremCase TheoremCase::a4() { return { CaseKind::a4, {}, 2u }; }

TheoremCase TheoremCase::d3c3() { return { CaseKind::d3c3, {}, 3u }; }

TheoremCase TheoremCase::conjecture(std::int64_t p)
{
    return { CaseKind::conjecture, { p }, static_cast<std::uint32_t>(p) };
}

void TheoremCase::validate() const
{
    static const std::size_t arity[] = { 1, 2, 3, 3, 2, 0, 0, 1 };
    if (parameters.size() != arity[static_cast<int>(kind)])
        throw InvalidArgument(to_string(kind) + " takes " + std::to_string(arity[static_cast<int>(kind)])
            + " parameters, got " + std::to_string(parameters.size()));
    const auto& a = parameters;
    switch (kind) {
    case CaseKind::cyclic:
        require_positive(a[0], "n");
        break;
    case CaseKind::dihedral:
    case CaseKind::dicyclic:
        require_odd_prime(a[0]);
        require_positive(a[1], "n");
        if (ipow(a[0], a[1]) > 1000)
            throw InvalidArgument("q = p^n too large");
        break;
    case CaseKind::dihedral_times_cyclic:
        require_odd_prime(a[0]);
        require_positive(a[1], "n");
        require_positive(a[2], "m");
        if (ipow(a[0], a[1]) * a[2] > 1000)
            throw InvalidArgument("q m too large");
        break;
    case CaseKind::metacyclic: {
        require_odd_prime(a[1]);
        if (a[0] < 2 || (a[1] - 1) % a[0] != 0)
            throw InvalidArgument("m must be at least 2 and divide p - 1");
        const auto p = static_cast<std::uint64_t>(a[1]);
        const auto k = static_cast<std::uint64_t>(((a[2] % a[1]) + a[1]) % a[1]);
        bool primitive = power_mod(k, static_cast<std::uint64_t>(a[0]), p) == 1;
        for (std::int64_t d = 1; d < a[0] && primitive; ++d)
            primitive = power_mod(k, static_cast<std::uint64_t>(d), p) != 1;
        if (!primitive)
            throw InvalidArgument("k is not a primitive m-th root of unity mod p");
        break;
    }
    case CaseKind::conjecture:
        require_odd_prime(a[0]);
        if (a[0] > 31)
            throw InvalidArgument("p too large");
        break;
    case CaseKind::a4:
    case CaseKind::d3c3:
        break;
    }
    if (modulus) {
        if (!is_prime(*modulus))
            throw NotPrime(*modulus);
        if (kind != CaseKind::cyclic && *modulus != TheoremCase { kind, parameters, std::nullopt }.natural_modulus())
            throw InvalidArgument("the " + to_string(kind) + " formula holds mod "
                + std::to_string(TheoremCase { kind, parameters, std::nullopt }.natural_modulus()) + " only");
    } else if (kind != CaseKind::cyclic) {
        throw InvalidArgument(to_string(kind) + " needs its modulus");
    }
}

std::uint32_t TheoremCase::natural_modulus() const
{
    switch (kind) {
    case CaseKind::cyclic:
        return 0;
    case CaseKind::a4:
        return 2;
    case CaseKind::d3c3:
        return 3;
    case CaseKind::metacyclic:
        return static_cast<std::uint32_t>(parameters.at(1));
    default:
        return static_cast<std::uint32_t>(parameters.at(0));
    }
}

FiniteGroup TheoremCase::group() const
{
    validate();
    const auto& a = parameters;
    switch (kind) {
    case CaseKind::cyclic:
        return talex::cyclic(static_cast<std::size_t>(a[0]));
    case CaseKind::dihedral:
        return talex::dihedral(static_cast<std::size_t>(ipow(a[0], a[1])));
    case CaseKind::dihedral_times_cyclic:
        return direct_product(
            talex::dihedral(static_cast<std::size_t>(ipow(a[0], a[1]))), talex::cyclic(static_cast<std::size_t>(a[2])));
    case CaseKind::metacyclic:
        return talex::metacyclic(static_cast<std::size_t>(a[0]), static_cast<std::uint32_t>(a[1]),
            static_cast<std::uint32_t>(((a[2] % a[1]) + a[1]) % a[1]));
    case CaseKind::dicyclic:
        return talex::dicyclic(static_cast<std::size_t>(ipow(a[0], a[1])));
    case CaseKind::a4:
        return alternating4();
    case CaseKind::d3c3:
        return d3_semidirect_c3();
    case CaseKind::conjecture:
        return dp_semidirect_cp(static_cast<std::uint32_t>(a[0]));
    }
    throw InvalidArgument("unknown case");
}

std::string TheoremCase::group_name() const { return group().name(); }

std::vector<std::uint32_t> mth_roots_of_unity_mod_p(std::uint32_t m, std::uint32_t p)
{
    if (!is_prime(p))
        throw NotPrime(p);
    if (m == 0 || (p - 1) % m != 0)
        throw InvalidArgument("m must divide p - 1");
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 1; k < p; ++k)
        if (power_mod(k, m, p) == 1)
            out.push_back(k);
    return out;
}

RationalFunction rhs(const TheoremCase& c, const LaurentPolynomial& delta)
{
    c.validate();
    if (!delta.domain().is_integers())
        throw DomainMismatch("rhs needs an integer Alexander polynomial");
    const auto& a = c.parameters;
    switch (c.kind) {
    case CaseKind::cyclic:
        if (c.modulus)
            return rational_normalize(reduce_mod(orbit(delta, static_cast<unsigned>(a[0])), *c.modulus));
        return orbit(delta, static_cast<unsigned>(a[0]));
    case CaseKind::dihedral:
        return rational_normalize(power(reduce_mod(orbit(delta, 2), *c.modulus), ipow(a[0], a[1])));
    case CaseKind::dihedral_times_cyclic: {
        const auto m = static_cast<unsigned>(a[2]);
        const auto base = reduce_mod(orbit(delta, m) * orbit(delta, m, -1), *c.modulus);
        return rational_normalize(power(base, ipow(a[0], a[1])));
    }
    case CaseKind::metacyclic: {
        const auto m = static_cast<std::uint32_t>(a[0]);
        const auto p = static_cast<std::uint32_t>(a[1]);
        const auto delta_p = reduce_mod(delta, p);
        auto out = reduce_mod(orbit(delta, m), p);
        for (auto k : mth_roots_of_unity_mod_p(m, p))
            out = out * power(scaled_factor(delta_p, k), p - 1);
        return rational_normalize(out);
    }
    case CaseKind::dicyclic:
        return rational_normalize(power(reduce_mod(orbit(delta, 4), *c.modulus), ipow(a[0], a[1])));
    case CaseKind::a4:
        return rational_normalize(power(reduce_mod(orbit(delta, 3), 2), 4));
    case CaseKind::d3c3:
        return rational_normalize(power(reduce_mod(orbit(delta, 2), 3), 9));
    case CaseKind::conjecture:
        return rational_normalize(power(reduce_mod(orbit(delta, 2), *c.modulus), a[0] * a[0]));
    }
    throw InvalidArgument("unknown case");
}

RationalFunction metacyclic_rhs_regrouped(const TheoremCase& c, const LaurentPolynomial& delta)
{
    if (c.kind != CaseKind::metacyclic)
        throw InvalidArgument("regrouped form needs a metacyclic case");
    c.validate();
    const auto m = static_cast<unsigned>(c.parameters[0]);
    const auto p = static_cast<std::uint32_t>(c.parameters[1]);
    // orbit over the nontrivial m-th roots: divide out the j = m factor
    const auto num = exact_quotient(product_over_roots_of_unity(delta, m), delta);
    const auto den = exact_quotient(product_over_roots_of_unity(t_minus(ZZ, 1), m), t_minus(ZZ, 1));
    if (!num || !den)
        throw InvalidArgument("orbit product not divisible by its trivial factor");
    const auto delta_p = reduce_mod(delta, p);
    auto out = reduce_mod(RationalFunction(*num, *den), p) * power(scaled_factor(delta_p, 1), p);
    for (auto k : mth_roots_of_unity_mod_p(m, p))
        if (k != 1)
            out = out * power(scaled_factor(delta_p, k), p - 1);
    return rational_normalize(out);
}

bool VerdictRecord::all_true() const
{
    for (bool v : verdicts)
        if (!v)
            return false;
    return true;
}

nlohmann::json VerdictRecord::to_json() const
{
    auto lhs_json = nlohmann::json::array();
    for (const auto& r : lhs)
        lhs_json.push_back(talex::to_json(r));
    return {
        { "knot", knot },
        { "group", group },
        { "case", to_string(theorem.kind) },
        { "parameters", theorem.parameters },
        { "surjections_found", surjections_found },
        { "verdicts", verdicts },
        { "lhs", lhs_json },
        { "rhs", talex::to_json(rhs) },
        { "modulus", theorem.modulus ? nlohmann::json(*theorem.modulus) : nlohmann::json(nullptr) },
        { "elapsed_ms", elapsed_ms },
    };
}

VerdictRecord verify_congruence(const KnotPresentation& pres, const std::string& knot_name, const TheoremCase& c,
    const SearchOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const auto g = std::make_shared<const FiniteGroup>(c.group());
    VerdictRecord record;
    record.knot = knot_name;
    record.group = g->name();
    record.theorem = c;
    record.rhs = rhs(c, alexander_polynomial(pres));

    const auto homs = find_meridional_surjections(pres, *g, options);
    record.surjections_found = homs.size();
    record.lhs.resize(homs.size());
    const auto rep = regular_representation(*g);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(homs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const Homomorphism f { g, homs[static_cast<std::size_t>(i)].images };
            record.lhs[static_cast<std::size_t>(i)]
                = c.modulus ? twisted_alexander_mod(pres, f, rep, *c.modulus).normalized : wada_invariant(pres, f, rep).normalized;
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    for (const auto& l : record.lhs)
        record.verdicts.push_back(equal_up_to_unit(l, record.rhs));
    record.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return record;
}

std::vector<TheoremCase> order_below_24_cases()
{
    std::vector<TheoremCase> out;
    for (std::int64_t n = 1; n < 24; ++n)
        out.push_back(TheoremCase::cyclic(n));
    for (auto [p, n] : { std::pair { 3, 1 }, { 5, 1 }, { 7, 1 }, { 3, 2 }, { 11, 1 } })
        out.push_back(TheoremCase::dihedral(p, n));
    out.push_back(TheoremCase::dihedral_times_cyclic(3, 1, 3));
    out.push_back(TheoremCase::metacyclic(4, 5, 2));
    out.push_back(TheoremCase::metacyclic(3, 7, 2));
    out.push_back(TheoremCase::dicyclic(3, 1));
    out.push_back(TheoremCase::dicyclic(5, 1));
    out.push_back(TheoremCase::a4());
    out.push_back(TheoremCase::d3c3());
    return out;
}

IntMatrix a_matrix(std::uint32_t p, unsigned n)
{
    if (!is_prime(p))
        throw NotPrime(p);
    const auto q = static_cast<std::size_t>(ipow(p, n));
    IntMatrix a(q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            a(i, j) = lucas_binomial(i, j, p);
    return a;
}

IntMatrix tau_a(std::uint32_t p, unsigned n)
{
    if (!is_prime(p))
        throw NotPrime(p);
    const auto q = static_cast<std::size_t>(ipow(p, n));
    IntMatrix a(q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i; j < q; ++j)
            a(i, j) = (j - i) % 2 == 0 ? 1 : (p - 1) % p;
    return a;
}

IntMatrix tau_b(std::uint32_t p, unsigned n)
{
    if (!is_prime(p))
        throw NotPrime(p);
    const auto q = static_cast<std::size_t>(ipow(p, n));
    IntMatrix b(q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i; j < q; ++j) {
            const auto c = lucas_binomial(j, i, p);
            b(i, j) = j % 2 == 0 ? c : (p - c) % p;
        }
    return b;
}

IntMatrix dihedral_rho_bar_a(std::uint32_t q)
{
    IntMatrix a(q);
    for (std::size_t j = 0; j < q; ++j)
        a((j + 1) % q, j) = 1;
    return a;
}

IntMatrix dihedral_rho_bar_b(std::uint32_t q)
{
    IntMatrix b(q);
    for (std::size_t j = 0; j < q; ++j)
        b(q - 1 - j, j) = 1;
    return b;
}

IntMatrix metacyclic_rho_bar_b(std::uint32_t p, std::uint32_t k)
{
    IntMatrix b(p);
    for (std::uint64_t i = 1; i <= p; ++i) {
        auto j = (static_cast<std::uint64_t>(k) * i + p - 1) % p;
        if (j == 0)
            j = p;
        b(i - 1, j - 1) = 1;
    }
    return b;
}

namespace identities {

    bool lucas(std::uint32_t p, unsigned limit)
    {
        for (std::int64_t m = 0; m <= limit; ++m)
            for (std::int64_t n = 0; n <= m; ++n) {
                std::int64_t product = 1;
                for (std::int64_t a = m, b = n; a > 0 || b > 0; a /= p, b /= p)
                    product = product * binomial_mod(a % p, b % p, p) % p;
                if (binomial_mod(m, n, p) != product)
                    return false;
            }
        return true;
    }

    bool pascal(unsigned limit)
    {
        for (std::int64_t m = 1; m <= limit; ++m)
            for (std::int64_t n = 1; n <= m; ++n)
                if (binomial(m, n) != binomial(m - 1, n) + binomial(m - 1, n - 1))
                    return false;
        return true;
    }

    bool vandermonde(unsigned limit)
    {
        // Exact binomials reduced to 64-bit words; the identity then holds mod 2^64.
        const std::size_t top = 2 * static_cast<std::size_t>(limit);
        std::vector<std::vector<std::uint64_t>> c(top + 1);
        for (std::size_t i = 0; i <= top; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                const Integer b = binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
                c[i].push_back(mpz_getlimbn(b.get_mpz_t(), 0));
            }
        auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t { return j <= i ? c[i][j] : 0; };
        for (std::size_t m = 0; m <= limit; ++m)
            for (std::size_t n = 0; n <= limit; ++n)
                for (std::size_t r = 0; r <= m + n; ++r) {
                    std::uint64_t sum = 0;
                    const std::size_t lo = r > n ? r - n : 0;
                    for (std::size_t k = lo; k <= std::min(r, m); ++k)
                        sum += at(m, k) * at(n, r - k);
                    if (sum != at(m + n, r))
                        return false;
                }
        return true;
    }

    bool euler_finite_difference(unsigned limit)
    {
        const auto N = static_cast<std::size_t>(limit);
        // generalized C(x, r) for integer x, built along r
        auto column = [&](std::int64_t x) {
            std::vector<Integer> out(N + 1);
            out[0] = 1;
            for (std::size_t r = 1; r <= N; ++r) {
                out[r] = out[r - 1] * Integer(static_cast<long>(x - static_cast<std::int64_t>(r) + 1));
                mpz_divexact_ui(out[r].get_mpz_t(), out[r].get_mpz_t(), r);
            }
            return out;
        };
        auto check = [&](const std::vector<std::vector<Integer>>& f, auto expected_top) {
            for (std::size_t n = 0; n <= N; ++n)
                for (std::size_t r = 0; r <= n; ++r) {
                    Integer sum = 0;
                    for (std::size_t k = 0; k <= n; ++k) {
                        const Integer term = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)) * f[k][r];
                        if (k % 2 == 0)
                            sum += term;
                        else
                            sum -= term;
                    }
                    if (sum != (r < n ? Integer(0) : expected_top(n)))
                        return false;
                }
            return true;
        };
        std::vector<std::vector<Integer>> powers(N + 1, std::vector<Integer>(N + 1));
        for (std::size_t k = 0; k <= N; ++k) {
            powers[k][0] = 1;
            for (std::size_t r = 1; r <= N; ++r)
                powers[k][r] = powers[k][r - 1] * static_cast<unsigned long>(k);
        }
        const bool monomials = check(powers, [](std::size_t n) {
            Integer f;
            mpz_fac_ui(f.get_mpz_t(), n);
            return n % 2 == 0 ? f : Integer(-f);
        });
        if (!monomials)
            return false;
        for (std::int64_t a : { -3, -2, -1, 1, 2, 3, 5 }) {
            std::vector<std::vector<Integer>> f;
            for (std::size_t k = 0; k <= N; ++k)
                f.push_back(column(a * static_cast<std::int64_t>(k) - 2));
            const bool ok = check(f, [a](std::size_t n) {
                Integer x = 1;
                for (std::size_t i = 0; i < n; ++i)
                    x *= Integer(static_cast<long>(a));
                return n % 2 == 0 ? x : Integer(-x);
            });
            if (!ok)
                return false;
        }
        return true;
    }

    bool dihedral_lemma_i(std::uint32_t p, unsigned n)
    {
        const auto q = ipow(p, n);
        for (std::int64_t k = 0; k < q; ++k)
            if (binomial_mod(q - 1, k, p) != (k % 2 == 0 ? 1 : static_cast<std::int64_t>(p) - 1))
                return false;
        return true;
    }

    bool dihedral_lemma_ii(std::uint32_t p, unsigned n)
    {
        const auto q = ipow(p, n);
        for (std::int64_t m = 1; m <= q; ++m)
            for (std::int64_t j = 1; j <= q; ++j) {
                Integer sum = 0;
                for (std::int64_t k = 1; k <= j; ++k) {
                    if ((j - k) % 2 == 0)
                        sum += binomial(m, k - 1);
                    else
                        sum -= binomial(m, k - 1);
                }
                if (sum != binomial(m - 1, j - 1))
                    return false;
            }
        return true;
    }

    bool dihedral_lemma_iii(std::uint32_t p, unsigned n)
    {
        const auto q = ipow(p, n);
        for (std::int64_t i = 1; i <= q; ++i)
            for (std::int64_t j = 1; j <= q; ++j) {
                Integer left = binomial(i + j - 2, j - 1);
                if ((j - 1) % 2 == 1)
                    left = -left;
                Integer diff = left - binomial(q - i, j - 1);
                if (diff % p != 0)
                    return false;
            }
        return true;
    }

    bool metacyclic_lemma_i(std::uint32_t p)
    {
        const std::int64_t P = p;
        for (std::int64_t i = 1; i <= P; ++i)
            for (std::int64_t j = 1; j <= P; ++j) {
                Integer sum = 0;
                for (std::int64_t k = j; k <= i; ++k)
                    sum += binomial(i - 1, k - 1) * binomial(P - j, P - k);
                if (sum != binomial(P - j + i - 1, P - 1))
                    return false;
            }
        return true;
    }

    bool metacyclic_lemma_ii(std::uint32_t p)
    {
        IntMatrix inverse(p);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j)
                inverse(i, j) = binomial_mod(static_cast<std::int64_t>(p - 1 - j), static_cast<std::int64_t>(p - 1 - i), p);
        return a_matrix(p, 1).multiply_mod(inverse, p) == IntMatrix::identity(p);
    }

    bool metacyclic_lemma_iii(std::uint32_t p)
    {
        const std::int64_t P = p;
        for (std::int64_t i = 1; i <= P; ++i)
            for (std::int64_t s = 1; s <= P; ++s) {
                Integer right = binomial(i - 1, s - 1);
                if ((i + s) % 2 == 1)
                    right = -right;
                Integer diff = binomial(P - s, P - i) - right;
                if (diff % p != 0)
                    return false;
            }
        return true;
    }

} // namespace identities

} // namespace talex
