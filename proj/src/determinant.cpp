#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "talex/error.hpp"
#include "talex/matrix.hpp"

namespace talex {

namespace {

    // Polynomials here are dense ascending vectors without trailing zeros,
    // min exponent 0; the Laurent shifts are factored out before elimination.

    struct IntegerKernel {
        using Coeff = Integer;
        using Poly = std::vector<Integer>;

        static void trim(Poly& a)
        {
            while (!a.empty() && a.back() == 0)
                a.pop_back();
        }

        // (pivot * x - a * b) / previous, exactly.
        Poly update(const Poly& pivot, const Poly& x, const Poly& a, const Poly& b, const Poly& previous) const
        {
            const bool first = !x.empty();
            const bool second = !a.empty() && !b.empty();
            if (!first && !second)
                return {};
            std::size_t size = 0;
            if (first)
                size = pivot.size() + x.size() - 1;
            if (second)
                size = std::max(size, a.size() + b.size() - 1);
            Poly acc(size);
            if (first)
                for (std::size_t i = 0; i < pivot.size(); ++i)
                    for (std::size_t j = 0; j < x.size(); ++j)
                        mpz_addmul(acc[i + j].get_mpz_t(), pivot[i].get_mpz_t(), x[j].get_mpz_t());
            if (second)
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (a[i] == 0)
                        continue;
                    for (std::size_t j = 0; j < b.size(); ++j)
                        mpz_submul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
                }
            trim(acc);
            return divide(std::move(acc), previous);
        }

        static Poly divide(Poly r, const Poly& d)
        {
            if (r.empty())
                return r;
            if (d.size() == 1 && d[0] == 1)
                return r;
            if (r.size() < d.size())
                throw std::logic_error("inexact division in fraction-free elimination");
            Poly q(r.size() - d.size() + 1);
            const Integer& lead = d.back();
            for (std::size_t k = q.size(); k-- > 0;) {
                Integer& top = r[k + d.size() - 1];
                if (top == 0)
                    continue;
                mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
                for (std::size_t j = 0; j < d.size(); ++j)
                    mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), d[j].get_mpz_t());
            }
            trim(q);
            return q;
        }
    };

    struct PrimeKernel {
        using Poly = std::vector<std::uint32_t>;

        std::uint32_t p;
        // Number of products of reduced values that fit in a uint64 accumulator
        // on top of one reduced value.
        std::uint64_t chunk;

        explicit PrimeKernel(std::uint32_t prime)
            : p(prime)
        {
            const std::uint64_t m = p - 1;
            chunk = m == 0 ? 1 : (std::numeric_limits<std::uint64_t>::max() - m) / (m * m);
            chunk = std::max<std::uint64_t>(chunk, 1);
        }

        static void trim(Poly& a)
        {
            while (!a.empty() && a.back() == 0)
                a.pop_back();
        }

        void accumulate(std::vector<std::uint64_t>& acc, const Poly& a, const Poly& b) const
        {
            std::uint64_t pending = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const std::uint64_t ai = a[i];
                if (ai == 0)
                    continue;
                if (pending == chunk) {
                    for (auto& v : acc)
                        v %= p;
                    pending = 0;
                }
                std::uint64_t* out = acc.data() + i;
                for (std::size_t j = 0; j < b.size(); ++j)
                    out[j] += ai * b[j];
                ++pending;
            }
            for (auto& v : acc)
                v %= p;
        }

        Poly update(const Poly& pivot, const Poly& x, const Poly& a, const Poly& b, const Poly& previous) const
        {
            const bool first = !x.empty();
            const bool second = !a.empty() && !b.empty();
            if (!first && !second)
                return {};
            std::size_t size = 0;
            if (first)
                size = pivot.size() + x.size() - 1;
            if (second)
                size = std::max(size, a.size() + b.size() - 1);
            std::vector<std::uint64_t> acc(size, 0);
            if (first)
                accumulate(acc, pivot, x);
            if (second) {
                Poly negated(b.size());
                for (std::size_t j = 0; j < b.size(); ++j)
                    negated[j] = b[j] == 0 ? 0 : p - b[j];
                accumulate(acc, a, negated);
            }
            Poly out(acc.begin(), acc.end());
            trim(out);
            return divide(std::move(out), previous);
        }

        Poly divide(Poly r, const Poly& d) const
        {
            if (r.empty())
                return r;
            if (d.size() == 1 && d[0] == 1)
                return r;
            if (r.size() < d.size())
                throw std::logic_error("inexact division in fraction-free elimination");
            Poly q(r.size() - d.size() + 1);
            const std::uint64_t lead_inverse = inverse_mod(d.back(), p);
            for (std::size_t k = q.size(); k-- > 0;) {
                const std::uint64_t top = r[k + d.size() - 1];
                if (top == 0)
                    continue;
                const std::uint64_t factor = top * lead_inverse % p;
                q[k] = static_cast<std::uint32_t>(factor);
                const std::uint64_t minus = p - factor;
                for (std::size_t j = 0; j < d.size(); ++j)
                    r[k + j] = static_cast<std::uint32_t>((r[k + j] + minus * d[j]) % p);
            }
            trim(q);
            return q;
        }
    };

    template <class Kernel>
    using Grid = std::vector<std::vector<typename Kernel::Poly>>;

    // Determinant of a square grid of ordinary polynomials, up to the sign of
    // the row permutation, which is reported through negate.
    template <class Kernel, bool Parallel>
    typename Kernel::Poly bareiss(const Kernel& kernel, Grid<Kernel>& m, bool& negate)
    {
        using Poly = typename Kernel::Poly;
        const std::size_t n = m.size();
        negate = false;
        if (n == 0)
            return Poly { 1 };
        Poly previous { 1 };
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::size_t best = n;
            for (std::size_t i = k; i < n; ++i)
                if (!m[i][k].empty() && (best == n || m[i][k].size() < m[best][k].size()))
                    best = i;
            if (best == n)
                return {};
            if (best != k) {
                std::swap(m[best], m[k]);
                negate = !negate;
            }
            const auto& pivot_row = m[k];
            const Poly& pivot = pivot_row[k];
            const auto rows = static_cast<std::int64_t>(n);
            const auto start = static_cast<std::int64_t>(k + 1);
#pragma omp parallel for schedule(dynamic, 1) if (Parallel)
            for (std::int64_t ii = start; ii < rows; ++ii) {
                auto& row = m[static_cast<std::size_t>(ii)];
                const Poly factor = row[k];
                for (std::size_t j = k + 1; j < n; ++j)
                    row[j] = kernel.update(pivot, row[j], factor, pivot_row[j], previous);
                row[k].clear();
            }
            previous = pivot;
        }
        return m[n - 1][n - 1];
    }

    struct Prepared {
        bool zero = false;
        std::int64_t shift = 0;
        Integer scale = 1;
    };

    // Factors t^min out of every row and column and, over the integers, the
    // content out of every row.
    Prepared prepare(std::vector<std::vector<LaurentPolynomial>>& rows)
    {
        Prepared out;
        const std::size_t n = rows.size();
        for (auto& row : rows) {
            bool any = false;
            std::int64_t low = 0;
            for (const auto& e : row)
                if (!e.is_zero()) {
                    low = any ? std::min(low, e.min_exponent()) : e.min_exponent();
                    any = true;
                }
            if (!any) {
                out.zero = true;
                return out;
            }
            out.shift += low;
            for (auto& e : row)
                e = e.shifted(-low);
            if (row.front().domain().is_integers()) {
                Integer g = 0;
                for (const auto& e : row) {
                    const Integer c = e.content();
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
                }
                if (g > 1) {
                    out.scale *= g;
                    for (auto& e : row) {
                        auto coefficients = e.coefficients();
                        for (auto& c : coefficients)
                            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
                        e = LaurentPolynomial(e.domain(), e.min_exponent(), std::move(coefficients));
                    }
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            bool any = false;
            std::int64_t low = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (!rows[i][j].is_zero()) {
                    low = any ? std::min(low, rows[i][j].min_exponent()) : rows[i][j].min_exponent();
                    any = true;
                }
            if (!any) {
                out.zero = true;
                return out;
            }
            out.shift += low;
            for (std::size_t i = 0; i < n; ++i)
                rows[i][j] = rows[i][j].shifted(-low);
        }
        return out;
    }

    template <bool Parallel>
    LaurentPolynomial determinant_impl(const PolyMatrix& matrix)
    {
        if (matrix.rows() != matrix.cols())
            throw InvalidArgument("determinant of a non-square " + std::to_string(matrix.rows()) + "x"
                + std::to_string(matrix.cols()) + " matrix");
        const auto domain = matrix.domain();
        const std::size_t n = matrix.rows();
        std::vector<std::vector<LaurentPolynomial>> rows(n);
        for (std::size_t i = 0; i < n; ++i) {
            rows[i].reserve(n);
            for (std::size_t j = 0; j < n; ++j)
                rows[i].push_back(matrix(i, j));
        }
        const auto prepared = prepare(rows);
        if (prepared.zero)
            return LaurentPolynomial(domain);

        bool negate = false;
        std::vector<Integer> result;
        if (domain.is_integers()) {
            IntegerKernel kernel;
            Grid<IntegerKernel> grid(n, std::vector<IntegerKernel::Poly>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& e = rows[i][j];
                    if (e.is_zero())
                        continue;
                    grid[i][j].assign(static_cast<std::size_t>(e.min_exponent()), Integer(0));
                    grid[i][j].insert(grid[i][j].end(), e.coefficients().begin(), e.coefficients().end());
                }
            result = bareiss<IntegerKernel, Parallel>(kernel, grid, negate);
        } else {
            PrimeKernel kernel(domain.prime());
            Grid<PrimeKernel> grid(n, std::vector<PrimeKernel::Poly>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& e = rows[i][j];
                    if (e.is_zero())
                        continue;
                    grid[i][j].assign(static_cast<std::size_t>(e.min_exponent()), 0);
                    for (const auto& c : e.coefficients())
                        grid[i][j].push_back(static_cast<std::uint32_t>(c.get_ui()));
                }
            const auto det = bareiss<PrimeKernel, Parallel>(kernel, grid, negate);
            result.assign(det.begin(), det.end());
        }
        Integer scale = prepared.scale;
        if (negate)
            scale = -scale;
        for (auto& c : result)
            c *= scale;
        return LaurentPolynomial(domain, prepared.shift, std::move(result));
    }

} // namespace

LaurentPolynomial determinant(const PolyMatrix& m)
{
    return determinant_impl<true>(m);
}

LaurentPolynomial determinant_serial(const PolyMatrix& m)
{
    return determinant_impl<false>(m);
}

} // namespace talex
