#include "talex/int_matrix.hpp"

#include <sstream>

#include "talex/domain.hpp"
#include "talex/error.hpp"

namespace talex {

IntMatrix::IntMatrix(std::size_t n, std::vector<std::int64_t> row_major)
    : n_(n)
    , data_(std::move(row_major))
{
    if (data_.size() != n * n)
        throw InvalidArgument("matrix data has " + std::to_string(data_.size()) + " entries, expected "
            + std::to_string(n * n));
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.n_ != b.n_)
        throw InvalidArgument("matrix sizes differ");
    IntMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k) {
            const auto x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < a.n_; ++j)
                out(i, j) += x * b(k, j);
        }
    return out;
}

IntMatrix IntMatrix::reduced(std::uint32_t p) const
{
    IntMatrix out = *this;
    const auto m = static_cast<std::int64_t>(p);
    for (auto& x : out.data_)
        x = ((x % m) + m) % m;
    return out;
}

IntMatrix IntMatrix::multiply_mod(const IntMatrix& b, std::uint32_t p) const
{
    const auto left = reduced(p);
    const auto right = b.reduced(p);
    return (left * right).reduced(p);
}

std::optional<IntMatrix> IntMatrix::inverse_mod(std::uint32_t p) const
{
    const std::size_t n = n_;
    IntMatrix a = reduced(p);
    IntMatrix inv = identity(n);
    const auto m = static_cast<std::int64_t>(p);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r)
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == n)
            return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(col, j), a(pivot, j));
            std::swap(inv(col, j), inv(pivot, j));
        }
        const auto scale = static_cast<std::int64_t>(talex::inverse_mod(static_cast<std::uint64_t>(a(col, col)), p));
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * scale % m;
            inv(col, j) = inv(col, j) * scale % m;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0)
                continue;
            const auto factor = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) = ((a(r, j) - factor * a(col, j)) % m + m) % m;
                inv(r, j) = ((inv(r, j) - factor * inv(col, j)) % m + m) % m;
            }
        }
    }
    return inv;
}

bool IntMatrix::is_upper_triangular() const
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if ((*this)(i, j) != 0)
                return false;
    return true;
}

bool IntMatrix::is_permutation() const
{
    for (std::size_t j = 0; j < n_; ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            const auto x = (*this)(i, j);
            if (x == 1)
                ++ones;
            else if (x != 0)
                return false;
        }
        if (ones != 1)
            return false;
    }
    for (std::size_t i = 0; i < n_; ++i) {
        int ones = 0;
        for (std::size_t j = 0; j < n_; ++j)
            ones += (*this)(i, j) == 1;
        if (ones != 1)
            return false;
    }
    return true;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j)
            out << (j ? " " : "") << (*this)(i, j);
        out << '\n';
    }
    return out.str();
}

} // namespace talex
