#include "talex/matrix.hpp"

#include "talex/error.hpp"

namespace talex {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, CoefficientDomain domain)
    : rows_(rows)
    , cols_(cols)
    , domain_(domain)
    , entries_(rows * cols, LaurentPolynomial(domain))
{
}

PolyMatrix PolyMatrix::identity(std::size_t n, CoefficientDomain domain)
{
    PolyMatrix out(n, n, domain);
    for (std::size_t i = 0; i < n; ++i)
        out.set(i, i, LaurentPolynomial::constant(domain, 1));
    return out;
}

void PolyMatrix::set(std::size_t i, std::size_t j, LaurentPolynomial value)
{
    if (i >= rows_ || j >= cols_)
        throw InvalidArgument("matrix index out of range");
    if (!(value.domain() == domain_))
        throw DomainMismatch("matrix entry over " + value.domain().to_string() + " in a matrix over " + domain_.to_string());
    entries_[i * cols_ + j] = std::move(value);
}

void PolyMatrix::add_to(std::size_t i, std::size_t j, const LaurentPolynomial& value)
{
    if (i >= rows_ || j >= cols_)
        throw InvalidArgument("matrix index out of range");
    entries_[i * cols_ + j] += value;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a >= rows_ || b >= rows_)
        throw InvalidArgument("row index out of range");
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
}

void PolyMatrix::set_block(std::size_t row, std::size_t col, const PolyMatrix& other)
{
    if (row + other.rows_ > rows_ || col + other.cols_ > cols_)
        throw InvalidArgument("block does not fit");
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j)
            set(row + i, col + j, other(i, j));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InvalidArgument("matrix shapes do not match for multiplication");
    if (!(a.domain_ == b.domain_))
        throw DomainMismatch("matrix product across domains");
    PolyMatrix out(a.rows_, b.cols_, a.domain_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& left = a(i, k);
            if (left.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    out.add_to(i, j, left * b(k, j));
        }
    return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InvalidArgument("matrix shapes do not match for addition");
    PolyMatrix out = a;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        out.entries_[i] += b.entries_[i];
    return out;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

} // namespace talex
