#pragma once

#include <cstddef>
#include <vector>

#include "talex/polynomial.hpp"

namespace talex {

/// Dense row-major matrix of Laurent polynomials over one domain.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, CoefficientDomain domain);

    static PolyMatrix identity(std::size_t n, CoefficientDomain domain);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const CoefficientDomain& domain() const noexcept { return domain_; }

    const LaurentPolynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    /// Stores value at (i, j); its domain must match.
    void set(std::size_t i, std::size_t j, LaurentPolynomial value);
    /// Adds value to the entry at (i, j).
    void add_to(std::size_t i, std::size_t j, const LaurentPolynomial& value);

    void swap_rows(std::size_t a, std::size_t b);
    /// Copies other into the block whose top-left corner is (row, col).
    void set_block(std::size_t row, std::size_t col, const PolyMatrix& other);

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    bool is_zero() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    CoefficientDomain domain_;
    std::vector<LaurentPolynomial> entries_;
};

/// Determinant by fraction-free elimination. Rows of the elimination are
/// updated in parallel with OpenMP; the result does not depend on the
/// thread count and matches determinant_serial exactly.
LaurentPolynomial determinant(const PolyMatrix& m);

/// Single-threaded reference for determinant.
LaurentPolynomial determinant_serial(const PolyMatrix& m);

} // namespace talex
