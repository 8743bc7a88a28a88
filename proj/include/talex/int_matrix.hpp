#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace talex {

/// Small dense square matrix of machine integers, used for representation
/// images and for the binomial matrices over GF(p).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n)
        : n_(n)
        , data_(n * n, 0)
    {
    }
    IntMatrix(std::size_t n, std::vector<std::int64_t> row_major);

    static IntMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    const std::vector<std::int64_t>& data() const noexcept { return data_; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// Entries reduced into [0, p).
    IntMatrix reduced(std::uint32_t p) const;
    IntMatrix multiply_mod(const IntMatrix& b, std::uint32_t p) const;
    /// Inverse over GF(p), or nullopt when singular.
    std::optional<IntMatrix> inverse_mod(std::uint32_t p) const;

    bool is_upper_triangular() const;
    /// True when every column holds exactly one 1 and zeros elsewhere.
    bool is_permutation() const;

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> data_;
};

} // namespace talex
