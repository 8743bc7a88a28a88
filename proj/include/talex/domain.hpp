#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace talex {

using Integer = mpz_class;

bool is_prime(std::uint64_t n) noexcept;

/// Coefficient ring of every polynomial in the library: either the integers
/// or the prime field F_p. The modulus is checked for primality on construction.
class CoefficientDomain {
public:
    constexpr CoefficientDomain() noexcept = default;

    static constexpr CoefficientDomain integers() noexcept { return {}; }
    static CoefficientDomain prime_field(std::uint32_t p);

    constexpr bool is_integers() const noexcept { return modulus_ == 0; }
    constexpr bool is_prime_field() const noexcept { return modulus_ != 0; }
    /// The prime p, or 0 over the integers.
    constexpr std::uint32_t prime() const noexcept { return modulus_; }

    /// Reduces x in place into [0, p); a no-op over the integers.
    void reduce(Integer& x) const;
    Integer reduced(Integer x) const
    {
        reduce(x);
        return x;
    }

    /// True when c is a unit of the domain (nonzero mod p, or +-1).
    bool is_unit(const Integer& c) const;

    std::string to_string() const;

    friend constexpr bool operator==(CoefficientDomain, CoefficientDomain) noexcept = default;

private:
    std::uint32_t modulus_ = 0;
};

/// Inverse of a modulo p (p prime, a not divisible by p).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// a^e mod p.
std::uint64_t power_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept;

} // namespace talex
