#include "talex/domain.hpp"

#include "talex/error.hpp"

namespace talex {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

CoefficientDomain CoefficientDomain::prime_field(std::uint32_t p)
{
    if (!is_prime(p))
        throw NotPrime(p);
    CoefficientDomain d;
    d.modulus_ = p;
    return d;
}

void CoefficientDomain::reduce(Integer& x) const
{
    if (modulus_ == 0)
        return;
    mpz_fdiv_r_ui(x.get_mpz_t(), x.get_mpz_t(), modulus_);
}

bool CoefficientDomain::is_unit(const Integer& c) const
{
    if (modulus_ == 0)
        return c == 1 || c == -1;
    return mpz_divisible_ui_p(c.get_mpz_t(), modulus_) == 0;
}

std::string CoefficientDomain::to_string() const
{
    return modulus_ == 0 ? std::string("ZZ") : "GF(" + std::to_string(modulus_) + ")";
}

std::uint64_t power_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept
{
    unsigned __int128 result = 1 % p;
    unsigned __int128 base = a % p;
    while (e > 0) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw InvalidArgument("zero has no inverse modulo " + std::to_string(p));
    return power_mod(a, p - 2, p);
}

} // namespace talex
