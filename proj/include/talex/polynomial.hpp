#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "talex/domain.hpp"

namespace talex {

/// Laurent polynomial sum_i c_i t^(min_exponent + i) with exact coefficients.
///
/// Canonical form: coefficients are reduced into the domain, the first and
/// last stored coefficients are nonzero, and the zero polynomial is the empty
/// sequence with min_exponent 0. Every constructor and operation returns a
/// canonical value, so structural equality is polynomial equality.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(CoefficientDomain domain = CoefficientDomain::integers());
    LaurentPolynomial(CoefficientDomain domain, std::int64_t min_exponent, std::vector<Integer> coefficients);

    static LaurentPolynomial constant(CoefficientDomain domain, const Integer& c);
    static LaurentPolynomial monomial(CoefficientDomain domain, const Integer& c, std::int64_t exponent);
    /// Ascending coefficients starting at t^min_exponent.
    static LaurentPolynomial from_ints(CoefficientDomain domain, std::initializer_list<long> ascending,
        std::int64_t min_exponent = 0);
    static LaurentPolynomial from_ints(std::initializer_list<long> ascending, std::int64_t min_exponent = 0)
    {
        return from_ints(CoefficientDomain::integers(), ascending, min_exponent);
    }

    const CoefficientDomain& domain() const noexcept { return domain_; }
    std::int64_t min_exponent() const noexcept { return min_exponent_; }
    /// Largest exponent present; min_exponent - 1 for the zero polynomial.
    std::int64_t max_exponent() const noexcept
    {
        return min_exponent_ + static_cast<std::int64_t>(coefficients_.size()) - 1;
    }
    const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }
    bool is_zero() const noexcept { return coefficients_.empty(); }
    bool is_monomial() const noexcept { return coefficients_.size() == 1; }

    Integer coefficient(std::int64_t exponent) const;
    const Integer& lowest_coefficient() const;
    const Integer& leading_coefficient() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

    LaurentPolynomial scaled(const Integer& c) const;
    /// Multiplication by t^k.
    LaurentPolynomial shifted(std::int64_t k) const;
    LaurentPolynomial pow(unsigned exponent) const;

    /// Value at t = x. Negative exponents need x invertible in the domain.
    Integer evaluate(const Integer& x) const;

    /// gcd of the coefficients over the integers (0 for the zero polynomial);
    /// 1 for any nonzero polynomial over a prime field.
    Integer content() const;

    /// Text form with explicit signs, highest exponent first: "2*t^2 - 5*t + 2".
    std::string to_string() const;

private:
    void canonicalize();
    void require_same_domain(const LaurentPolynomial& other) const;

    CoefficientDomain domain_;
    std::int64_t min_exponent_ = 0;
    std::vector<Integer> coefficients_;
};

/// g(t) = f(c t): the coefficient of t^k is multiplied by c^k.
/// c must be a unit (nonzero mod p; +-1 over the integers).
LaurentPolynomial substitute_scale(const LaurentPolynomial& f, const Integer& c);

/// Coefficientwise reduction of an integer polynomial into GF(p).
LaurentPolynomial reduce_mod(const LaurentPolynomial& f, std::uint32_t p);

/// Canonical associate under the unit group (domain units) * t^Z: min exponent 0 and
/// lowest coefficient 1 over GF(p); primitive with positive lowest coefficient over ZZ.
LaurentPolynomial unit_normalize(const LaurentPolynomial& f);

/// a / b in the Laurent ring when b divides a exactly, otherwise nullopt.
std::optional<LaurentPolynomial> exact_quotient(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// gcd in the Laurent ring, unit-normalized. gcd(0, 0) = 0.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

} // namespace talex
