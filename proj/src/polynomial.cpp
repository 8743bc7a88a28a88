#include "talex/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "talex/error.hpp"

namespace talex {

namespace {

    // Dense ascending coefficient vectors with min exponent 0 and no high zeros.
    using Dense = std::vector<Integer>;

    void trim(Dense& a)
    {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }

    void reduce_all(Dense& a, std::uint32_t p)
    {
        for (auto& c : a)
            mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), p);
        trim(a);
    }

    Dense multiply(const Dense& a, const Dense& b)
    {
        if (a.empty() || b.empty())
            return {};
        Dense out(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
        return out;
    }

    // q = a / b over ZZ, true when the division is exact.
    bool divide_exact_integers(Dense r, const Dense& b, Dense& q)
    {
        q.clear();
        if (r.empty())
            return true;
        if (r.size() < b.size())
            return false;
        const auto shift = r.size() - b.size();
        q.assign(shift + 1, 0);
        const Integer& lead = b.back();
        Integer factor;
        for (std::size_t k = shift + 1; k-- > 0;) {
            Integer& top = r[k + b.size() - 1];
            if (top == 0)
                continue;
            if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
                return false;
            mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
            for (std::size_t j = 0; j < b.size(); ++j)
                mpz_submul(r[k + j].get_mpz_t(), factor.get_mpz_t(), b[j].get_mpz_t());
            q[k] = factor;
        }
        trim(r);
        trim(q);
        return r.empty();
    }

    // Division with remainder over GF(p); both outputs reduced.
    void divide_mod(Dense r, const Dense& b, std::uint32_t p, Dense& q, Dense& rem)
    {
        q.clear();
        if (r.size() < b.size()) {
            rem = std::move(r);
            return;
        }
        const auto shift = r.size() - b.size();
        q.assign(shift + 1, 0);
        const Integer lead_inverse { static_cast<unsigned long>(inverse_mod(mpz_class(b.back() % p).get_ui(), p)) };
        Integer factor;
        for (std::size_t k = shift + 1; k-- > 0;) {
            Integer& top = r[k + b.size() - 1];
            mpz_fdiv_r_ui(top.get_mpz_t(), top.get_mpz_t(), p);
            if (top == 0)
                continue;
            factor = top * lead_inverse;
            mpz_fdiv_r_ui(factor.get_mpz_t(), factor.get_mpz_t(), p);
            for (std::size_t j = 0; j < b.size(); ++j) {
                mpz_submul(r[k + j].get_mpz_t(), factor.get_mpz_t(), b[j].get_mpz_t());
                mpz_fdiv_r_ui(r[k + j].get_mpz_t(), r[k + j].get_mpz_t(), p);
            }
            q[k] = factor;
        }
        reduce_all(r, p);
        trim(q);
        rem = std::move(r);
    }

    Integer dense_content(const Dense& a)
    {
        Integer g = 0;
        for (const auto& c : a) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1)
                break;
        }
        return g;
    }

    void make_primitive(Dense& a)
    {
        const Integer g = dense_content(a);
        if (g > 1)
            for (auto& c : a)
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }

    // lc(b)^(deg a - deg b + 1) * a mod b.
    Dense pseudo_remainder(Dense r, const Dense& b)
    {
        const Integer& lead = b.back();
        while (r.size() >= b.size()) {
            const Integer top = r.back();
            const auto k = r.size() - b.size();
            for (auto& c : r)
                c *= lead;
            for (std::size_t j = 0; j < b.size(); ++j)
                mpz_submul(r[k + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
            trim(r);
        }
        return r;
    }

    Dense gcd_integers(Dense a, Dense b)
    {
        make_primitive(a);
        make_primitive(b);
        if (a.size() < b.size())
            std::swap(a, b);
        while (!b.empty()) {
            Dense r = pseudo_remainder(std::move(a), b);
            make_primitive(r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    Dense gcd_mod(Dense a, Dense b, std::uint32_t p)
    {
        if (a.size() < b.size())
            std::swap(a, b);
        Dense q, r;
        while (!b.empty()) {
            divide_mod(std::move(a), b, p, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

} // namespace

LaurentPolynomial::LaurentPolynomial(CoefficientDomain domain)
    : domain_(domain)
{
}

LaurentPolynomial::LaurentPolynomial(CoefficientDomain domain, std::int64_t min_exponent, std::vector<Integer> coefficients)
    : domain_(domain)
    , min_exponent_(min_exponent)
    , coefficients_(std::move(coefficients))
{
    canonicalize();
}

LaurentPolynomial LaurentPolynomial::constant(CoefficientDomain domain, const Integer& c)
{
    return LaurentPolynomial(domain, 0, { c });
}

LaurentPolynomial LaurentPolynomial::monomial(CoefficientDomain domain, const Integer& c, std::int64_t exponent)
{
    return LaurentPolynomial(domain, exponent, { c });
}

LaurentPolynomial LaurentPolynomial::from_ints(CoefficientDomain domain, std::initializer_list<long> ascending,
    std::int64_t min_exponent)
{
    std::vector<Integer> coefficients;
    coefficients.reserve(ascending.size());
    for (long c : ascending)
        coefficients.emplace_back(c);
    return LaurentPolynomial(domain, min_exponent, std::move(coefficients));
}

void LaurentPolynomial::canonicalize()
{
    if (domain_.is_prime_field())
        for (auto& c : coefficients_)
            domain_.reduce(c);
    trim(coefficients_);
    const auto first = std::find_if(coefficients_.begin(), coefficients_.end(), [](const Integer& c) { return c != 0; });
    const auto leading_zeros = first - coefficients_.begin();
    if (leading_zeros > 0) {
        coefficients_.erase(coefficients_.begin(), first);
        min_exponent_ += leading_zeros;
    }
    if (coefficients_.empty())
        min_exponent_ = 0;
}

void LaurentPolynomial::require_same_domain(const LaurentPolynomial& other) const
{
    if (!(domain_ == other.domain_))
        throw DomainMismatch("polynomials over " + domain_.to_string() + " and " + other.domain_.to_string());
}

Integer LaurentPolynomial::coefficient(std::int64_t exponent) const
{
    if (exponent < min_exponent_ || exponent > max_exponent())
        return 0;
    return coefficients_[static_cast<std::size_t>(exponent - min_exponent_)];
}

const Integer& LaurentPolynomial::lowest_coefficient() const
{
    if (is_zero())
        throw InvalidArgument("zero polynomial has no lowest coefficient");
    return coefficients_.front();
}

const Integer& LaurentPolynomial::leading_coefficient() const
{
    if (is_zero())
        throw InvalidArgument("zero polynomial has no leading coefficient");
    return coefficients_.back();
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    LaurentPolynomial out = *this;
    for (auto& c : out.coefficients_)
        c = -c;
    out.canonicalize();
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs)
{
    require_same_domain(rhs);
    if (rhs.is_zero())
        return *this;
    if (is_zero())
        return *this = rhs;
    const auto lo = std::min(min_exponent_, rhs.min_exponent_);
    const auto hi = std::max(max_exponent(), rhs.max_exponent());
    std::vector<Integer> sum(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        sum[static_cast<std::size_t>(min_exponent_ - lo) + i] = std::move(coefficients_[i]);
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
        sum[static_cast<std::size_t>(rhs.min_exponent_ - lo) + i] += rhs.coefficients_[i];
    coefficients_ = std::move(sum);
    min_exponent_ = lo;
    canonicalize();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs)
{
    return *this += -rhs;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs)
{
    return *this = *this * rhs;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    a.require_same_domain(b);
    return LaurentPolynomial(a.domain_, a.min_exponent_ + b.min_exponent_, multiply(a.coefficients_, b.coefficients_));
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    return a.domain_ == b.domain_ && a.min_exponent_ == b.min_exponent_ && a.coefficients_ == b.coefficients_;
}

LaurentPolynomial LaurentPolynomial::scaled(const Integer& c) const
{
    auto coefficients = coefficients_;
    for (auto& x : coefficients)
        x *= c;
    return LaurentPolynomial(domain_, min_exponent_, std::move(coefficients));
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t k) const
{
    if (is_zero())
        return *this;
    LaurentPolynomial out = *this;
    out.min_exponent_ += k;
    return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const
{
    LaurentPolynomial result = constant(domain_, 1);
    LaurentPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

Integer LaurentPolynomial::evaluate(const Integer& x) const
{
    Integer value = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        value *= x;
        value += *it;
        domain_.reduce(value);
    }
    if (min_exponent_ == 0 || is_zero())
        return value;
    Integer base = x;
    if (min_exponent_ < 0) {
        if (domain_.is_prime_field()) {
            const Integer r = domain_.reduced(x);
            base = static_cast<unsigned long>(inverse_mod(r.get_ui(), domain_.prime()));
        } else if (x == 1 || x == -1) {
            base = x;
        } else {
            throw InvalidArgument("cannot evaluate a negative power at a non-unit integer");
        }
    }
    Integer scale;
    const auto e = static_cast<unsigned long>(min_exponent_ < 0 ? -min_exponent_ : min_exponent_);
    mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), e);
    value *= scale;
    domain_.reduce(value);
    return value;
}

Integer LaurentPolynomial::content() const
{
    if (domain_.is_prime_field())
        return is_zero() ? 0 : 1;
    return dense_content(coefficients_);
}

std::string LaurentPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        const Integer& c = coefficients_[k];
        if (c == 0)
            continue;
        const auto e = min_exponent_ + static_cast<std::int64_t>(k);
        const Integer magnitude = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            out << magnitude.get_str();
            continue;
        }
        if (magnitude != 1)
            out << magnitude.get_str() << '*';
        out << 't';
        if (e != 1)
            out << '^' << e;
    }
    return out.str();
}

LaurentPolynomial substitute_scale(const LaurentPolynomial& f, const Integer& c)
{
    const auto& domain = f.domain();
    if (!domain.is_unit(c))
        throw InvalidArgument("substitute_scale needs a unit scalar, got " + c.get_str() + " over " + domain.to_string());
    if (f.is_zero())
        return f;
    Integer step = domain.reduced(c);
    Integer inverse = step;
    if (domain.is_prime_field())
        inverse = static_cast<unsigned long>(inverse_mod(step.get_ui(), domain.prime()));
    // c^min_exponent, computed through the inverse when the exponent is negative.
    Integer power = 1;
    {
        const Integer& base = f.min_exponent() < 0 ? inverse : step;
        const auto e = static_cast<unsigned long>(f.min_exponent() < 0 ? -f.min_exponent() : f.min_exponent());
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e);
        domain.reduce(power);
    }
    std::vector<Integer> coefficients = f.coefficients();
    for (auto& x : coefficients) {
        x *= power;
        power *= step;
        domain.reduce(power);
    }
    return LaurentPolynomial(domain, f.min_exponent(), std::move(coefficients));
}

LaurentPolynomial reduce_mod(const LaurentPolynomial& f, std::uint32_t p)
{
    const auto field = CoefficientDomain::prime_field(p);
    if (!f.domain().is_integers())
        throw DomainMismatch("reduce_mod expects an integer polynomial, got one over " + f.domain().to_string());
    return LaurentPolynomial(field, f.min_exponent(), f.coefficients());
}

LaurentPolynomial unit_normalize(const LaurentPolynomial& f)
{
    if (f.is_zero())
        return f;
    const auto& domain = f.domain();
    std::vector<Integer> coefficients = f.coefficients();
    if (domain.is_prime_field()) {
        const Integer inverse { static_cast<unsigned long>(inverse_mod(coefficients.front().get_ui(), domain.prime())) };
        for (auto& c : coefficients)
            c *= inverse;
    } else {
        make_primitive(coefficients);
        if (coefficients.front() < 0)
            for (auto& c : coefficients)
                c = -c;
    }
    return LaurentPolynomial(domain, 0, std::move(coefficients));
}

std::optional<LaurentPolynomial> exact_quotient(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    if (!(a.domain() == b.domain()))
        throw DomainMismatch("exact_quotient across domains");
    if (b.is_zero())
        throw InvalidArgument("division by the zero polynomial");
    if (a.is_zero())
        return a;
    const auto& domain = a.domain();
    Dense q;
    if (domain.is_integers()) {
        if (!divide_exact_integers(a.coefficients(), b.coefficients(), q))
            return std::nullopt;
    } else {
        Dense r;
        divide_mod(a.coefficients(), b.coefficients(), domain.prime(), q, r);
        if (!r.empty())
            return std::nullopt;
    }
    return LaurentPolynomial(domain, a.min_exponent() - b.min_exponent(), std::move(q));
}

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    if (!(a.domain() == b.domain()))
        throw DomainMismatch("gcd across domains");
    const auto& domain = a.domain();
    if (a.is_zero())
        return unit_normalize(b);
    if (b.is_zero())
        return unit_normalize(a);
    Dense g = domain.is_integers() ? gcd_integers(a.coefficients(), b.coefficients())
                                   : gcd_mod(a.coefficients(), b.coefficients(), domain.prime());
    return unit_normalize(LaurentPolynomial(domain, 0, std::move(g)));
}

} // namespace talex
