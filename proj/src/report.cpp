#include "talex/report.hpp"

#include "talex/error.hpp"

namespace talex {

nlohmann::json to_json(const LaurentPolynomial& f)
{
    auto coefficients = nlohmann::json::array();
    for (const auto& c : f.coefficients()) {
        if (c.fits_slong_p())
            coefficients.push_back(c.get_si());
        else
            coefficients.push_back(c.get_str());
    }
    return { { "minExponent", f.is_zero() ? 0 : f.min_exponent() }, { "coefficients", coefficients } };
}

nlohmann::json to_json(const RationalFunction& r)
{
    return { { "numerator", to_json(r.numerator()) }, { "denominator", to_json(r.denominator()) },
        { "text", r.to_string() } };
}

LaurentPolynomial polynomial_from_json(const nlohmann::json& j, const CoefficientDomain& domain)
{
    try {
        std::vector<Integer> coefficients;
        for (const auto& c : j.at("coefficients")) {
            if (c.is_string())
                coefficients.emplace_back(c.get<std::string>());
            else
                coefficients.emplace_back(static_cast<long>(c.get<std::int64_t>()));
        }
        return LaurentPolynomial(domain, j.at("minExponent").get<std::int64_t>(), std::move(coefficients));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polynomial: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad coefficient: ") + e.what());
    }
}

RationalFunction rational_from_json(const nlohmann::json& j, const CoefficientDomain& domain)
{
    try {
        return RationalFunction(
            polynomial_from_json(j.at("numerator"), domain), polynomial_from_json(j.at("denominator"), domain));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad rational function: ") + e.what());
    }
}

} // namespace talex
