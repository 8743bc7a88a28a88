#pragma once

#include <json.hpp>

#include "talex/rational.hpp"

namespace talex {

/// {"minExponent": m, "coefficients": [...]}. Coefficients that do not fit in
/// 64 bits are written as decimal strings.
nlohmann::json to_json(const LaurentPolynomial& f);
/// {"numerator": ..., "denominator": ..., "text": ...}
nlohmann::json to_json(const RationalFunction& r);

/// Inverses of to_json; throw ParseError.
LaurentPolynomial polynomial_from_json(const nlohmann::json& j, const CoefficientDomain& domain);
RationalFunction rational_from_json(const nlohmann::json& j, const CoefficientDomain& domain);

} // namespace talex
