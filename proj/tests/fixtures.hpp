#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "talex/knots.hpp"
#include "talex/polynomial.hpp"

namespace fixture {

inline const talex::KnotTable& table()
{
    static const auto t = talex::load_knot_table(std::string(TALEX_DATA_DIR) + "/knots.json");
    return t;
}

inline const talex::KnotPresentation& knot(const std::string& name) { return table().at(name); }

// Alexander polynomials from the KnotInfo database, ascending coefficients.
inline const std::map<std::string, talex::LaurentPolynomial>& knotinfo_alexander()
{
    static const auto out = [] {
        std::ifstream in(std::string(TALEX_TEST_DATA_DIR) + "/knotinfo_alexander.json");
        const auto j = nlohmann::json::parse(in);
        std::map<std::string, talex::LaurentPolynomial> m;
        for (const auto& [name, coefficients] : j.items()) {
            std::vector<talex::Integer> c;
            for (const auto& x : coefficients)
                c.emplace_back(x.get<long>());
            m.emplace(name, talex::LaurentPolynomial(talex::CoefficientDomain::integers(), 0, c));
        }
        return m;
    }();
    return out;
}

inline talex::FreeWord random_word(std::mt19937_64& rng, int generators, int max_length)
{
    std::uniform_int_distribution<int> length(0, max_length);
    std::uniform_int_distribution<int> letter(1, generators);
    std::bernoulli_distribution negative(0.5);
    talex::FreeWord w;
    for (int k = length(rng); k > 0; --k)
        w.push_back(negative(rng) ? -letter(rng) : letter(rng));
    return w;
}

} // namespace fixture
