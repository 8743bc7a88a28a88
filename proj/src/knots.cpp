#include "talex/knots.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "talex/error.hpp"
#include "talex/matrix.hpp"

namespace talex {

FreeWord free_reduce(const FreeWord& w)
{
    FreeWord out;
    out.reserve(w.size());
    for (int letter : w) {
        if (letter == 0)
            throw InvalidArgument("free word contains the letter 0");
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

FreeWord inverse(const FreeWord& w)
{
    FreeWord out(w.rbegin(), w.rend());
    for (auto& letter : out)
        letter = -letter;
    return out;
}

FreeWord concat(const FreeWord& a, const FreeWord& b)
{
    FreeWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

FreeWord cyclic_reduce(const FreeWord& w)
{
    FreeWord r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
        ++lo;
        --hi;
    }
    return FreeWord(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::int64_t abelian_exponent(const FreeWord& w)
{
    std::int64_t sum = 0;
    for (int letter : w)
        sum += letter > 0 ? 1 : -1;
    return sum;
}

GroupRingElement GroupRingElement::word(const FreeWord& w, std::int64_t coefficient)
{
    GroupRingElement e;
    e.add(w, coefficient);
    return e;
}

void GroupRingElement::add(const FreeWord& w, std::int64_t coefficient)
{
    if (coefficient == 0)
        return;
    const auto key = free_reduce(w);
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add(w, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b)
{
    GroupRingElement out;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_)
            out.add(concat(u, v), c * d);
    return out;
}

std::string GroupRingElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        const auto magnitude = c < 0 ? -c : c;
        if (w.empty()) {
            out << magnitude;
            continue;
        }
        if (magnitude != 1)
            out << magnitude << '*';
        for (std::size_t i = 0; i < w.size(); ++i) {
            out << (i ? " " : "") << 'x' << (w[i] > 0 ? w[i] : -w[i]);
            if (w[i] < 0)
                out << "^-1";
        }
    }
    return out.str();
}

GroupRingElement fox_derivative(const FreeWord& w, int j, int generator_count)
{
    if (j < 1 || j > generator_count)
        throw InvalidArgument("Fox derivative with respect to x_" + std::to_string(j) + " but there are "
            + std::to_string(generator_count) + " generators");
    GroupRingElement out;
    FreeWord prefix;
    for (int letter : free_reduce(w)) {
        if (letter == j) {
            out.add(prefix, 1);
        } else if (letter == -j) {
            FreeWord term = prefix;
            term.push_back(letter);
            out.add(term, -1);
        }
        prefix.push_back(letter);
    }
    return out;
}

void KnotPresentation::validate() const
{
    if (generator_count < 1)
        throw InvalidArgument("presentation needs at least one generator");
    for (std::size_t r = 0; r < relators.size(); ++r) {
        for (int letter : relators[r])
            if (letter == 0 || letter > generator_count || -letter > generator_count)
                throw InvalidArgument("relator " + std::to_string(r + 1) + " uses letter " + std::to_string(letter)
                    + " outside 1.." + std::to_string(generator_count));
        if (meridional && abelian_exponent(relators[r]) != 0)
            throw InvalidArgument("relator " + std::to_string(r + 1) + " has nonzero exponent sum");
    }
}

void PDCode::validate() const
{
    const auto n = static_cast<int>(crossings.size());
    const int edges = 2 * n;
    std::vector<int> count(static_cast<std::size_t>(edges) + 1, 0);
    for (std::size_t c = 0; c < crossings.size(); ++c)
        for (int label : crossings[c]) {
            if (label < 1 || label > edges)
                throw InvalidArgument("crossing " + std::to_string(c + 1) + " uses edge " + std::to_string(label)
                    + " outside 1.." + std::to_string(edges));
            ++count[static_cast<std::size_t>(label)];
        }
    for (int label = 1; label <= edges; ++label)
        if (count[static_cast<std::size_t>(label)] != 2)
            throw InvalidArgument("edge " + std::to_string(label) + " occurs "
                + std::to_string(count[static_cast<std::size_t>(label)]) + " times, expected 2");
    auto next = [edges](int e) { return e % edges + 1; };
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        const auto& [i, j, k, l] = crossings[c];
        if (k != next(i))
            throw InvalidArgument("crossing " + std::to_string(c + 1) + ": outgoing under-edge " + std::to_string(k)
                + " does not follow incoming edge " + std::to_string(i));
        if (j != next(l) && l != next(j))
            throw InvalidArgument("crossing " + std::to_string(c + 1) + ": over-edges " + std::to_string(j) + " and "
                + std::to_string(l) + " are not consecutive");
    }
}

KnotPresentation wirtinger_from_pd(const PDCode& pd)
{
    pd.validate();
    KnotPresentation out;
    if (pd.crossings.empty())
        return out;
    const auto edges = 2 * pd.crossings.size();
    std::vector<std::size_t> parent(edges + 1);
    for (std::size_t e = 0; e <= edges; ++e)
        parent[e] = e;
    auto find = [&](std::size_t e) {
        while (parent[e] != e)
            e = parent[e] = parent[parent[e]];
        return e;
    };
    for (const auto& x : pd.crossings) {
        const auto a = find(static_cast<std::size_t>(x[1]));
        const auto b = find(static_cast<std::size_t>(x[3]));
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    // Roots are the smallest edge of each arc; number arcs in that order.
    std::vector<int> arc(edges + 1, 0);
    int arcs = 0;
    for (std::size_t e = 1; e <= edges; ++e)
        if (find(e) == e)
            arc[e] = ++arcs;
    for (std::size_t e = 1; e <= edges; ++e)
        arc[e] = arc[find(e)];

    out.generator_count = arcs;
    const auto n = static_cast<int>(edges);
    for (std::size_t c = 0; c + 1 < pd.crossings.size(); ++c) {
        const auto& [i, j, k, l] = pd.crossings[c];
        const int a = arc[static_cast<std::size_t>(i)];
        const int b = arc[static_cast<std::size_t>(k)];
        const int over = arc[static_cast<std::size_t>(j)];
        const bool over_runs_l_to_j = j == l % n + 1;
        FreeWord relator = over_runs_l_to_j ? FreeWord { over, a, -over, -b } : FreeWord { -over, a, over, -b };
        out.relators.push_back(std::move(relator));
    }
    out.validate();
    return out;
}

namespace {

    struct Elimination {
        std::size_t relator;
        int generator;
        FreeWord replacement; // x_generator = replacement
        std::size_t cost;
    };

    std::optional<Elimination> best_elimination(const KnotPresentation& p, std::size_t max_length)
    {
        std::optional<Elimination> best;
        for (std::size_t r = 0; r < p.relators.size(); ++r) {
            const auto& rel = p.relators[r];
            for (int g = 1; g <= p.generator_count; ++g) {
                std::size_t occurrences = 0, position = 0;
                for (std::size_t i = 0; i < rel.size(); ++i)
                    if (rel[i] == g || rel[i] == -g) {
                        ++occurrences;
                        position = i;
                    }
                if (occurrences != 1)
                    continue;
                // rel = u x^e v, so x^e = u^-1 v^-1 = (v u)^-1.
                FreeWord vu(rel.begin() + static_cast<std::ptrdiff_t>(position) + 1, rel.end());
                vu.insert(vu.end(), rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(position));
                vu = free_reduce(vu);
                FreeWord replacement = rel[position] > 0 ? inverse(vu) : vu;
                std::size_t cost = 0;
                bool fits = true;
                for (std::size_t s = 0; s < p.relators.size() && fits; ++s) {
                    if (s == r)
                        continue;
                    std::size_t length = 0;
                    for (int letter : p.relators[s])
                        length += (letter == g || letter == -g) ? replacement.size() : 1;
                    fits = length <= max_length;
                    cost += length;
                }
                if (!fits)
                    continue;
                if (!best || cost < best->cost)
                    best = Elimination { r, g, std::move(replacement), cost };
            }
        }
        return best;
    }

} // namespace

KnotPresentation simplify_presentation(const KnotPresentation& p, std::size_t max_relator_length)
{
    p.validate();
    KnotPresentation out = p;
    for (auto& r : out.relators)
        r = cyclic_reduce(r);
    while (out.generator_count > 1) {
        const auto step = best_elimination(out, max_relator_length);
        if (!step)
            break;
        const int g = step->generator;
        const auto replaced_inverse = inverse(step->replacement);
        std::vector<FreeWord> relators;
        for (std::size_t s = 0; s < out.relators.size(); ++s) {
            if (s == step->relator)
                continue;
            FreeWord w;
            for (int letter : out.relators[s]) {
                if (letter == g)
                    w.insert(w.end(), step->replacement.begin(), step->replacement.end());
                else if (letter == -g)
                    w.insert(w.end(), replaced_inverse.begin(), replaced_inverse.end());
                else
                    w.push_back(letter);
            }
            for (auto& letter : w)
                if (letter > g)
                    --letter;
                else if (letter < -g)
                    ++letter;
            relators.push_back(cyclic_reduce(w));
        }
        out.relators = std::move(relators);
        --out.generator_count;
    }
    out.validate();
    return out;
}

Integer alexander_value_at_one(const KnotPresentation& p)
{
    p.validate();
    const auto m = static_cast<std::size_t>(p.generator_count);
    if (p.relators.size() + 1 != m)
        throw InvalidArgument("expected " + std::to_string(m - 1) + " relators, found " + std::to_string(p.relators.size()));
    const auto zz = CoefficientDomain::integers();
    PolyMatrix jacobian(m - 1, m - 1, zz);
    for (std::size_t r = 0; r + 1 < m; ++r)
        for (std::size_t j = 0; j + 1 < m; ++j) {
            std::int64_t sum = 0;
            const auto d = fox_derivative(p.relators[r], static_cast<int>(j + 1), p.generator_count);
            for (const auto& [w, c] : d.terms())
                sum += c;
            jacobian.set(r, j, LaurentPolynomial::constant(zz, static_cast<long>(sum)));
        }
    const auto det = determinant(jacobian);
    return det.is_zero() ? Integer(0) : det.coefficient(0);
}

bool KnotNameLess::operator()(const std::string& a, const std::string& b) const
{
    auto key = [](const std::string& s) {
        long crossings = -1, index = -1;
        const auto underscore = s.find('_');
        if (underscore != std::string::npos) {
            std::from_chars(s.data(), s.data() + underscore, crossings);
            std::from_chars(s.data() + underscore + 1, s.data() + s.size(), index);
        }
        return std::tuple(crossings < 0, crossings, index);
    };
    const auto ka = key(a), kb = key(b);
    if (ka != kb)
        return ka < kb;
    return a < b;
}

KnotTable parse_knot_table(const std::string& json_text)
{
    KnotTable table;
    if (json_text.find_first_not_of(" \t\r\n") == std::string::npos)
        return table;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("knot table: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("knots") || !doc["knots"].is_array())
        throw ParseError("knot table: expected an object with a \"knots\" array");
    std::size_t index = 0;
    for (const auto& entry : doc["knots"]) {
        ++index;
        std::string where = "knot table entry " + std::to_string(index);
        try {
            const auto name = entry.at("name").get<std::string>();
            where += " (" + name + ")";
            KnotPresentation presentation;
            if (entry.contains("pd")) {
                PDCode pd;
                for (const auto& x : entry.at("pd"))
                    pd.crossings.push_back(x.get<std::array<int, 4>>());
                presentation = wirtinger_from_pd(pd);
            } else {
                presentation.generator_count = entry.at("generators").get<int>();
                presentation.relators = entry.at("relators").get<std::vector<FreeWord>>();
                presentation.meridional = true;
                presentation.validate();
            }
            const auto at_one = alexander_value_at_one(presentation);
            if (at_one != 1 && at_one != -1)
                throw ParseError("Alexander polynomial at 1 is " + at_one.get_str() + ", not +-1");
            if (!table.emplace(name, std::move(presentation)).second)
                throw ParseError("duplicate knot name");
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const InvalidArgument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return table;
}

KnotTable load_knot_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open knot table " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_knot_table(text.str());
}

} // namespace talex
