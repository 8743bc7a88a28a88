#include "talex/groups.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "talex/error.hpp"

namespace talex {

namespace {

    using Table = std::vector<std::vector<Element>>;

    template <class Index, class Multiply>
    Table build_table(std::size_t n, Index&& decode, Multiply&& multiply)
    {
        Table table(n, std::vector<Element>(n));
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                table[x][y] = multiply(decode(x), decode(y));
        return table;
    }

    std::size_t mod(std::int64_t x, std::size_t n)
    {
        const auto m = static_cast<std::int64_t>(n);
        return static_cast<std::size_t>(((x % m) + m) % m);
    }

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::map<std::string, Element> labels, std::string name)
    : table_(std::move(table))
    , labels_(std::move(labels))
    , name_(std::move(name))
{
    const std::size_t n = table_.size();
    if (n == 0)
        throw InvalidArgument("a group needs at least one element");
    for (const auto& row : table_) {
        if (row.size() != n)
            throw InvalidArgument("Cayley table is not square");
        std::vector<bool> seen(n, false);
        for (Element x : row) {
            if (x >= n)
                throw InvalidArgument("Cayley table entry " + std::to_string(x) + " out of range");
            if (seen[x])
                throw InvalidArgument("Cayley table is not a Latin square (repeated entry in a row)");
            seen[x] = true;
        }
    }
    for (Element col = 0; col < n; ++col) {
        std::vector<bool> seen(n, false);
        for (Element row = 0; row < n; ++row) {
            const Element x = table_[row][col];
            if (seen[x])
                throw InvalidArgument("Cayley table is not a Latin square (repeated entry in a column)");
            seen[x] = true;
        }
    }
    bool found = false;
    for (Element e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
            ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw InvalidArgument("Cayley table has no two-sided identity");
    inverses_.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
        const auto it = std::find(table_[x].begin(), table_[x].end(), identity_);
        inverses_[x] = static_cast<Element>(it - table_[x].begin());
        if (table_[inverses_[x]][x] != identity_)
            throw InvalidArgument("element " + std::to_string(x) + " has no two-sided inverse");
    }
    if (n <= 64)
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw InvalidArgument("Cayley table is not associative");
    for (const auto& [label, x] : labels_)
        if (x >= n)
            throw InvalidArgument("label " + label + " points outside the group");
}

Element FiniteGroup::power(Element g, std::int64_t k) const
{
    Element base = k < 0 ? inverse(g) : g;
    auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
    Element result = identity_;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Element FiniteGroup::label(const std::string& name) const
{
    const auto it = labels_.find(name);
    if (it == labels_.end())
        throw InvalidArgument("group " + name_ + " has no element labelled " + name);
    return it->second;
}

FiniteGroup cyclic(std::size_t n)
{
    if (n == 0)
        throw InvalidArgument("cyclic group of order 0");
    auto table = build_table(
        n, [](Element x) { return x; }, [n](Element x, Element y) { return (x + y) % n; });
    return FiniteGroup(std::move(table), { { "a", n == 1 ? 0 : 1 } }, "C" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n)
{
    if (n < 2)
        throw InvalidArgument("dihedral group needs n >= 2");
    struct Pair {
        std::int64_t i;
        int e;
    };
    auto decode = [n](Element x) { return Pair { static_cast<std::int64_t>(x % n), static_cast<int>(x / n) }; };
    auto multiply = [n](Pair x, Pair y) {
        const std::int64_t i = x.i + (x.e ? -y.i : y.i);
        return mod(i, n) + n * static_cast<std::size_t>((x.e + y.e) % 2);
    };
    return FiniteGroup(build_table(2 * n, decode, multiply), { { "a", 1 }, { "b", n } }, "D" + std::to_string(n));
}

FiniteGroup dicyclic(std::size_t n)
{
    if (n < 2)
        throw InvalidArgument("dicyclic group needs n >= 2");
    const std::size_t two_n = 2 * n;
    struct Pair {
        std::int64_t i;
        int e;
    };
    auto decode = [two_n](Element x) { return Pair { static_cast<std::int64_t>(x % two_n), static_cast<int>(x / two_n) }; };
    // b a^j = a^-j b and b^2 = a^n.
    auto multiply = [n, two_n](Pair x, Pair y) {
        std::int64_t i = x.i + (x.e ? -y.i : y.i);
        int e = x.e + y.e;
        if (e == 2) {
            e = 0;
            i += static_cast<std::int64_t>(n);
        }
        return mod(i, two_n) + two_n * static_cast<std::size_t>(e);
    };
    return FiniteGroup(build_table(2 * two_n, decode, multiply), { { "a", 1 }, { "b", two_n } },
        "Dic" + std::to_string(n));
}

FiniteGroup metacyclic(std::size_t m, std::uint32_t p, std::uint32_t k)
{
    if (!is_prime(p) || p == 2)
        throw NotPrime(p);
    if (m < 2)
        throw InvalidArgument("metacyclic group needs m >= 2");
    if ((p - 1) % m != 0)
        throw InvalidArgument(std::to_string(p) + " is not 1 modulo " + std::to_string(m));
    if (power_mod(k, m, p) != 1)
        throw InvalidArgument(std::to_string(k) + "^" + std::to_string(m) + " is not 1 modulo " + std::to_string(p));
    for (std::size_t d = 1; d < m; ++d)
        if (power_mod(k, d, p) == 1)
            throw InvalidArgument(std::to_string(k) + " has order " + std::to_string(d) + " < " + std::to_string(m)
                + " modulo " + std::to_string(p));
    std::vector<std::uint64_t> kpow(m);
    for (std::size_t e = 0; e < m; ++e)
        kpow[e] = power_mod(k, e, p);
    struct Pair {
        std::size_t i;
        std::size_t e;
    };
    auto decode = [p](Element x) { return Pair { x % p, x / p }; };
    // (a^i b^e)(a^j b^f) = a^(i + j k^e) b^(e + f)
    auto multiply = [&](Pair x, Pair y) {
        const auto i = (x.i + y.i * kpow[x.e]) % p;
        return static_cast<std::size_t>(i) + p * ((x.e + y.e) % m);
    };
    return FiniteGroup(build_table(m * p, decode, multiply), { { "a", 1 }, { "b", p } },
        "G(" + std::to_string(m) + "," + std::to_string(p) + "|" + std::to_string(k) + ")");
}

FiniteGroup alternating4()
{
    using Perm = std::array<int, 4>;
    const Perm identity { 0, 1, 2, 3 };
    const Perm a { 1, 2, 0, 3 };
    const Perm b { 1, 0, 3, 2 };
    auto compose = [](const Perm& g, const Perm& h) {
        Perm out {};
        for (int x = 0; x < 4; ++x)
            out[x] = g[h[x]];
        return out;
    };
    std::vector<Perm> elements { identity };
    for (std::size_t next = 0; next < elements.size(); ++next)
        for (const auto& s : { a, b }) {
            const auto y = compose(elements[next], s);
            if (std::find(elements.begin(), elements.end(), y) == elements.end())
                elements.push_back(y);
        }
    auto index = [&](const Perm& g) {
        return static_cast<Element>(std::find(elements.begin(), elements.end(), g) - elements.begin());
    };
    const std::size_t n = elements.size();
    Table table(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            table[x][y] = index(compose(elements[x], elements[y]));
    return FiniteGroup(std::move(table), { { "a", index(a) }, { "b", index(b) } }, "A4");
}

FiniteGroup dp_semidirect_cp(std::uint32_t p)
{
    if (!is_prime(p) || p == 2)
        throw NotPrime(p);
    const std::size_t q = p;
    struct Triple {
        std::int64_t i;
        std::int64_t j;
        int e;
    };
    auto decode = [q](Element x) {
        return Triple { static_cast<std::int64_t>(x % q), static_cast<std::int64_t>((x / q) % q),
            static_cast<int>(x / (q * q)) };
    };
    auto multiply = [q](Triple x, Triple y) {
        const std::int64_t s = x.e ? -1 : 1;
        return mod(x.i + s * y.i, q) + q * mod(x.j + s * y.j, q) + q * q * static_cast<std::size_t>((x.e + y.e) % 2);
    };
    return FiniteGroup(build_table(2 * q * q, decode, multiply), { { "a", 1 }, { "b", q }, { "c", q * q } },
        "D" + std::to_string(p) + "sC" + std::to_string(p));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h)
{
    const std::size_t ng = g.order();
    const std::size_t n = ng * h.order();
    Table table(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            table[x][y] = g.mul(x % ng, y % ng) + ng * h.mul(x / ng, y / ng);
    std::map<std::string, Element> labels;
    for (const auto& [name, x] : g.labels())
        labels[name] = x + ng * h.identity();
    for (const auto& [name, y] : h.labels())
        labels[name + "'"] = g.identity() + ng * y;
    return FiniteGroup(std::move(table), std::move(labels), g.name() + "x" + h.name());
}

std::size_t element_order(const FiniteGroup& g, Element x)
{
    std::size_t k = 1;
    for (Element y = x; y != g.identity(); y = g.mul(y, x))
        ++k;
    return k;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g)
{
    const std::size_t n = g.order();
    std::vector<bool> assigned(n, false);
    std::vector<ConjugacyClass> classes;
    for (Element x = 0; x < n; ++x) {
        if (assigned[x])
            continue;
        ConjugacyClass cls { x, {} };
        for (Element h = 0; h < n; ++h) {
            const Element y = g.conjugate(x, h);
            if (!assigned[y]) {
                assigned[y] = true;
                cls.members.push_back(y);
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& generators)
{
    std::vector<bool> in(g.order(), false);
    std::vector<Element> members { g.identity() };
    in[g.identity()] = true;
    for (std::size_t next = 0; next < members.size(); ++next)
        for (Element s : generators) {
            const Element y = g.mul(members[next], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<Element> normal_closure(const FiniteGroup& g, const std::vector<Element>& elements)
{
    std::vector<bool> seen(g.order(), false);
    std::vector<Element> conjugates;
    for (Element x : elements)
        for (Element h = 0; h < g.order(); ++h) {
            const Element y = g.conjugate(x, h);
            if (!seen[y]) {
                seen[y] = true;
                conjugates.push_back(y);
            }
        }
    return generated_subgroup(g, conjugates);
}

std::optional<Element> is_normally_generated_by_one(const FiniteGroup& g)
{
    for (const auto& cls : conjugacy_classes(g))
        if (normal_closure(g, { cls.representative }).size() == g.order())
            return cls.representative;
    return std::nullopt;
}

FiniteGroup parse_cayley_group(const std::string& json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("Cayley table: ") + e.what());
    }
    try {
        const auto order = doc.at("order").get<std::size_t>();
        auto table = doc.at("table").get<Table>();
        if (table.size() != order)
            throw ParseError("Cayley table has " + std::to_string(table.size()) + " rows, order says "
                + std::to_string(order));
        std::map<std::string, Element> labels;
        if (doc.contains("labels"))
            labels = doc.at("labels").get<std::map<std::string, Element>>();
        std::string name = doc.value("name", std::string("cayley"));
        FiniteGroup group(std::move(table), std::move(labels), std::move(name));
        if (doc.contains("identity") && doc.at("identity").get<Element>() != group.identity())
            throw ParseError("declared identity " + doc.at("identity").dump() + " is not the identity of the table");
        return group;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("Cayley table: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("Cayley table: ") + e.what());
    }
}

FiniteGroup load_cayley_group(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open Cayley table file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_cayley_group(text.str());
}

MatrixRep::MatrixRep(FiniteGroup group, std::vector<IntMatrix> images, CoefficientDomain domain)
    : group_(std::move(group))
    , dimension_(images.empty() ? 0 : images.front().size())
    , domain_(domain)
    , images_(std::move(images))
{
    const std::size_t n = group_.order();
    if (images_.size() != n)
        throw InvalidArgument("representation needs one image per group element");
    if (dimension_ == 0)
        throw InvalidArgument("representation of dimension 0");
    for (auto& m : images_) {
        if (m.size() != dimension_)
            throw InvalidArgument("representation images differ in size");
        if (domain_.is_prime_field())
            m = m.reduced(domain_.prime());
    }
    if (!(images_[group_.identity()] == IntMatrix::identity(dimension_)))
        throw InvalidArgument("representation does not send the identity to the identity matrix");

    const bool permutation = std::all_of(images_.begin(), images_.end(), [](const IntMatrix& m) { return m.is_permutation(); });
    if (permutation) {
        permutations_.resize(n);
        for (Element g = 0; g < n; ++g) {
            permutations_[g].resize(dimension_);
            for (std::size_t j = 0; j < dimension_; ++j)
                for (std::size_t i = 0; i < dimension_; ++i)
                    if (images_[g](i, j) == 1)
                        permutations_[g][j] = i;
        }
        for (Element g = 0; g < n; ++g)
            for (Element h = 0; h < n; ++h) {
                const auto& gh = permutations_[group_.mul(g, h)];
                for (std::size_t j = 0; j < dimension_; ++j)
                    if (gh[j] != permutations_[g][permutations_[h][j]])
                        throw InvalidArgument("representation is not a homomorphism");
            }
        return;
    }
    const double work = static_cast<double>(n) * n * dimension_ * dimension_ * dimension_;
    if (work > 2e7)
        return;
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h) {
            const auto product = domain_.is_prime_field() ? images_[g].multiply_mod(images_[h], domain_.prime())
                                                          : images_[g] * images_[h];
            if (!(product == images_[group_.mul(g, h)]))
                throw InvalidArgument("representation is not a homomorphism");
        }
}

MatrixRep regular_representation(const FiniteGroup& g)
{
    const std::size_t n = g.order();
    std::vector<IntMatrix> images(n, IntMatrix(n));
    for (Element x = 0; x < n; ++x)
        for (Element h = 0; h < n; ++h)
            images[x](g.mul(x, h), h) = 1;
    return MatrixRep(g, std::move(images));
}

MatrixRep trivial_representation(const FiniteGroup& g)
{
    return MatrixRep(g, std::vector<IntMatrix>(g.order(), IntMatrix::identity(1)));
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b)
{
    if (!(a.group() == b.group()))
        throw InvalidArgument("direct sum of representations of different groups");
    if (!(a.domain() == b.domain()))
        throw DomainMismatch("direct sum of representations over different domains");
    const std::size_t da = a.dimension();
    const std::size_t d = da + b.dimension();
    std::vector<IntMatrix> images;
    for (Element g = 0; g < a.group().order(); ++g) {
        IntMatrix m(d);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j)
                m(i, j) = a.image(g)(i, j);
        for (std::size_t i = 0; i < b.dimension(); ++i)
            for (std::size_t j = 0; j < b.dimension(); ++j)
                m(da + i, da + j) = b.image(g)(i, j);
        images.push_back(std::move(m));
    }
    return MatrixRep(a.group(), std::move(images), a.domain());
}

} // namespace talex
