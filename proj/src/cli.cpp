#include "talex/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "talex/error.hpp"
#include "talex/report.hpp"
#include "talex/theorems.hpp"
#include "talex/twisted.hpp"

#ifndef TALEX_DEFAULT_TABLE
#define TALEX_DEFAULT_TABLE "data/knots.json"
#endif
#ifndef TALEX_VERSION
#define TALEX_VERSION "0"
#endif

namespace talex::cli {

namespace {

    using nlohmann::json;

    constexpr std::size_t max_group_order = 2000;

    std::size_t parse_size(const std::string& s)
    {
        const auto v = std::stoull(s);
        if (v == 0 || v > max_group_order)
            throw InvalidArgument("group parameter " + s + " out of range");
        return static_cast<std::size_t>(v);
    }

    FiniteGroup parse_factor(const std::string& spec)
    {
        static const std::regex cyclic_re(R"(C(\d+))"), dihedral_re(R"(D(\d+))"), dicyclic_re(R"(Dic(\d+))"),
            meta_re(R"(G\((\d+),(\d+)\|(\d+)\))"), semi_re(R"(D(\d+)sC(\d+))");
        std::smatch match;
        const auto hint = [](const std::string& what) {
            return InvalidArgument(what
                + " has even degree; its abelianization is not cyclic, so it is not normally generated by one "
                  "element and receives no surjection from a knot group");
        };
        if (std::regex_match(spec, match, cyclic_re))
            return cyclic(parse_size(match[1]));
        if (std::regex_match(spec, match, dicyclic_re)) {
            const auto n = parse_size(match[1]);
            if (n % 2 == 0)
                throw hint(spec);
            return dicyclic(n);
        }
        if (std::regex_match(spec, match, dihedral_re)) {
            const auto n = parse_size(match[1]);
            if (n % 2 == 0)
                throw hint(spec);
            return dihedral(n);
        }
        if (std::regex_match(spec, match, meta_re)) {
            const auto p = parse_size(match[2]);
            if (!is_prime(p))
                throw NotPrime(p);
            return metacyclic(parse_size(match[1]), static_cast<std::uint32_t>(p),
                static_cast<std::uint32_t>(std::stoull(match[3])));
        }
        if (std::regex_match(spec, match, semi_re)) {
            if (match[1] != match[2])
                throw InvalidArgument("semidirect product needs DpsCp");
            const auto p = parse_size(match[1]);
            if (!is_prime(p) || p < 3)
                throw NotPrime(p);
            return dp_semidirect_cp(static_cast<std::uint32_t>(p));
        }
        if (spec == "A4")
            return alternating4();
        throw InvalidArgument("unknown group '" + spec + "'");
    }

    struct Outcome {
        int code = ok;
        json result;
        std::string text;
        std::string error;
    };

    // Exit precedence when aggregating: bad input, budget, mismatch, no surjection.
    int rank(int code)
    {
        switch (code) {
        case bad_input:
            return 4;
        case budget_exceeded:
            return 3;
        case mismatch:
            return 2;
        case no_surjection:
            return 1;
        default:
            return 0;
        }
    }

    template <class F>
    Outcome guarded(F&& body)
    {
        try {
            return body();
        } catch (const BudgetExceeded& e) {
            return { budget_exceeded, nullptr, {}, e.what() };
        } catch (const Error& e) {
            return { bad_input, nullptr, {}, e.what() };
        } catch (const std::exception& e) {
            return { bad_input, nullptr, {}, e.what() };
        }
    }

    json images_json(const Homomorphism& f) { return json(f.images); }

    std::string images_text(const Homomorphism& f)
    {
        std::string s = "(";
        for (std::size_t i = 0; i < f.images.size(); ++i)
            s += (i ? "," : "") + std::to_string(f.images[i]);
        return s + ")";
    }

    class App {
    public:
        App(RunConfig config, std::ostream& out, std::ostream& err)
            : config_(std::move(config))
            , out_(out)
            , err_(err)
        {
        }

        int run()
        {
            if (config_.command == "groups")
                return list_groups();
            if (config_.modulus && !is_prime(*config_.modulus))
                throw NotPrime(*config_.modulus);
            if (config_.search_budget == 0)
                throw InvalidArgument("budget must be positive");
            load_knots();

            std::vector<Outcome> outcomes(knots_.size());
            std::optional<FiniteGroup> group;
            std::optional<TheoremCase> theorem;
            if (config_.command == "compute" || config_.command == "surjections") {
                group = parse_group_spec(config_.group_spec);
                if (config_.command == "surjections" && !is_normally_generated_by_one(*group))
                    throw InvalidArgument(group->name() + " is not normally generated by one element");
            }
            if (config_.command == "verify")
                theorem = build_case();

            const auto count = static_cast<std::int64_t>(knots_.size());
#pragma omp parallel for schedule(dynamic, 1)
            for (std::int64_t i = 0; i < count; ++i) {
                const auto& [name, pres] = knots_[static_cast<std::size_t>(i)];
                auto& o = outcomes[static_cast<std::size_t>(i)];
                if (config_.command == "alexander")
                    o = guarded([&] { return alexander(name, pres); });
                else if (config_.command == "compute")
                    o = guarded([&] { return compute(name, pres, *group); });
                else if (config_.command == "surjections")
                    o = guarded([&] { return surjections(name, pres, *group); });
                else
                    o = guarded([&] { return verify(name, pres, *theorem); });
            }
            return emit(outcomes);
        }

    private:
        RunConfig config_;
        std::ostream& out_;
        std::ostream& err_;
        std::vector<std::pair<std::string, KnotPresentation>> knots_;

        void load_knots()
        {
            if (config_.all_knots && !config_.knot_names.empty())
                throw InvalidArgument("--knot and --all-knots are exclusive");
            if (!config_.all_knots && config_.knot_names.empty())
                throw InvalidArgument("no knot given; use --knot or --all-knots");
            const auto table = load_knot_table(config_.knot_table_path);
            auto add = [&](const std::string& name, const KnotPresentation& p) {
                knots_.emplace_back(name, config_.simplify ? simplify_presentation(p) : p);
            };
            if (config_.all_knots) {
                for (const auto& [name, p] : table)
                    add(name, p);
                return;
            }
            for (const auto& name : config_.knot_names) {
                const auto it = table.find(name);
                if (it == table.end())
                    throw InvalidArgument("unknown knot '" + name + "'");
                add(name, it->second);
            }
        }

        TheoremCase build_case()
        {
            if (config_.case_name.empty())
                throw InvalidArgument("verify needs --case");
            const auto kind = parse_case_kind(config_.case_name);
            auto need = [&](const std::optional<std::int64_t>& v, const char* flag) {
                if (!v)
                    throw InvalidArgument(config_.case_name + " needs --" + flag);
                return *v;
            };
            const auto n = config_.n.value_or(1);
            TheoremCase c;
            switch (kind) {
            case CaseKind::cyclic:
                c = TheoremCase::cyclic(need(config_.n, "n"));
                break;
            case CaseKind::dihedral:
                c = TheoremCase::dihedral(need(config_.p, "p"), n);
                break;
            case CaseKind::dihedral_times_cyclic:
                c = TheoremCase::dihedral_times_cyclic(need(config_.p, "p"), n, need(config_.m, "m"));
                break;
            case CaseKind::metacyclic:
                c = TheoremCase::metacyclic(need(config_.m, "m"), need(config_.p, "p"), need(config_.k, "k"));
                break;
            case CaseKind::dicyclic:
                c = TheoremCase::dicyclic(need(config_.p, "p"), n);
                break;
            case CaseKind::a4:
                c = TheoremCase::a4();
                break;
            case CaseKind::d3c3:
                c = TheoremCase::d3c3();
                break;
            case CaseKind::conjecture:
                c = TheoremCase::conjecture(need(config_.p, "p"));
                break;
            }
            if (config_.modulus)
                c.modulus = config_.modulus;
            c.validate();
            return c;
        }

        SearchOptions search_options(bool up_to_conjugacy) const { return { up_to_conjugacy, config_.search_budget }; }

        Outcome alexander(const std::string& name, const KnotPresentation& pres) const
        {
            const auto delta = alexander_polynomial(pres);
            return { ok, { { "knot", name }, { "polynomial", to_json(delta) }, { "text", delta.to_string() } },
                name + ": " + delta.to_string(), {} };
        }

        Outcome compute(const std::string& name, const KnotPresentation& pres, const FiniteGroup& group) const
        {
            const auto g = std::make_shared<const FiniteGroup>(group);
            const auto homs = find_meridional_surjections(pres, *g, search_options(config_.up_to_conjugacy));
            const auto rep = regular_representation(*g);
            const auto domain
                = config_.modulus ? CoefficientDomain::prime_field(*config_.modulus) : CoefficientDomain::integers();
            json list = json::array();
            std::ostringstream text;
            text << name << " -> " << g->name() << " over " << domain.to_string() << ": " << homs.size()
                 << " surjection(s)";
            for (const auto& h : homs) {
                const auto r = wada_invariant(pres, Homomorphism { g, h.images }, rep, domain);
                list.push_back({ { "images", images_json(h) }, { "invariant", to_json(r.normalized) },
                    { "droppedGenerator", r.dropped_generator } });
                text << "\n  " << images_text(h) << "  " << r.normalized.to_string();
            }
            json result { { "knot", name }, { "group", g->name() }, { "order", g->order() },
                { "modulus", config_.modulus ? json(*config_.modulus) : json(nullptr) },
                { "upToConjugacy", config_.up_to_conjugacy }, { "surjections_found", homs.size() },
                { "surjections", list } };
            return { homs.empty() ? no_surjection : ok, result, text.str(), {} };
        }

        Outcome surjections(const std::string& name, const KnotPresentation& pres, const FiniteGroup& group) const
        {
            const auto all = find_meridional_surjections(pres, group, search_options(false));
            const auto classes = find_meridional_surjections(pres, group, search_options(true));
            const auto& listed = config_.up_to_conjugacy ? classes : all;
            json list = json::array();
            std::ostringstream text;
            text << name << " -> " << group.name() << ": " << all.size() << " surjection(s), " << classes.size()
                 << " up to conjugacy";
            for (const auto& h : listed) {
                list.push_back(images_json(h));
                text << "\n  " << images_text(h);
            }
            json result { { "knot", name }, { "group", group.name() }, { "count", all.size() },
                { "count_up_to_conjugacy", classes.size() }, { "upToConjugacy", config_.up_to_conjugacy },
                { "surjections", list } };
            return { all.empty() ? no_surjection : ok, result, text.str(), {} };
        }

        Outcome verify(const std::string& name, const KnotPresentation& pres, const TheoremCase& c) const
        {
            const auto record = verify_congruence(pres, name, c, search_options(true));
            std::ostringstream text;
            text << name << " -> " << record.group << " [" << to_string(c.kind) << (c.modulus ? ", mod " + std::to_string(*c.modulus) : std::string(", exact"))
                 << "]: " << record.surjections_found << " surjection(s) up to conjugacy";
            if (record.vacuous())
                text << ", vacuous";
            for (std::size_t i = 0; i < record.lhs.size(); ++i)
                text << "\n  " << (record.verdicts[i] ? "true " : "FALSE") << "  " << record.lhs[i].to_string();
            text << "\n  rhs    " << record.rhs.to_string();
            return { record.all_true() ? ok : mismatch, record.to_json(), text.str(), {} };
        }

        int list_groups()
        {
            json list = json::array();
            std::ostringstream text;
            text << "spec syntax: Cn, Dn (n odd), Dicn (n odd), G(m,p|k), A4, DpsCp, products with x, cayley:<path>\n";
            text << "groups of order < 24 normally generated by one element:";
            for (const auto& c : order_below_24_cases()) {
                const auto g = c.group();
                list.push_back({ { "group", g.name() }, { "order", g.order() }, { "case", to_string(c.kind) },
                    { "parameters", c.parameters } });
                text << "\n  " << g.name() << "  order " << g.order() << "  case " << to_string(c.kind);
            }
            if (config_.output_format == "json")
                out_ << envelope(list).dump(2) << "\n";
            else
                out_ << text.str() << "\n";
            return ok;
        }

        json envelope(json results) const
        {
            json cfg { { "table", config_.knot_table_path }, { "knots", config_.knot_names },
                { "allKnots", config_.all_knots }, { "group", config_.group_spec }, { "case", config_.case_name },
                { "modulus", config_.modulus ? json(*config_.modulus) : json(nullptr) },
                { "format", config_.output_format }, { "budget", config_.search_budget },
                { "upToConjugacy", config_.up_to_conjugacy }, { "simplify", config_.simplify } };
            for (auto [key, v] : { std::pair { "p", config_.p }, { "n", config_.n }, { "m", config_.m }, { "k", config_.k } })
                cfg[key] = v ? json(*v) : json(nullptr);
            return { { "version", TALEX_VERSION }, { "command", config_.command }, { "config", cfg },
                { "results", std::move(results) } };
        }

        int emit(const std::vector<Outcome>& outcomes)
        {
            int code = ok;
            bool any_surjection = false;
            json results = json::array();
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                const auto& o = outcomes[i];
                if (!o.error.empty()) {
                    err_ << knots_[i].first << ": " << o.error << "\n";
                    results.push_back({ { "knot", knots_[i].first }, { "error", o.error }, { "exitCode", o.code } });
                } else {
                    results.push_back(o.result);
                    if (config_.output_format != "json")
                        out_ << o.text << "\n";
                }
                if (o.code != no_surjection && rank(o.code) > rank(code))
                    code = o.code;
                any_surjection = any_surjection || (o.error.empty() && o.code != no_surjection);
            }
            if (config_.output_format == "json")
                out_ << envelope(results).dump(2) << "\n";
            // no_surjection only when every knot came back empty
            if (code == ok && !outcomes.empty() && !any_surjection
                && (config_.command == "compute" || config_.command == "surjections"))
                code = no_surjection;
            return code;
        }
    };

} // namespace

FiniteGroup parse_group_spec(const std::string& spec)
{
    if (spec.empty())
        throw InvalidArgument("no group given; use --group");
    if (spec.rfind("cayley:", 0) == 0)
        return load_cayley_group(spec.substr(7));
    std::vector<std::string> factors;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i)
        if (i == spec.size() || spec[i] == 'x') {
            factors.push_back(spec.substr(start, i - start));
            start = i + 1;
        }
    auto g = parse_factor(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) {
        auto h = parse_factor(factors[i]);
        if (g.order() * h.order() > max_group_order)
            throw InvalidArgument("group order too large");
        g = direct_product(g, h);
    }
    return g;
}

std::string default_table_path()
{
    if (const char* env = std::getenv("TALEX_TABLE"); env && *env)
        return env;
    return TALEX_DEFAULT_TABLE;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    CLI::App app { "Twisted knot invariants over finite groups and congruence checks", "talex" };
    app.require_subcommand(1);
    std::string table;
    auto common = [&](CLI::App* sub, bool knots) {
        if (knots) {
            sub->add_option("--knot", config.knot_names, "knot name from the table (repeatable)");
            sub->add_flag("--all-knots", config.all_knots, "every knot in the table");
            sub->add_option("--table", table, "knot table JSON (default: $TALEX_TABLE or the bundled table)");
            sub->add_flag("!--no-simplify", config.simplify, "use the Wirtinger presentation as is");
        }
        sub->add_option("--format", config.output_format, "text or json")->check(CLI::IsMember({ "text", "json" }));
    };
    auto search = [&](CLI::App* sub) {
        sub->add_option("--budget", config.search_budget, "maximum search nodes");
        sub->add_flag("--up-to-conjugacy", config.up_to_conjugacy, "one surjection per conjugacy orbit");
    };
    auto* alexander = app.add_subcommand("alexander", "classical Alexander polynomial");
    common(alexander, true);
    auto* compute = app.add_subcommand("compute", "twisted invariant of the regular representation per surjection");
    common(compute, true);
    search(compute);
    compute->add_option("--group", config.group_spec, "group spec")->required();
    compute->add_option("--mod", config.modulus, "compute over GF(p)");
    auto* verify = app.add_subcommand("verify", "check a congruence formula");
    common(verify, true);
    verify->add_option("--budget", config.search_budget, "maximum search nodes");
    verify->add_option("--case", config.case_name,
        "cyclic, dihedral, dihedral_times_cyclic, metacyclic, dicyclic, a4, d3c3, conjecture")->required();
    verify->add_option("--p", config.p);
    verify->add_option("--n", config.n);
    verify->add_option("--m", config.m);
    verify->add_option("--k", config.k);
    verify->add_option("--mod", config.modulus, "modulus; must match the case except for cyclic");
    auto* surj = app.add_subcommand("surjections", "meridional surjections onto a group");
    common(surj, true);
    search(surj);
    surj->add_option("--group", config.group_spec, "group spec")->required();
    auto* groups = app.add_subcommand("groups", "group catalog");
    groups->require_subcommand(1);
    auto* list = groups->add_subcommand("list", "groups of order < 24 covered by the formulas");
    common(list, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int rc = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return rc == 0 ? ok : bad_input;
    }
    config.command = app.get_subcommands().front()->get_name();
    config.knot_table_path = table.empty() ? default_table_path() : table;
    try {
        return App(std::move(config), out, err).run();
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return budget_exceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
}

} // namespace talex::cli
