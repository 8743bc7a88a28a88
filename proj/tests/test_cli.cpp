#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "talex/cli.hpp"
#include "talex/error.hpp"
#include "talex/report.hpp"
#include "talex/roots.hpp"

using namespace talex;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return { code, out.str(), err.str() };
}

json run_json(std::vector<std::string> args, int expected_code = 0)
{
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    CHECK_MESSAGE(r.code == expected_code, r.err);
    return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& contents)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path.string();
}

} // namespace

TEST_CASE("group specs")
{
    CHECK(cli::parse_group_spec("C5").order() == 5);
    CHECK(cli::parse_group_spec("D9").order() == 18);
    CHECK(cli::parse_group_spec("Dic3").order() == 12);
    CHECK(cli::parse_group_spec("G(3,7|2)").order() == 21);
    CHECK(cli::parse_group_spec("A4").order() == 12);
    CHECK(cli::parse_group_spec("D3xC3").order() == 18);
    CHECK(cli::parse_group_spec("D3sC3").order() == 18);
    CHECK(cli::parse_group_spec("C2xC2").order() == 4);
    CHECK(cli::parse_group_spec("D3xC3").name() == "D3xC3");
    for (const char* even : { "D4", "Dic2", "D10" }) {
        try {
            cli::parse_group_spec(even);
            FAIL("accepted ", even);
        } catch (const InvalidArgument& e) {
            CHECK(std::string(e.what()).find("normally generated") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(cli::parse_group_spec("Q8"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_group_spec("G(3,9|2)"), NotPrime);
    CHECK_THROWS_AS(cli::parse_group_spec("D3sC5"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_group_spec(""), InvalidArgument);

    const auto path = temp_file("talex_c3.json", R"({"name": "Z3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})");
    const auto g = cli::parse_group_spec("cayley:" + path);
    CHECK(g.order() == 3);
    CHECK(run({ "surjections", "--knot", "3_1", "--group", "cayley:" + path }).code == cli::ok);
}

TEST_CASE("alexander command")
{
    const auto r = run({ "alexander", "--knot", "3_1" });
    CHECK(r.code == cli::ok);
    CHECK(r.out.find("t^2 - t + 1") != std::string::npos);
    CHECK(run({ "alexander", "--knot", "0_1" }).out == "0_1: 1\n");

    const auto j = run_json({ "alexander", "--knot", "3_1" });
    CHECK(j["version"].is_string());
    CHECK(j["command"] == "alexander");
    CHECK(j["config"]["knots"] == json::array({ "3_1" }));
    CHECK(j["results"][0]["polynomial"] == json({ { "minExponent", 0 }, { "coefficients", { 1, -1, 1 } } }));

    const auto bad = run({ "alexander", "--knot", "99_1" });
    CHECK(bad.code == cli::bad_input);
    CHECK(bad.err.find("99_1") != std::string::npos);
    CHECK(run({ "alexander" }).code == cli::bad_input);
    CHECK(run({ "frobnicate" }).code == cli::bad_input);
    CHECK(run({ "alexander", "--knot", "3_1", "--format", "yaml" }).code == cli::bad_input);
    CHECK(run({ "--help" }).code == cli::ok);
}

TEST_CASE("compute command")
{
    const auto j = run_json({ "compute", "--knot", "3_1", "--group", "C2" });
    const auto& s = j["results"][0]["surjections"];
    REQUIRE(s.size() == 1);
    const auto delta = LaurentPolynomial::from_ints({ 1, -1, 1 });
    const auto expected = RationalFunction(delta * substitute_scale(delta, -1), LaurentPolynomial::from_ints({ -1, 0, 1 }));
    CHECK(equal_up_to_unit(rational_from_json(s[0]["invariant"], CoefficientDomain::integers()), expected));

    CHECK(run({ "compute", "--knot", "4_1", "--group", "D3" }).code == cli::no_surjection);
    CHECK(run({ "compute", "--knot", "3_1", "--group", "D3", "--mod", "4" }).code == cli::bad_input);

    const auto m = run_json({ "compute", "--knot", "3_1", "--group", "D3", "--mod", "3" });
    CHECK(m["results"][0]["modulus"] == 3);
    CHECK(m["results"][0]["surjections_found"] == 6);

    // mixed sweep: some knots have surjections, so the run succeeds
    const auto path = temp_file("talex_two.json",
        R"({"knots":[{"name":"3_1","pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]},{"name":"4_1","pd":[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]}]})");
    const auto sweep = run_json({ "compute", "--all-knots", "--table", path, "--group", "D3", "--up-to-conjugacy" });
    CHECK(sweep["results"].size() == 2);
    CHECK(sweep["results"][0]["surjections_found"] == 1);
    CHECK(sweep["results"][1]["surjections_found"] == 0);
}

TEST_CASE("verify command")
{
    CHECK(run({ "verify", "--case", "dihedral", "--p", "3", "--knot", "3_1" }).code == cli::ok);
    const auto cyclic = run_json({ "verify", "--case", "cyclic", "--n", "3", "--all-knots" });
    CHECK(cyclic["results"].size() >= 6);
    for (const auto& r : cyclic["results"]) {
        CHECK(r["modulus"].is_null());
        for (const auto& v : r["verdicts"])
            CHECK(v == true);
    }
    const auto conj = run_json({ "verify", "--case", "conjecture", "--p", "3", "--knot", "8_18" });
    const auto d3c3 = run_json({ "verify", "--case", "d3c3", "--knot", "8_18" });
    CHECK(conj["results"][0]["lhs"] == d3c3["results"][0]["lhs"]);
    CHECK(conj["results"][0]["rhs"] == d3c3["results"][0]["rhs"]);

    CHECK(run({ "verify", "--case", "dihedral", "--p", "4", "--knot", "3_1" }).code == cli::bad_input);
    CHECK(run({ "verify", "--case", "dihedral", "--p", "3", "--mod", "5", "--knot", "3_1" }).code == cli::bad_input);
    CHECK(run({ "verify", "--case", "dihedral", "--knot", "3_1" }).code == cli::bad_input);
    CHECK(run({ "verify", "--case", "metacyclic", "--m", "3", "--p", "7", "--k", "3", "--knot", "6_1" }).code
        == cli::bad_input);
    CHECK(run({ "verify", "--case", "cyclic", "--n", "2", "--mod", "5", "--knot", "5_2" }).code == cli::ok);
    // vacuous: no surjection is still a pass
    CHECK(run({ "verify", "--case", "dihedral", "--p", "3", "--knot", "4_1" }).code == cli::ok);
}

TEST_CASE("surjections command")
{
    const auto r = run({ "surjections", "--knot", "3_1", "--group", "D3" });
    CHECK(r.code == cli::ok);
    CHECK(r.out.find("6 surjection(s), 1 up to conjugacy") != std::string::npos);
    const auto j = run_json({ "surjections", "--knot", "3_1", "--group", "D3" });
    CHECK(j["results"][0]["count"] == 6);
    CHECK(j["results"][0]["count_up_to_conjugacy"] == 1);
    CHECK(j["results"][0]["surjections"].size() == 6);

    const auto v4 = run({ "surjections", "--knot", "3_1", "--group", "C2xC2" });
    CHECK(v4.code == cli::bad_input);
    CHECK(v4.err.find("not normally generated by one element") != std::string::npos);

    const auto empty = temp_file("talex_empty.json", R"({"knots": []})");
    const auto e = run_json({ "surjections", "--all-knots", "--table", empty, "--group", "D3" });
    CHECK(e["results"].empty());

    CHECK(run({ "surjections", "--knot", "8_18", "--group", "D3sC3", "--budget", "10" }).code == cli::budget_exceeded);
    CHECK(run({ "surjections", "--knot", "8_18", "--group", "D3", "--budget", "0" }).code == cli::bad_input);
}

TEST_CASE("groups list")
{
    const auto j = run_json({ "groups", "list" });
    CHECK(j["results"].size() == 35);
    for (const auto& g : j["results"])
        CHECK(g["order"] < 24);
    CHECK(run({ "groups", "list" }).out.find("G(3,7|2)") != std::string::npos);
}

TEST_CASE("table from the environment")
{
    const auto path = temp_file("talex_one.json", R"({"knots":[{"name":"3_1","pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]}]})");
    ::setenv("TALEX_TABLE", path.c_str(), 1);
    const auto j = run_json({ "alexander", "--all-knots" });
    ::unsetenv("TALEX_TABLE");
    CHECK(j["results"].size() == 1);
    CHECK(j["config"]["table"] == path);
}

TEST_CASE("reports round-trip and agree with text")
{
    for (const auto& group : { "D3", "C4", "A4" }) {
        const auto j = run_json({ "compute", "--knot", "3_1", "--group", group, "--mod", "5", "--up-to-conjugacy" });
        const auto text = run({ "compute", "--knot", "3_1", "--group", group, "--mod", "5", "--up-to-conjugacy" }).out;
        const auto& result = j["results"][0];
        CHECK(text.find(std::to_string(result["surjections_found"].get<int>()) + " surjection(s)") != std::string::npos);
        for (const auto& s : result["surjections"]) {
            const auto r = rational_from_json(s["invariant"], CoefficientDomain::prime_field(5));
            CHECK(rational_normalize(r) == r);
            CHECK(to_json(r) == s["invariant"]);
            CHECK(text.find(r.to_string()) != std::string::npos);
        }
    }
}
