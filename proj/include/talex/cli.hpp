#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "talex/groups.hpp"

namespace talex::cli {

enum ExitCode : int { ok = 0, mismatch = 1, no_surjection = 2, bad_input = 3, budget_exceeded = 4 };

struct RunConfig {
    std::string command;
    std::string knot_table_path;
    std::vector<std::string> knot_names;
    bool all_knots = false;
    std::string group_spec;
    std::string case_name;
    std::optional<std::int64_t> p, n, m, k;
    std::optional<std::uint32_t> modulus;
    std::string output_format = "text";
    std::uint64_t search_budget = 100'000'000;
    bool up_to_conjugacy = false;
    bool simplify = true;
};

/// C5, D9, Dic3, G(3,7|2), A4, D3sC3, products joined by 'x' (D3xC3,
/// C2xC2), cayley:<path>. Even-degree D and Dic are rejected.
FiniteGroup parse_group_spec(const std::string& spec);

/// --table, else $TALEX_TABLE, else the bundled table.
std::string default_table_path();

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace talex::cli
