#pragma once

// Executes a parsed command.  Exit codes: 0 success or realizable,
// 1 negative or inconclusive, 2 usage, 3 internal or module error.

#include <string>
#include <vector>

#include <json.hpp>

#include "inertia/cli/command.hpp"
#include "inertia/group/finite_group.hpp"
#include "inertia/local/verdict.hpp"

namespace inertia::cli {

struct Report {
  int exit_code = 0;
  nlohmann::json json;             // schema-stable, keys sorted
  std::vector<std::string> lines;  // text rendering
};

Report run(const Command& cmd);
std::string emit(const Report& report, Format format);

// Parses argv, runs and writes to the streams; returns the exit code.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

// Witness (de)serialisation.  Group elements use the element format of G.
nlohmann::json verdict_to_json(const local::RealizabilityVerdict& v, const group::FiniteGroup* G);
local::LocalWitness local_witness_from_json(const group::FiniteGroup& G, const nlohmann::json& j);
local::AbelianWitness abelian_witness_from_json(const nlohmann::json& j);

}  // namespace inertia::cli
