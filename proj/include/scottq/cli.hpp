#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "scottq/limits.hpp"
#include "scottq/poset.hpp"

namespace scottq {

// One batch invocation, fully described. Parsed from the command line by
// run_cli; kept as a plain struct so tests can drive commands directly.
struct RunConfig {
  std::string command;                  // check | enumerate | zoo | export-dot
  std::string input;                    // poset file (check / export-dot)
  std::string zoo_entry;                // zoo / export-dot on a catalog entry
  std::vector<std::string> properties;  // check: property names
  std::string experiment = "q-uniqueness";  // enumerate
  std::string action = "claims";            // zoo
  std::vector<int> bounds;  // zoo/export-dot: positional bound overrides
  int n_max = 0;            // enumerate: largest poset size
  std::size_t q_member_cap = limits::kQMemberCap;  // check: family size cap
  std::string format = "text";  // json | text (export-dot always emits dot)
};

// Validates the bound fields (all positive, caps within the documented
// limits) and runs one command, writing the report to `out`. Returns the
// exit code; throws the library error types for run_cli to map.
int run_command(const RunConfig& cfg, std::ostream& out);

// Hasse diagram of the poset in DOT text: one node per element, one edge
// per cover pair drawn upward (rankdir=BT), covers only.
std::string poset_dot(const FinitePoset& p);

// Parses args (program name excluded), runs the command, and maps errors to
// the exit-code table: 0 clean evaluation (false verdicts included),
// 1 unreadable input, 2 violated precondition or defective witness,
// 3 resource-cap refusal. Diagnostics go to `err`, reports to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace scottq
