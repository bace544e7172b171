#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tropigraph/threshold.hpp"

namespace tropigraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

// Runs one tropigraph command. `args` excludes the program name. Graphs are
// read from `in`; results go to `out`; diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

// Reads TROPIGRAPH_EXACT_LIMIT ("vertices" or "vertices,edges") over the
// default limits. Throws ParseError on a malformed value.
SearchLimits limits_from_env();

}  // namespace tropigraph
