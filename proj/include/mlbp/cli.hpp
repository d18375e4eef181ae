#pragma once

#include <iosfwd>

namespace mlbp {

/// Exit codes: 0 success (optimal / feasible / bi-connected), 1 usage or I/O
/// error, 2 infeasible, 3 `check` found the graph not bi-connected, 4 a limit
/// stopped the exact search.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlbp
