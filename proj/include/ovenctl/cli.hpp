#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ovenctl::cli {

/**
 * Command-line entry point. args excludes the program name.
 *
 * Exit codes: 0 success, 1 numerical failure, 2 usage error,
 * 3 design infeasible (uncontrollable / unobservable / ill conditioned).
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ovenctl::cli
