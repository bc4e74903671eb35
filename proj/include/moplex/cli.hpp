#ifndef MOPLEX_CLI_HPP
#define MOPLEX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace moplex::cli {

/// Runs the command line (without the program name). Exit codes: 0 OPTIMAL,
/// 2 INFEASIBLE, 3 UNBOUNDED, 4 TIME_LIMIT, 1 OTHER_ERROR, 64 usage error,
/// 65 instance parse/schema/validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace moplex::cli

#endif
