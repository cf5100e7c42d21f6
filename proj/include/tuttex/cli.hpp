#ifndef TUTTEX_CLI_HPP
#define TUTTEX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tuttex::cli {

/// Runs the command line given argv-style arguments (without the program
/// name). Exit codes: 0 all checks passed, 1 a verification check failed,
/// 2 usage, parse, precondition, or cap errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tuttex::cli

#endif
