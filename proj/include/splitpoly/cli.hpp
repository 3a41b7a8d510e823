#ifndef SPLITPOLY_CLI_HPP
#define SPLITPOLY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace splitpoly::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs one subcommand. args excludes the program name. Reports go to out,
/// diagnostics to err. Returns 0 when everything checked passes, 1 on a
/// failed check or computation, 2 on bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitpoly::cli

#endif
