#ifndef GOSUM_CLI_HPP
#define GOSUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gosum
{

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_not_summable = 2;

// Entry point of the gosum command line; args[0] is the program name.
// Subcommands: sum, corrections, tables, verify.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gosum

#endif
