#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudospin::cli
{
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;

//! Invalid flag values, ranges, config files or output paths.
class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Replace "--config FILE" (or "--config=FILE") by the flags stored in the
//! JSON object FILE, inserted right after the subcommand so that flags
//! given on the command line take precedence. Arrays become comma lists,
//! booleans become bare flags when true.
std::vector<std::string> expand_config(std::vector<std::string> const& args);

//! Parse and run one invocation; args[0] is the program name. Data goes to
//! --out (or `out` when absent or "-"), diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);
} // namespace pseudospin::cli
