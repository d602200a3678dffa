#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weiljac_cli/config.hpp"

namespace weiljac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv, dispatches one command and writes its output. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const EnvLookup& env = process_env());
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env = process_env());

}  // namespace weiljac::cli
