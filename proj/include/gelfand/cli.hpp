#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gelfand/weyl.hpp"

namespace gelfand::cli {

/// Parsed command-line configuration.
struct RunConfig {
  std::string command;
  GroupType group;
  bool dual = false;
  bool json = false;
  unsigned long long max_order = 1'000'000;  // capacity guard, group elements
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. Exit codes: 0 success/verified, 1 a mathematical
/// verification failed, 2 usage or capacity error. JSON mode writes exactly
/// one JSON document to `out`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gelfand::cli
