#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freemeixner::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Output goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a verification suite
/// fails, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freemeixner::cli
