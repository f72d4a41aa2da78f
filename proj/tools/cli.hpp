#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crosscalc::cli {

/// Exit codes: 0 success, 1 usage or IO error, 2 a verification failed.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kVerifyFailed = 2;

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crosscalc::cli
