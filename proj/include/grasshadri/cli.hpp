#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grasshadri::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitHypothesisUnavailable = 2;
inline constexpr int kExitOracleDisagreement = 3;

/// Runs the command line front end. args excludes the program name.
/// Reports go to out (or to the --json path), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grasshadri::cli
