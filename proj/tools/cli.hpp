#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace essentia::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

/// Largest --max-order accepted by `sweep`.
inline constexpr unsigned long long kSweepCap = 128;

/// Runs one command line (program name excluded). Reports go to `out`,
/// diagnostics to `err`; `in` is read when the input argument is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace essentia::cli
