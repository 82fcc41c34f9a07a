#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpz::cli {

/// Exit status for malformed flags or values.
inline constexpr int kUsageExit = 64;
/// Exit status when an output file cannot be written.
inline constexpr int kIoExit = 74;

/// Runs one command line (without the program name). Library errors exit
/// with the numeric ErrorCode and a one-line JSON record on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tpz::cli
