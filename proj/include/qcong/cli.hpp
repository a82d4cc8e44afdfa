#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcong {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`. Returns 0 when every check passes, 1 when any fails
/// and 2 for usage or configuration errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcong
