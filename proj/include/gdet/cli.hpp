#pragma once

// The `gdet` command line: det, factor, witness, classify, lambda, search,
// selftest. Exit codes: 0 success, 1 a claimed value failed recomputation
// (or a selftest criterion failed), 2 usage or parse error, 3 internal error.

#include <iosfwd>
#include <string>
#include <vector>

namespace gdet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdet::cli
