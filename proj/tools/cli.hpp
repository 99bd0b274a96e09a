#ifndef LENERGY_TOOLS_CLI_HPP
#define LENERGY_TOOLS_CLI_HPP

#include <ostream>

namespace lenergy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lenergy::cli

#endif  // LENERGY_TOOLS_CLI_HPP
