#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqz::cli {

// Exit-code contract: 0 ok, 2 validation error, 3 I/O error,
// 4 theory mismatch (a certified estimate fell below the proven lower
// bound), 1 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitTheoryMismatch = 4;
inline constexpr int kExitInternal = 1;

// Runs the CLI on `args` (without the program name), writing results to
// `out` and diagnostics to `err`. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sqz::cli
