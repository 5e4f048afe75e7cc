#pragma once

#include <ostream>

namespace onefact {

// Exit codes: 0 success, 1 parse or validation error, 2 pipeline failure or
// verification violations.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitFailure = 2;

// Subcommands gen, factorize and verify. Stats and reports go to `out`,
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace onefact
