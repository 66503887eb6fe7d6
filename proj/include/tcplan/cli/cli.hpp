#pragma once

#include <ostream>

namespace tcplan::cli {

// Exit codes: 0 success or verification pass, 1 verification failure, 2
// input error. Machine-readable output goes to `out`; diagnostics to `err`.
// `color_allowed` enables ANSI colour on diagnostics unless NO_COLOR is set.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color_allowed = false);

}  // namespace tcplan::cli
