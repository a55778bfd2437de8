#pragma once

#include <iosfwd>

namespace rls::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kNumericFailure = 3 };

/// The rls command line. Reports go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rls::cli
