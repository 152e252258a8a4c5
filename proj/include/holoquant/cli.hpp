#pragma once

#include <ostream>

namespace holoquant::cli {

enum ExitCode { kOk = 0, kSelftestFailure = 1, kUsage = 2, kIo = 3 };

// Subcommands: kernel, transform, husimi, quantize, toeplitz, su2-heat,
// su2-transform, selftest, quadrature.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holoquant::cli
