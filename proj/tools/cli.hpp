#ifndef NDSORT_TOOLS_CLI_HPP
#define NDSORT_TOOLS_CLI_HPP

#include <ostream>

namespace ndsort::cli {

enum ExitCode : int {
    Success = 0,
    VerificationMismatch = 2,
    InputError = 3,
};

/// Entry point of the `ndsort` tool; writes normal output to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ndsort::cli

#endif
