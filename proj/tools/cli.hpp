#ifndef MODEC_CLI_HPP
#define MODEC_CLI_HPP

#include <iosfwd>

namespace modec::cli {

/// Runs one CLI invocation against explicit streams so tests can drive the
/// binary in-process. Returns the process exit status: 0 success, 1 domain
/// failure, 2 usage or input parse failure.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace modec::cli

#endif
