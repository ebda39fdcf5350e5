#ifndef PBMOTZ_TOOLS_CLI_HPP_
#define PBMOTZ_TOOLS_CLI_HPP_

#include <iostream>

namespace pbmotz::cli {

// Runs one CLI invocation.  Results go to `out`, diagnostics to `err`.
// Exit code 0 on success / all-pass, 1 on verification mismatch, 2 on
// usage error.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace pbmotz::cli

#endif  // PBMOTZ_TOOLS_CLI_HPP_
