#ifndef SGRAPH_TOOLS_CLI_HPP
#define SGRAPH_TOOLS_CLI_HPP

#include <iosfwd>

namespace sgraph::cli {

/// Exit codes of the sgraph command.
enum ExitCode : int {
  kOk = 0,        // success; graph connected; membership holds
  kNegative = 1,  // disconnected, hypothesis false, membership false, mismatch
  kUsage = 2,     // bad arguments, unparsable input, invalid spec
  kCap = 3,       // exhaustive or quotient cap exceeded
  kInternal = 4,  // an internal consistency check failed
};

/// Runs one sgraph command line. Caps set by flags or the SGRAPH_CAP /
/// SGRAPH_QCAP environment variables apply for the duration of the call.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgraph::cli

#endif  // SGRAPH_TOOLS_CLI_HPP
