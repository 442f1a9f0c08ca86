#ifndef ULAB_CLI_HPP
#define ULAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ulab {

// Command-line front end.  Exit codes: 0 success, 2 usage or precondition
// error, 3 budget exhaustion, 4 internal invariant failure.  JSON mode
// writes exactly one result envelope to `out`; diagnostics go to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

} // namespace ulab

#endif
