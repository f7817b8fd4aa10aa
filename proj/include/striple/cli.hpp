#ifndef STRIPLE_CLI_HPP
#define STRIPLE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace striple {

// Dispatches the subcommands (verify, generate, search, specialize, symbolic,
// corpus). Exit code 0: success/verified; 1: verification failed or
// degenerate construction; 2: invalid input.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace striple

#endif
