#ifndef MIDLEVELS_CLI_HPP
#define MIDLEVELS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace midlevels {

// Runs the command-line surface. Returns the process exit code:
// 0 on success, 1 on failed checks, 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace midlevels

#endif
