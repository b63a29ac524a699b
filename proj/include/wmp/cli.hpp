#ifndef WMP_CLI_HPP
#define WMP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wmp {

// Entry point of the `wmp` tool, separated from main() so tests can run
// commands in process.  `args` excludes the program name.  Returns the
// process exit code: 0 success, 1 negative verdict under a --fail-on-*
// flag or a sweep mismatch, 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wmp

#endif
