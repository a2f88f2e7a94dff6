#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wtreereg {

/// Entry point of the `wtreereg` command line tool; `args` excludes argv[0].
/// Returns a process exit code (see exit_code in harness.hpp).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wtreereg
