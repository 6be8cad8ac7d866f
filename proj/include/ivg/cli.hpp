#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ivg {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 yes/ok, 1 no/violation, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivg
