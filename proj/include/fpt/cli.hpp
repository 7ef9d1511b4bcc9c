#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpt {

// Full command-line front end; returns the process exit code
// (0 success, 1 domain error, 2 usage error).
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace fpt
