#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhotensor::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Full command-line front end.  args excludes the program name.  Reports go
// to out, diagnostics to err.  Returns the process exit code: 0 all checks
// passed, 1 a mathematical check failed, 2 usage or guard error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhotensor::cli
