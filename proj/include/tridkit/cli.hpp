#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tridkit {

/// Full command-line surface of the tridkit tool, driven in-process.
/// Returns the process exit code: 0 success, 1 usage or input errors,
/// 2 singular matrix (inv/factors), 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace tridkit
