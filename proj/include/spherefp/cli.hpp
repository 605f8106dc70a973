#pragma once

#include <string>
#include <vector>

namespace spherefp::cli {

/// Runs the command-line front end. Returns the process exit code:
/// 0 success, 2 usage error, 3 numerical/degeneracy error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // argv[1:]; convenient for tests

}  // namespace spherefp::cli
