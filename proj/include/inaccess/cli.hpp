#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace inaccess {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidDomain = 2,
  kExitNotConverged = 3,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes the figure set into `dir` and returns the file names written.
std::vector<std::string> write_figures(const std::filesystem::path& dir);

}  // namespace inaccess
