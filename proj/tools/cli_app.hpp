#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace layered::cli {

enum ExitCode : int { Ok = 0, ParseFailure = 2, DomainFailure = 3, PreconditionFailure = 4 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace layered::cli
