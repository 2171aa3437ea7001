#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidlink {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitValidation = 2, kExitConvergence = 3 };

/// Entry point of the braidlink tool; args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace braidlink
