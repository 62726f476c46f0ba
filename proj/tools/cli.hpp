#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace onto2cdm::cli {

enum ExitStatus : int { kOk = 0, kErrorsFound = 1, kUsageOrInput = 2 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onto2cdm::cli
