#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace genrank::cli {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 semantic negative, 2 input error (JSON error object on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genrank::cli
