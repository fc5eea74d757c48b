#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fpcomm::cli {

inline constexpr int kSchemaVersion = 1;

// Runs one command line (without the program name). Writes the JSON report to
// out and a one-line summary to err. Returns 0 on pass, 1 on a failed check,
// 2 on usage or parameter errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpcomm::cli
