#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace casweep::cli {

enum Exit : int { Ok = 0, Negative = 1, Usage = 2, Cap = 3 };

// Runs one subcommand; args exclude the program name. The JSON report goes to
// `out`, a human summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casweep::cli
