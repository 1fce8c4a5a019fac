#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace mmfvs::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kBudget = 3 };

struct RunReport {
  std::vector<std::string> command;
  nlohmann::json body;  // the document printed on `out`
  int exit_code = kUsage;
};

// Runs one subcommand. `args` excludes the program name. Machine output goes
// to `out` (JSON, or CSV for bench), a one-line summary to `err`.
RunReport run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmfvs::cli
