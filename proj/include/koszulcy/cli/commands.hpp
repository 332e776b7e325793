#pragma once

#include "koszulcy/cli/description.hpp"
#include "koszulcy/cli/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace koszulcy::cli {

enum ExitCode : int { kPass = 0, kVerdictFail = 1, kUsage = 2, kResourceGuard = 3 };

enum class SigmaChoice { identity, nakayama, document };

struct RunOptions {
  std::size_t max_degree = 5;
  std::uint64_t seed = 0;
  SigmaChoice sigma = SigmaChoice::nakayama;
  bool fail_on_verdict = true;
  std::size_t word_cap = kDefaultWordCap;
};

struct RunResult {
  int exit_code = kPass;
  Report report;
};

const std::vector<std::string>& command_names();

// Throws ParseError for an unknown choice.
SigmaChoice parse_sigma_choice(const std::string& text);
std::string sigma_name(SigmaChoice choice);

// Never throws: errors become a report with an "error" entry and exit code 2 or 3.
RunResult run(const std::string& command, const std::string& document, const RunOptions& options);

}  // namespace koszulcy::cli
