#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "susynu/app/config.hpp"
#include "susynu/app/ledger.hpp"
#include "susynu/app/table.hpp"

namespace susynu::app {

/// Exit codes: 0 success, 1 verification mismatch or solver failure,
/// 2 invalid flags or parameters.
enum ExitCode : int { kOk = 0, kFailed = 1, kConfig = 2 };

/// Parses `args` (without the program name) and runs the subcommand. Tables
/// go to --out, or to `out` when no path is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Table cmd_spectrum(const RunConfig& cfg);

struct VerifyResult {
  bool agree = false;
  std::vector<LedgerEntry> ledger;
  std::string summary;
};
VerifyResult cmd_verify(const RunConfig& cfg);

Table cmd_wavefunction(const RunConfig& cfg, int n);

}  // namespace susynu::app
