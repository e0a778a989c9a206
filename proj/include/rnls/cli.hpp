#pragma once

#include <ostream>
#include <string>

#include "rnls/config.hpp"

namespace rnls {

/// Process exit codes: usage/config errors, domain rejections, declared
/// tolerance failures, and solver non-convergence are kept distinct.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kToleranceFailure = 3,
  kNoConvergence = 4,
};

/// Effective output directory: RNLS_OUT_DIR overrides the config.
std::string resolve_out_dir(const RunConfig& cfg);

int cmd_exponents(const RunConfig& cfg, std::ostream& out);
int cmd_strichartz_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_duhamel_check(const RunConfig& cfg, std::ostream& out);
int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_report(const std::string& dir, std::ostream& out);

}  // namespace rnls
