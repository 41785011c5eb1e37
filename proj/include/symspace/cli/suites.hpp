#pragma once

#include <iosfwd>

#include "symspace/cli/report.hpp"

namespace symspace::cli {

/// Runs config.suite at config.precision_bits. Unknown suites throw
/// Error(ConfigError).
Report run_suite(const SuiteConfig& config);

/// Process entry point: parses arguments, runs the subcommand, writes the
/// report to `out` (or --out), diagnostics to `err`. Returns 0 when every
/// case passes, 1 on any failure, 2 on configuration or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symspace::cli
