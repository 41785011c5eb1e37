#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symspace/cli/config.hpp"
#include "symspace/reflection/residual.hpp"

namespace symspace::cli {

enum class CaseStatus { Pass, Fail, Skipped };

std::string to_string(CaseStatus status);

struct Case {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  CaseStatus status = CaseStatus::Pass;
  std::string residual = "exact-zero";  ///< "exact-zero" or a 20-digit decimal
  std::string tolerance;
  std::optional<std::string> witness;  ///< matrix dump or counterexample
};

/// Machine-readable suite report. Cases are sorted by name on output, so the
/// bytes depend only on (config, seed, precision).
class Report {
 public:
  Report(std::string suite, SuiteConfig config) : suite_(std::move(suite)), config_(std::move(config)) {}

  /// Adds a case; failing cases without a witness get one describing the failure.
  void add(Case c);
  /// Adds a case from a pass flag and residual.
  void add(std::string name, nlohmann::ordered_json params, bool pass, const Residual& residual,
           std::optional<std::string> witness = std::nullopt);

  const std::vector<Case>& cases() const { return cases_; }
  const std::string& suite() const { return suite_; }
  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }

  void set_wall_time_ms(double ms) { wall_time_ms_ = ms; }

  nlohmann::ordered_json to_json() const;
  std::string str() const;  ///< pretty JSON plus trailing newline

 private:
  std::string suite_;
  SuiteConfig config_;
  std::vector<Case> cases_;
  std::optional<double> wall_time_ms_;
};

}  // namespace symspace::cli
