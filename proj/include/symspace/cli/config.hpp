#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symspace/numeric/rational.hpp"
#include "symspace/numeric/spd.hpp"

namespace symspace::cli {

/// Suite names accepted by `verify`.
const std::vector<std::string>& suite_names();

/// Model names: geodesic, sl2, sl3, a2-diagram and the negative control broken-sl2.
const std::vector<std::string>& model_names();

/// Fully defaulted and validated run configuration.
struct SuiteConfig {
  std::string suite = "all";
  std::string model = "sl2";
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  unsigned precision_bits = 128;
  std::string abs_tol = "1e-9";
  std::vector<Rational> t_values{Rational(1), Rational(1, 2), Rational(2), Rational(4)};
  std::string diagram = "A2";

  TolerancePolicy policy() const;
  nlohmann::ordered_json to_json() const;
};

/// Values given on the command line; set fields override the config file.
struct ConfigOverrides {
  std::optional<std::string> suite;
  std::optional<std::string> model;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<unsigned> precision_bits;
  std::optional<std::string> abs_tol;
  std::optional<std::string> t_values;  ///< comma-separated "p/q" list
  std::optional<std::string> diagram;
};

/// Comma-separated rationals. Throws Error(ConfigError) naming `field`.
std::vector<Rational> parse_t_values(const std::string& text, const std::string& field);

/// Parses a JSON object over the defaults; empty text means all defaults.
/// Unknown keys, wrong types and malformed values throw Error(ConfigError)
/// naming the field (and the line for syntax errors).
SuiteConfig parse_config_text(const std::string& text, const std::string& origin = "<config>");

/// Reads `path` (if any), applies `flags`, validates.
SuiteConfig load_config(const std::optional<std::string>& path, const ConfigOverrides& flags);

/// Throws Error(ConfigError) for unknown suite/model/diagram names, samples = 0,
/// out-of-range precision, a non-positive abs_tol or a zero t value.
void validate(const SuiteConfig& config);

}  // namespace symspace::cli
