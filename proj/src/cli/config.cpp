#include "symspace/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace symspace::cli {

namespace {

[[noreturn]] void config_error(const std::string& message) { throw Error(ErrorCode::ConfigError, message); }

bool contains(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

void apply(SuiteConfig& config, const ConfigOverrides& o) {
  if (o.suite) config.suite = *o.suite;
  if (o.model) config.model = *o.model;
  if (o.seed) config.seed = *o.seed;
  if (o.samples) config.samples = *o.samples;
  if (o.precision_bits) config.precision_bits = *o.precision_bits;
  if (o.abs_tol) config.abs_tol = *o.abs_tol;
  if (o.t_values) config.t_values = parse_t_values(*o.t_values, "t_values");
  if (o.diagram) config.diagram = *o.diagram;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",           "axioms",         "central-extension", "cocone",
                                              "commutator",    "factorization",  "matrix-lemma",      "perfectness",
                                              "so2-residuals"};
  return names;
}

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names{"geodesic", "sl2", "sl3", "a2-diagram", "broken-sl2"};
  return names;
}

TolerancePolicy SuiteConfig::policy() const { return TolerancePolicy{Real::parse(abs_tol)}; }

nlohmann::ordered_json SuiteConfig::to_json() const {
  nlohmann::ordered_json ts = nlohmann::ordered_json::array();
  for (const auto& t : t_values) ts.push_back(t.str());
  return {{"suite", suite},
          {"model", model},
          {"seed", seed},
          {"samples", samples},
          {"precision_bits", precision_bits},
          {"abs_tol", abs_tol},
          {"t_values", ts},
          {"diagram", diagram}};
}

std::vector<Rational> parse_t_values(const std::string& text, const std::string& field) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    try {
      out.push_back(Rational::parse(item));
    } catch (const Error& e) {
      config_error("field '" + field + "': malformed rational \"" + item + "\" (" + e.what() + ")");
    }
  }
  if (out.empty()) config_error("field '" + field + "': expected at least one rational");
  return out;
}

SuiteConfig parse_config_text(const std::string& text, const std::string& origin) {
  SuiteConfig config;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return config;

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    config_error(origin + ": " + e.what());
  }
  if (!doc.is_object()) config_error(origin + ": top level must be a JSON object");

  auto need = [&](const std::string& key, bool ok, const char* expected) {
    if (!ok) config_error(origin + ": field '" + key + "' must be " + expected);
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "suite" || key == "model" || key == "abs_tol" || key == "diagram") {
      need(key, value.is_string(), "a string");
      const std::string s = value.get<std::string>();
      if (key == "suite") config.suite = s;
      if (key == "model") config.model = s;
      if (key == "abs_tol") config.abs_tol = s;
      if (key == "diagram") config.diagram = s;
    } else if (key == "seed") {
      need(key, value.is_number_unsigned(), "a non-negative integer");
      config.seed = value.get<std::uint64_t>();
    } else if (key == "samples") {
      need(key, value.is_number_unsigned(), "a positive integer");
      config.samples = value.get<std::size_t>();
    } else if (key == "precision_bits") {
      need(key, value.is_number_unsigned(), "a positive integer");
      config.precision_bits = value.get<unsigned>();
    } else if (key == "t_values") {
      need(key, value.is_array(), "an array of \"p/q\" strings");
      config.t_values.clear();
      for (const auto& item : value) {
        need(key, item.is_string(), "an array of \"p/q\" strings");
        auto parsed = parse_t_values(item.get<std::string>(), key);
        config.t_values.insert(config.t_values.end(), parsed.begin(), parsed.end());
      }
    } else {
      config_error(origin + ": unknown key '" + key + "'");
    }
  }
  return config;
}

void validate(const SuiteConfig& config) {
  if (!contains(suite_names(), config.suite)) {
    config_error("field 'suite': unknown suite '" + config.suite + "' (expected one of " + joined(suite_names()) + ")");
  }
  if (!contains(model_names(), config.model)) {
    config_error("field 'model': unknown model '" + config.model + "' (expected one of " + joined(model_names()) + ")");
  }
  if (config.diagram != "A2") config_error("field 'diagram': unsupported diagram '" + config.diagram + "' (only A2)");
  if (config.samples == 0) config_error("field 'samples': must be at least 1");
  if (config.precision_bits < 32 || config.precision_bits > 65536) {
    config_error("field 'precision_bits': must be between 32 and 65536");
  }
  try {
    PrecisionScope scope(config.precision_bits);
    if (Real::parse(config.abs_tol).sign() <= 0) config_error("field 'abs_tol': must be positive");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    config_error("field 'abs_tol': malformed decimal \"" + config.abs_tol + "\"");
  }
  if (config.t_values.empty()) config_error("field 't_values': must not be empty");
  for (const auto& t : config.t_values) {
    if (t.is_zero()) config_error("field 't_values': values must be non-zero");
  }
}

SuiteConfig load_config(const std::optional<std::string>& path, const ConfigOverrides& flags) {
  SuiteConfig config;
  if (path) {
    std::ifstream in(*path);
    if (!in) config_error("cannot read config file '" + *path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    config = parse_config_text(buffer.str(), *path);
  }
  apply(config, flags);
  validate(config);
  return config;
}

}  // namespace symspace::cli
