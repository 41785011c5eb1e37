#include "symspace/cli/report.hpp"

#include <algorithm>
#include <cstdio>

namespace symspace::cli {

std::string to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
  }
  return "unknown";
}

void Report::add(Case c) {
  if (c.tolerance.empty()) c.tolerance = config_.abs_tol;
  if (c.status == CaseStatus::Fail && !c.witness) c.witness = "residual " + c.residual + " exceeds " + c.tolerance;
  cases_.push_back(std::move(c));
}

void Report::add(std::string name, nlohmann::ordered_json params, bool pass, const Residual& residual,
                 std::optional<std::string> witness) {
  Case c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.status = pass ? CaseStatus::Pass : CaseStatus::Fail;
  c.residual = residual.str();
  c.tolerance = residual.exact ? "exact" : config_.abs_tol;
  c.witness = std::move(witness);
  add(std::move(c));
}

bool Report::passed() const {
  return std::none_of(cases_.begin(), cases_.end(), [](const Case& c) { return c.status == CaseStatus::Fail; });
}

nlohmann::ordered_json Report::to_json() const {
  std::vector<const Case*> sorted;
  for (const auto& c : cases_) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Case* a, const Case* b) { return a->name < b->name; });

  std::size_t passed = 0, failed = 0, skipped = 0;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const Case* c : sorted) {
    nlohmann::ordered_json j{{"name", c->name},
                             {"params", c->params},
                             {"status", to_string(c->status)},
                             {"residual", c->residual},
                             {"tolerance", c->tolerance}};
    if (c->witness) j["witness"] = *c->witness;
    cases.push_back(std::move(j));
    (c->status == CaseStatus::Pass ? passed : c->status == CaseStatus::Fail ? failed : skipped) += 1;
  }
  nlohmann::ordered_json out{{"suite", suite_},
                             {"config", config_.to_json()},
                             {"status", this->passed() ? "pass" : "fail"},
                             {"summary", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
                             {"cases", cases}};
  if (wall_time_ms_) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *wall_time_ms_);
    out["wall_time_ms"] = buf;
  }
  return out;
}

std::string Report::str() const { return to_json().dump(2) + "\n"; }

}  // namespace symspace::cli
