#include "mapref/verification.hpp"

#include <algorithm>

namespace mapref {

void VerificationRecord::merge(const VerificationRecord& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    checks_.push_back({prefix + c.name, c.expected, c.actual, c.passed});
  }
  for (const auto& w : other.warnings_) warnings_.push_back(prefix + w);
}

bool VerificationRecord::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t VerificationRecord::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

nlohmann::ordered_json VerificationRecord::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject_;
  j["passed"] = all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    j["checks"].push_back(
        {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
  }
  j["warnings"] = warnings_;
  return j;
}

std::string VerificationRecord::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name + ": expected=" + c.expected + " actual=" + c.actual + "\n";
  }
  for (const auto& w : warnings_) out += "WARN " + w + "\n";
  return out;
}

}  // namespace mapref
