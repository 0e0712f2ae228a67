#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace hwgkz {

/// Raised when an operation needs every interior monomial to be in the support.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Pass/fail record for one checked statement, with the witnesses that were examined.
struct VerificationReport {
  static constexpr std::size_t kMaxListedFailures = 20;

  std::string statement;
  bool pass = true;
  nlohmann::json witnesses = nlohmann::json::object();
  std::vector<std::string> failures;
  std::size_t failure_count = 0;
  double seconds = 0.0;

  explicit VerificationReport(std::string id) : statement(std::move(id)) {}

  void fail(std::string message) {
    pass = false;
    ++failure_count;
    if (failures.size() < kMaxListedFailures) failures.push_back(std::move(message));
  }

  /// Timing is left out by default so equal inputs serialize to equal bytes.
  nlohmann::json to_json(bool with_timing = false) const {
    nlohmann::json j = {{"statement", statement},
                        {"pass", pass},
                        {"witnesses", witnesses},
                        {"failure_count", failure_count},
                        {"failures", failures}};
    if (with_timing) j["seconds"] = seconds;
    return j;
  }
};

inline bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace hwgkz
