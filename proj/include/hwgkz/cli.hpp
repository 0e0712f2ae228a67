#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwgkz/extension_field.hpp"
#include "hwgkz/support.hpp"
#include "json.hpp"

namespace hwgkz::cli {

/// Malformed family definition; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kConfigError = 2, kHypothesisViolated = 3 };

struct FamilyConfig {
  int n = 0;
  int d = 0;
  std::vector<Exponent> exponents;
  std::uint32_t p = 0;
  unsigned a = 1;
  std::optional<std::vector<std::string>> lambda;  // field literals
  int depth = 0;                                   // defaults to p
  int box_bound = 0;                               // defaults to default_box_bound(p)
  std::uint64_t seed = 1;
};

/// Reads one flat JSON object. Throws ConfigError naming the broken invariant.
FamilyConfig parse_config(const nlohmann::json& doc);
nlohmann::json to_json(const FamilyConfig& config);

/// "hesse-cubic", "fermat-cubic", "quartic-full" or "quintic-full".
FamilyConfig preset(const std::string& name);
std::vector<std::string> preset_names();

SupportSet make_support(const FamilyConfig& config);
FieldPtr make_field(const FamilyConfig& config);
/// Throws ConfigError when lambda is absent or malformed.
std::vector<Fq> parse_lambda(const FamilyConfig& config, const FieldPtr& field);

/// Entry point behind the executable; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hwgkz::cli
