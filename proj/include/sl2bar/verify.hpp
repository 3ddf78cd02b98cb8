#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sl2bar {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  int level = 0;
  CheckStatus status = CheckStatus::kPass;
  std::optional<nlohmann::ordered_json> witness;
  std::string reason;  // set for skipped checks
  std::int64_t millis = 0;
};

struct VerifyReport {
  int max_level = 0;
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::kFail) == 0; }
  /// First failing check, if any.
  const CheckResult* first_failure() const;
};

inline constexpr int kMinVerifyLevel = 2;
inline constexpr int kMaxVerifyLevel = 5;

struct VerifyOptions {
  int max_level = 3;
  /// Runs only checks whose name contains this text; empty runs all.
  std::string filter;
};

/// Check names in run order.
std::vector<std::string> verify_check_names();

/// Runs the suite. Group checks run at every level they support up to
/// max_level; field scans run up to 4 * max_level capped by their own bounds.
/// Throws BoundExceeded if max_level is outside [kMinVerifyLevel, kMaxVerifyLevel].
VerifyReport run_verify(const VerifyOptions& options);

/// Fixed key order: max_level, checks[{name, level, status, witness?, reason?, millis}],
/// summary{pass, fail, skipped, first_failure?}.
nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace sl2bar
