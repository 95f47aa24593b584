#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace leibniz {

enum class ClaimStatus { pass, fail, skipped };

std::string to_string(ClaimStatus s);

/// One checked statement about L_m. `expected` and `computed` are exact
/// integers, booleans or strings; `computed` is null when skipped.
struct ClaimRecord {
  std::string id;         // stable identifier, e.g. "phi0_IG_dim"
  std::string statement;  // the mathematical statement being checked
  nlohmann::ordered_json expected;
  nlohmann::ordered_json computed;
  ClaimStatus status = ClaimStatus::fail;
  std::string note;
};

struct VerificationOptions {
  /// Also check d^3 d^2 = 0 (m <= 4) and run the ungraded kernel oracle for
  /// every m rather than only m <= 3.
  bool deep = false;
};

struct VerificationReport {
  int m = 0;
  std::vector<ClaimRecord> claims;
  std::vector<std::pair<std::string, double>> timings_ms;  // per stage, in run order
  bool passed() const;
};

/// Runs the full claim ledger for L_m (m >= 2).
VerificationReport verify_m(int m, const VerificationOptions& opts);

/// verify_m for m = lo..hi on up to `workers` threads; results in m order.
std::vector<VerificationReport> verify_range(int lo, int hi, const VerificationOptions& opts, unsigned workers);

/// Worker count: LEIBNIZ_WORKERS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_workers();

inline constexpr const char* kVerifySchema = "leibniz-verify/1";

/// Deterministic JSON; timings only when include_timing is set.
std::string verification_json(const std::vector<VerificationReport>& reports, bool include_timing);
std::string verification_csv(const std::vector<VerificationReport>& reports);
std::string verification_pretty(const std::vector<VerificationReport>& reports, bool include_timing);

}  // namespace leibniz
