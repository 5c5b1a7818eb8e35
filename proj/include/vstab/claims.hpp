#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

enum class ClaimStatus {
  kPass,
  kFail,
  kDocumentedDiscrepancy,
};

std::string status_name(ClaimStatus status);

// One checked instance that went wrong: the graph (compact descriptor,
// usually family(params) or a graph6 string), what the recorded statement
// predicts, and what the engines computed.
struct ClaimInstance {
  std::string graph;
  std::string expected;
  std::string actual;
};

struct ClaimReport {
  std::string id;
  ClaimStatus status = ClaimStatus::kPass;
  int instances = 0;    // corpus instances examined
  int fired = -1;       // hypothesis-tracked claims only; -1 otherwise
  int vacuous = -1;
  std::vector<ClaimInstance> failures;
  // Mismatches that are recorded in advance as known statement defects:
  // they set status documented-discrepancy instead of fail.
  std::vector<ClaimInstance> discrepancies;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;
};

// A checkable statement with a parameterized corpus. scale is the corpus
// cap: the maximum vertex count for labeled-corpus claims, the maximum
// family parameter for family claims, the maximum factor size for product
// claims. run fills the counters and instance lists; id, status, and
// elapsed_seconds are set by the harness.
struct Claim {
  std::string id;
  std::string statement;
  int default_scale = 0;
  int max_scale = 0;
  std::function<void(int scale, ClaimReport& out)> run;
};

// The full catalog, sorted by id.
const std::vector<Claim>& claim_catalog();

// Runs one claim. Throws std::invalid_argument for an unknown id or a scale
// above the claim's cap.
ClaimReport check_claim(std::string_view id,
                        std::optional<int> scale = std::nullopt);

// Runs the whole catalog, or only the named claims when ids is given (an
// empty list runs nothing). A global scale is clamped to each claim's cap
// rather than erroring. Reports come back sorted by claim id. A claim whose
// checker throws becomes a fail report carrying the message, not an abort.
std::vector<ClaimReport> run_suite(
    std::optional<int> scale = std::nullopt,
    const std::optional<std::vector<std::string>>& ids = std::nullopt);

// True iff some report has status fail (documented-discrepancy is not a
// failure; process exit codes key off this).
bool any_failure(const std::vector<ClaimReport>& reports);

}  // namespace vstab
