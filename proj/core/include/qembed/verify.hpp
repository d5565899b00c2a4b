// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_VERIFY_HPP
#define QEMBED_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qembed {

/// One verification check: a closed-form-vs-construction or
/// oracle-vs-formula comparison. Skips record instances whose size
/// guards exclude them at the requested max_n; they are not failures.
struct CheckResult {
  enum class Status { kPass, kFail, kSkip };

  std::string id;  // "<scope>/<check> key=value ..."
  Status status = Status::kPass;
  std::string detail;
};

std::string to_string(CheckResult::Status s);

struct VerifyOptions {
  /// One of verify_scopes(): "all" or a single check group.
  std::string scope = "all";
  /// Clamp: per-check parameter ranges run up to min(spec range, max_n),
  /// and oracle corpora use guests of order 2^min(3, max_n).
  int max_n = 12;
  /// Seed for the random-graph corpora; equal seeds reproduce the run.
  std::uint64_t seed = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;

  bool ok() const { return failed == 0; }
};

/// Valid --scope values, "all" first.
const std::vector<std::string>& verify_scopes();
bool is_verify_scope(const std::string& scope);

/// Runs every check selected by the options. Guard violations inside a
/// check are reported as skips; unexpected exceptions as failures. The
/// check order is fixed, so reports are deterministic.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace qembed

#endif
