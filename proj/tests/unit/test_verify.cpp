// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qembed/verify.hpp"

using qembed::CheckResult;
using qembed::VerifyOptions;

TEST_CASE("scope list is stable and recognized") {
  const auto& scopes = qembed::verify_scopes();
  CHECK(std::find(scopes.begin(), scopes.end(), "all") != scopes.end());
  for (const auto& s : scopes) CHECK(qembed::is_verify_scope(s));
  CHECK_FALSE(qembed::is_verify_scope("everything"));
  CHECK_FALSE(qembed::is_verify_scope(""));
}

TEST_CASE("full run at a small bound passes with guarded skips") {
  VerifyOptions opts;
  opts.max_n = 2;
  const auto report = qembed::run_verification(opts);
  CHECK(report.ok());
  CHECK(report.failed == 0);
  CHECK(report.passed > 0);
  CHECK(report.skipped > 0);  // larger cases must bow out, not fail
  CHECK(report.passed + report.failed + report.skipped ==
        report.checks.size());
  for (const auto& c : report.checks) {
    if (c.status == CheckResult::Status::kSkip) {
      CHECK_FALSE(c.detail.empty());  // skips must say why
    }
  }
}

TEST_CASE("scoped runs produce only checks of that scope") {
  for (const std::string scope : {"wheel", "lindsey", "bisection"}) {
    VerifyOptions opts;
    opts.scope = scope;
    opts.max_n = 3;
    const auto report = qembed::run_verification(opts);
    CHECK(report.ok());
    CHECK(!report.checks.empty());
    for (const auto& c : report.checks) {
      CHECK(c.id.rfind(scope + "/", 0) == 0);
    }
  }
}

TEST_CASE("identical options give identical reports") {
  VerifyOptions opts;
  opts.scope = "soundness";
  opts.max_n = 3;
  opts.seed = 99;
  const auto a = qembed::run_verification(opts);
  const auto b = qembed::run_verification(opts);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].status == b.checks[i].status);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}

TEST_CASE("options are validated") {
  VerifyOptions opts;
  opts.scope = "bogus";
  CHECK_THROWS_AS(qembed::run_verification(opts), std::invalid_argument);
  opts.scope = "all";
  opts.max_n = 0;
  CHECK_THROWS_AS(qembed::run_verification(opts), std::invalid_argument);
  opts.max_n = 21;
  CHECK_THROWS_AS(qembed::run_verification(opts), std::invalid_argument);
}

TEST_CASE("status names render for reports") {
  CHECK(qembed::to_string(CheckResult::Status::kPass) == "pass");
  CHECK(qembed::to_string(CheckResult::Status::kFail) == "fail");
  CHECK(qembed::to_string(CheckResult::Status::kSkip) == "skip");
}
