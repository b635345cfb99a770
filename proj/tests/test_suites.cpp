/* Copyright 2026 The costrength-lab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "costrength/errors.hpp"
#include "costrength/suites.hpp"

using namespace costrength;

namespace {

const LawReport* find_part(const LawReport& r, const std::string& law) {
  if (r.law == law) return &r;
  for (const auto& p : r.parts) {
    if (const LawReport* f = find_part(p, law)) return f;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("registry ids are unique and resolvable") {
  std::set<std::string> ids;
  for (const auto& s : suite_registry()) {
    CHECK(ids.insert(s.id).second);
    CHECK_FALSE(s.statement.empty());
    CHECK(&find_suite(s.id) == &s);
  }
  CHECK(ids.size() == 24);
  CHECK_THROWS_AS(find_suite("no-such-suite"), StructuralError);
}

TEST_CASE("thm-3 counts for Writer(2)") {
  const SuiteResult r = run_suite(find_suite("thm-3"), SuiteConfig{});
  CHECK(r.status == Status::kPass);
  const LawReport* w =
      find_part(r.report, "costrengths and copoints of Writer(2)");
  REQUIRE(w != nullptr);
  CHECK(w->count_of("copoints") == 1);
  CHECK(w->count_of("costrengths") == 1);
}

TEST_CASE("ex-2.8-1c finds no Maybe costrength") {
  const SuiteResult r = run_suite(find_suite("ex-2.8-1c"), SuiteConfig{});
  CHECK(r.status == Status::kPass);
  CHECK(r.report.count_of("costrengths") == 0);
}

TEST_CASE("budget exhaustion marks a suite skipped, not passed") {
  SuiteConfig tight;
  tight.budget = SearchBudget{1};
  const SuiteResult r = run_suite(find_suite("thm-3"), tight);
  CHECK(r.status == Status::kSkipped);
  CHECK_FALSE(r.skip_reason.empty());
}

TEST_CASE("glob filtering and deterministic output") {
  const auto a = run_suites("ex-2.8-1*", SuiteConfig{}, 2);
  REQUIRE(a.size() == 3);
  CHECK(a[0].id == "ex-2.8-1a");
  CHECK(a[2].id == "ex-2.8-1c");
  const auto b = run_suites("ex-2.8-1*", SuiteConfig{}, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].to_json(false).dump() == b[i].to_json(false).dump());
    CHECK(a[i].to_text(false) == b[i].to_text(false));
  }
  CHECK(run_suites("nothing*", SuiteConfig{}).empty());
}
