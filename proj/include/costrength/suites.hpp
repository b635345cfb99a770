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


// Named law suites, one per statement of the theory, and their runner.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "costrength/functor.hpp"
#include "costrength/io.hpp"
#include "costrength/law_report.hpp"

namespace costrength {

struct SuiteConfig {
  /// Objects and grades of the default universe.
  Universe universe = Universe::of_sizes({0, 1, 2, 3});
  SearchBudget budget;
};

struct SuiteInfo {
  std::string id;
  std::string statement;
  std::function<LawReport(const SuiteConfig&)> run;
};

/// Every suite in a fixed order.
const std::vector<SuiteInfo>& suite_registry();
/// Throws StructuralError for an unknown id.
const SuiteInfo& find_suite(const std::string& id);

struct SuiteResult {
  std::string id;
  std::string statement;
  /// kSkipped when a size cap or budget was hit.
  Status status = Status::kPass;
  std::string skip_reason;
  LawReport report;
  double elapsed_ms = 0;

  /// Timing is included only on request, so that reports without it are
  /// byte-identical across runs.
  Json to_json(bool with_timing) const;
  std::string to_text(bool with_timing) const;
};

SuiteResult run_suite(const SuiteInfo& suite, const SuiteConfig& config);
/// Suites whose id matches the shell-style glob, run on up to `jobs`
/// threads; results come back in registry order.
std::vector<SuiteResult> run_suites(const std::string& glob,
                                    const SuiteConfig& config,
                                    std::size_t jobs = 1);

}  // namespace costrength
