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


#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "costrength/finset.hpp"
#include "json.hpp"

namespace costrength {

enum class Status { kPass, kFail, kSkipped };

std::string to_string(Status status);

/// Outcome of a law check. A failing report carries the first counterexample
/// found as ordered key/value pairs (objects, morphism, element).
struct LawReport {
  std::string law;
  Status status = Status::kPass;
  std::vector<std::pair<std::string, std::string>> counterexample;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::vector<std::string> notes;
  std::vector<LawReport> parts;

  static LawReport pass(std::string law) {
    LawReport r;
    r.law = std::move(law);
    return r;
  }
  static LawReport fail(
      std::string law,
      std::vector<std::pair<std::string, std::string>> counterexample);
  static LawReport skipped(std::string law, std::string reason);

  bool passed() const { return status == Status::kPass; }
  bool failed() const { return status == Status::kFail; }

  /// Appends a part. A failing part fails the whole report; skipped parts
  /// leave the status alone.
  LawReport& add(LawReport part);
  LawReport& count(std::string key, std::int64_t value);
  LawReport& note(std::string text);

  std::int64_t count_of(const std::string& key) const;
  /// Depth-first search for the first failing leaf.
  const LawReport* first_failure() const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

using Counterexample = std::vector<std::pair<std::string, std::string>>;

/// Compares two parallel functions. On the first mismatch, fails `report`
/// (if it has not failed already) with `context` followed by the offending
/// element and both values, and returns false. Throws StructuralError when
/// the functions are not parallel.
bool expect_equal(LawReport& report, const FinFun& lhs, const FinFun& rhs,
                  Counterexample context);

}  // namespace costrength
