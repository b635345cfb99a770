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


#include "costrength/law_report.hpp"

#include "costrength/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace costrength {

std::string to_string(Status status) {
  switch (status) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kSkipped:
      return "skipped";
  }
  return "unknown";
}

LawReport LawReport::fail(
    std::string law,
    std::vector<std::pair<std::string, std::string>> counterexample) {
  LawReport r = pass(std::move(law));
  r.status = Status::kFail;
  r.counterexample = std::move(counterexample);
  return r;
}

LawReport LawReport::skipped(std::string law, std::string reason) {
  LawReport r = pass(std::move(law));
  r.status = Status::kSkipped;
  r.notes.push_back(std::move(reason));
  return r;
}

LawReport& LawReport::add(LawReport part) {
  if (part.status == Status::kFail) status = Status::kFail;
  parts.push_back(std::move(part));
  return *this;
}

LawReport& LawReport::count(std::string key, std::int64_t value) {
  for (auto& [k, v] : counts) {
    if (k == key) {
      v = value;
      return *this;
    }
  }
  counts.emplace_back(std::move(key), value);
  return *this;
}

LawReport& LawReport::note(std::string text) {
  notes.push_back(std::move(text));
  return *this;
}

std::int64_t LawReport::count_of(const std::string& key) const {
  for (const auto& [k, v] : counts) {
    if (k == key) return v;
  }
  throw std::out_of_range("report '" + law + "' has no count '" + key + "'");
}

const LawReport* LawReport::first_failure() const {
  if (status != Status::kFail) return nullptr;
  for (const auto& p : parts) {
    if (const auto* f = p.first_failure()) return f;
  }
  return this;
}

nlohmann::ordered_json LawReport::to_json() const {
  nlohmann::ordered_json j;
  j["status"] = to_string(status);
  j["law"] = law;
  if (!counterexample.empty()) {
    nlohmann::ordered_json cex = nlohmann::ordered_json::object();
    for (const auto& [k, v] : counterexample) cex[k] = v;
    j["counterexample"] = std::move(cex);
  }
  if (!counts.empty()) {
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto& [k, v] : counts) c[k] = v;
    j["counts"] = std::move(c);
  }
  if (!notes.empty()) j["notes"] = notes;
  if (!parts.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : parts) arr.push_back(p.to_json());
    j["parts"] = std::move(arr);
  }
  return j;
}

namespace {

void render(const LawReport& r, int depth, std::ostringstream& out) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out << indent << "[" << to_string(r.status) << "] " << r.law;
  if (!r.counts.empty()) {
    out << " (";
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
      if (i) out << ", ";
      out << r.counts[i].first << "=" << r.counts[i].second;
    }
    out << ")";
  }
  out << "\n";
  for (const auto& n : r.notes) out << indent << "  note: " << n << "\n";
  for (const auto& [k, v] : r.counterexample) {
    out << indent << "  " << k << ": " << v << "\n";
  }
  for (const auto& p : r.parts) render(p, depth + 1, out);
}

}  // namespace

std::string LawReport::to_text() const {
  std::ostringstream out;
  render(*this, 0, out);
  return out.str();
}

bool expect_equal(LawReport& report, const FinFun& lhs, const FinFun& rhs,
                  Counterexample context) {
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) {
    throw StructuralError("diagram legs are not parallel: " +
                          lhs.dom().to_string() + " -> " +
                          lhs.cod().to_string() + " versus " +
                          rhs.dom().to_string() + " -> " +
                          rhs.cod().to_string());
  }
  const auto w = first_difference(lhs, rhs);
  if (!w) return true;
  if (!report.failed()) {
    report.status = Status::kFail;
    context.emplace_back("element", lhs.dom().label(*w));
    context.emplace_back("left", lhs.cod().label(lhs(*w)));
    context.emplace_back("right", rhs.cod().label(rhs(*w)));
    report.counterexample = std::move(context);
  }
  return false;
}

}  // namespace costrength
