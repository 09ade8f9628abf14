// Copyright 2026 The hharm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HHARM_REPORT_HPP_
#define HHARM_REPORT_HPP_

/// @file report.hpp
/// @brief Check records produced by the verification suites, and their
/// text, JSON and CSV forms.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hharm/exact_arith.hpp"
#include "hharm/operator.hpp"

namespace hharm {

using Params = std::vector<std::pair<std::string, long long>>;

struct CheckRecord {
  std::string id;
  Params params;
  bool passed = true;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
};

struct Report {
  std::string suite;
  int n = 0;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;
  std::optional<long long> ms;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  std::size_t failures() const {
    std::size_t out = 0;
    for (const auto& c : checks) out += c.passed ? 0 : 1;
    return out;
  }

  /// Values are kept only for failures.
  void record(std::string id, Params params, bool ok, std::string lhs = {}, std::string rhs = {}) {
    CheckRecord c{std::move(id), std::move(params), ok, std::nullopt, std::nullopt};
    if (!ok) {
      c.lhs = std::move(lhs);
      c.rhs = std::move(rhs);
    }
    checks.push_back(std::move(c));
  }

  void append(Report&& other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
    for (auto& s : other.notes) {
      if (std::find(notes.begin(), notes.end(), s) == notes.end()) notes.push_back(std::move(s));
    }
  }
};

inline void check_equal(Report& report, std::string id, Params params, const Rat& lhs,
                        const Rat& rhs) {
  const bool ok = lhs == rhs;
  report.record(std::move(id), std::move(params), ok, ok ? "" : to_string(lhs),
                ok ? "" : to_string(rhs));
}

inline void check_equal(Report& report, std::string id, Params params, const BigInt& lhs,
                        const BigInt& rhs) {
  const bool ok = lhs == rhs;
  report.record(std::move(id), std::move(params), ok, ok ? "" : to_string(lhs),
                ok ? "" : to_string(rhs));
}

inline void check_equal(Report& report, std::string id, Params params, const Surd& lhs,
                        const Surd& rhs) {
  const bool ok = lhs == rhs;
  report.record(std::move(id), std::move(params), ok, ok ? "" : lhs.str(), ok ? "" : rhs.str());
}

/// Matrix equality; a failure names the first differing entry.
inline void check_equal(Report& report, std::string id, Params params, const Operator& lhs,
                        const Operator& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() || lhs.domain() != rhs.domain() ||
      lhs.codomain() != rhs.codomain()) {
    report.record(std::move(id), std::move(params), false,
                  std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()),
                  std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    return;
  }
  const auto miss = first_mismatch(lhs, rhs);
  if (!miss) {
    report.record(std::move(id), std::move(params), true);
    return;
  }
  const std::string at = "[" + std::to_string(miss->row) + "," + std::to_string(miss->col) + "] ";
  report.record(std::move(id), std::move(params), false, at + to_string(miss->lhs),
                at + to_string(miss->rhs));
}

inline void check_true(Report& report, std::string id, Params params, bool ok,
                       std::string detail = {}) {
  report.record(std::move(id), std::move(params), ok, ok ? "" : std::move(detail),
                ok ? "" : "true");
}

inline std::string params_str(const Params& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += key + "=" + std::to_string(value);
  }
  return out;
}

inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["n"] = report.n;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json rec;
    rec["id"] = c.id;
    auto params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : c.params) params[key] = value;
    rec["params"] = std::move(params);
    rec["status"] = c.passed ? "pass" : "fail";
    if (c.lhs) rec["lhs"] = *c.lhs;
    if (c.rhs) rec["rhs"] = *c.rhs;
    checks.push_back(std::move(rec));
  }
  doc["checks"] = std::move(checks);
  if (!report.notes.empty()) doc["notes"] = report.notes;
  if (report.ms) doc["ms"] = *report.ms;
  return doc;
}

/// Summary line, then one line per failure, then notes.
inline void write_text(std::ostream& out, const Report& report) {
  out << report.suite << " n=" << report.n << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
      << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks)";
  if (report.ms) out << " " << *report.ms << " ms";
  out << '\n';
  for (const auto& c : report.checks) {
    if (c.passed) continue;
    out << "  FAIL " << c.id << " [" << params_str(c.params) << "] lhs=" << c.lhs.value_or("")
        << " rhs=" << c.rhs.value_or("") << '\n';
  }
  for (const auto& note : report.notes) out << "  note: " << note << '\n';
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_csv_header(std::ostream& out) { out << "suite,n,id,params,status,lhs,rhs\n"; }

inline void write_csv(std::ostream& out, const Report& report) {
  for (const auto& c : report.checks) {
    out << csv_field(report.suite) << ',' << report.n << ',' << csv_field(c.id) << ','
        << csv_field(params_str(c.params)) << ',' << (c.passed ? "pass" : "fail") << ','
        << csv_field(c.lhs.value_or("")) << ',' << csv_field(c.rhs.value_or("")) << '\n';
  }
}

}  // namespace hharm

#endif  // HHARM_REPORT_HPP_
