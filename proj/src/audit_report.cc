// Copyright 2026 The fdp-noise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fdp_noise/audit_report.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"

namespace fdp_noise {
namespace {

nlohmann::ordered_json OptionalNumber(const std::optional<double>& v) {
  if (!v.has_value()) return nullptr;
  return *v;
}

// JSON has no infinities; encode them as strings.
nlohmann::ordered_json Number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string FormatOptional(const std::optional<double>& v) {
  return v.has_value() ? absl::StrFormat("%.6g", *v) : std::string("-");
}

}  // namespace

void AuditReport::AddUpperBoundCheck(std::string name,
                                     std::optional<double> a,
                                     std::optional<double> t, double bound,
                                     double achieved, double tolerance) {
  CheckRecord r{std::move(name), a, t, bound, achieved, bound - achieved,
                tolerance, false};
  r.pass = r.margin >= -tolerance;
  checks_.push_back(std::move(r));
}

void AuditReport::AddLowerBoundCheck(std::string name,
                                     std::optional<double> a,
                                     std::optional<double> t, double bound,
                                     double achieved, double tolerance) {
  CheckRecord r{std::move(name), a, t, bound, achieved, achieved - bound,
                tolerance, false};
  r.pass = r.margin >= -tolerance;
  checks_.push_back(std::move(r));
}

void AuditReport::MarkNotApplicable(std::string reason) {
  not_applicable_ = true;
  notes_.push_back(absl::StrCat("not applicable: ", reason));
}

void AuditReport::Merge(const AuditReport& other, const std::string& prefix) {
  for (const auto& s : other.assumptions_) assumptions_.push_back(s);
  for (const auto& s : other.notes_) notes_.push_back(s);
  for (CheckRecord r : other.checks_) {
    r.name = prefix + r.name;
    checks_.push_back(std::move(r));
  }
  not_applicable_ = not_applicable_ || other.not_applicable_;
}

bool AuditReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

size_t AuditReport::violation_count() const {
  return std::count_if(checks_.begin(), checks_.end(),
                       [](const CheckRecord& r) { return !r.pass; });
}

double AuditReport::worst_margin() const {
  const CheckRecord* w = worst_check();
  return w == nullptr ? std::numeric_limits<double>::infinity() : w->margin;
}

const CheckRecord* AuditReport::worst_check() const {
  const CheckRecord* worst = nullptr;
  for (const auto& r : checks_) {
    if (worst == nullptr || r.margin < worst->margin) worst = &r;
  }
  return worst;
}

std::vector<CheckRecord> AuditReport::ChecksNamed(
    const std::string& prefix) const {
  std::vector<CheckRecord> out;
  for (const auto& r : checks_) {
    if (r.name.rfind(prefix, 0) == 0) out.push_back(r);
  }
  return out;
}

std::string AuditReport::ToJson(int indent) const {
  nlohmann::ordered_json j;
  j["title"] = title_;
  j["passed"] = passed();
  j["not_applicable"] = not_applicable_;
  j["violations"] = violation_count();
  j["worst_margin"] = Number(worst_margin());
  j["assumptions"] = assumptions_;
  j["notes"] = notes_;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : checks_) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["a"] = OptionalNumber(r.a);
    c["t"] = OptionalNumber(r.t);
    c["bound"] = Number(r.bound);
    c["achieved"] = Number(r.achieved);
    c["margin"] = Number(r.margin);
    c["tolerance"] = Number(r.tolerance);
    c["pass"] = r.pass;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j.dump(indent);
}

std::string AuditReport::ToText(size_t max_rows) const {
  std::string out = absl::StrCat("== ", title_, " ==\n");
  for (const auto& s : assumptions_) absl::StrAppend(&out, "assume: ", s, "\n");
  for (const auto& s : notes_) absl::StrAppend(&out, "note:   ", s, "\n");

  std::vector<size_t> order(checks_.size());
  std::iota(order.begin(), order.end(), 0);
  if (max_rows > 0 && max_rows < checks_.size()) {
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return checks_[x].margin < checks_[y].margin;
    });
    order.resize(max_rows);
  }
  absl::StrAppend(&out,
                  absl::StrFormat("%-28s %10s %10s %14s %14s %14s %5s\n",
                                  "check", "a", "t", "bound", "achieved",
                                  "margin", "ok"));
  for (size_t i : order) {
    const auto& r = checks_[i];
    absl::StrAppend(
        &out, absl::StrFormat("%-28s %10s %10s %14.8g %14.8g %14.6g %5s\n",
                              r.name, FormatOptional(r.a), FormatOptional(r.t),
                              r.bound, r.achieved, r.margin,
                              r.pass ? "yes" : "NO"));
  }
  if (max_rows > 0 && max_rows < checks_.size()) {
    absl::StrAppend(&out, "(", checks_.size() - max_rows,
                    " more checks not shown)\n");
  }
  absl::StrAppend(&out, absl::StrFormat(
                            "checks=%d violations=%d worst_margin=%.6g %s\n",
                            checks_.size(), violation_count(), worst_margin(),
                            passed() ? "PASS" : "VIOLATION"));
  return out;
}

void WorstUpperBound::Offer(std::optional<double> a, std::optional<double> t,
                            double bound, double achieved, double tolerance) {
  const double m = bound - achieved;
  if (m < -tolerance) ++violations_;
  if (count_++ == 0 || m < margin_) {
    margin_ = m;
    a_ = a;
    t_ = t;
    bound_ = bound;
    achieved_ = achieved;
    tolerance_ = tolerance;
  }
}

void WorstUpperBound::AddTo(AuditReport& report,
                            const std::string& name) const {
  if (count_ == 0) return;
  report.AddUpperBoundCheck(name, a_, t_, bound_, achieved_, tolerance_);
  if (violations_ > 0) {
    report.AddNote(absl::StrCat(name, ": ", violations_, " of ", count_,
                                " grid points out of tolerance"));
  }
}

}  // namespace fdp_noise
