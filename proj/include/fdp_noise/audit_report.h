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

#ifndef FDP_NOISE_AUDIT_REPORT_H_
#define FDP_NOISE_AUDIT_REPORT_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fdp_noise {

// One inequality evaluated by an audit. `margin` is signed so that a
// satisfied check has margin >= 0; `pass` additionally admits margins down to
// -tolerance.
struct CheckRecord {
  std::string name;
  std::optional<double> a;
  std::optional<double> t;
  double bound = 0.0;
  double achieved = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

class AuditReport {
 public:
  explicit AuditReport(std::string title) : title_(std::move(title)) {}

  // Records achieved <= bound (within tolerance).
  void AddUpperBoundCheck(std::string name, std::optional<double> a,
                          std::optional<double> t, double bound,
                          double achieved, double tolerance);
  // Records achieved >= bound (within tolerance).
  void AddLowerBoundCheck(std::string name, std::optional<double> a,
                          std::optional<double> t, double bound,
                          double achieved, double tolerance);

  void AddAssumption(std::string note) {
    assumptions_.push_back(std::move(note));
  }
  void AddNote(std::string note) { notes_.push_back(std::move(note)); }
  void MarkNotApplicable(std::string reason);
  // Appends every check and note of `other`, prefixing check names.
  void Merge(const AuditReport& other, const std::string& prefix);

  const std::string& title() const { return title_; }
  const std::vector<std::string>& assumptions() const { return assumptions_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  bool not_applicable() const { return not_applicable_; }

  bool passed() const;
  bool has_violation() const { return !passed(); }
  size_t violation_count() const;
  // Smallest margin over all checks; +inf when there are none.
  double worst_margin() const;
  const CheckRecord* worst_check() const;
  // Checks whose name starts with `prefix`.
  std::vector<CheckRecord> ChecksNamed(const std::string& prefix) const;

  // JSON with a stable field order.
  std::string ToJson(int indent = 2) const;
  // Fixed-width table; at most `max_rows` check rows (worst first) when
  // positive.
  std::string ToText(size_t max_rows = 0) const;

 private:
  std::string title_;
  std::vector<std::string> assumptions_;
  std::vector<std::string> notes_;
  std::vector<CheckRecord> checks_;
  bool not_applicable_ = false;
};

// Folds many upper-bound comparisons of one property into the least favourable
// one, so a grid scan contributes a single report row.
class WorstUpperBound {
 public:
  void Offer(std::optional<double> a, std::optional<double> t, double bound,
             double achieved, double tolerance);
  // Adds the worst row (if anything was offered) plus a note counting the
  // out-of-tolerance points.
  void AddTo(AuditReport& report, const std::string& name) const;

  bool empty() const { return count_ == 0; }
  double margin() const { return margin_; }
  int violations() const { return violations_; }

 private:
  int count_ = 0;
  int violations_ = 0;
  double margin_ = 0.0;
  std::optional<double> a_;
  std::optional<double> t_;
  double bound_ = 0.0;
  double achieved_ = 0.0;
  double tolerance_ = 0.0;
};

}  // namespace fdp_noise

#endif  // FDP_NOISE_AUDIT_REPORT_H_
