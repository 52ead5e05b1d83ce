// Copyright 2026 The walkbreak Authors.
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

#ifndef WALKBREAK_AUDIT_H_
#define WALKBREAK_AUDIT_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace walkbreak {

using Json = nlohmann::ordered_json;

// Per-round event notes; they end up in the transcript.
using Annotations = std::vector<Json>;

// kHard: violations inside a proven parameter regime count as hard.
// kFlag: every violation is only flagged.
enum class AuditMode { kHard, kFlag };

std::string_view AuditModeName(AuditMode m);
AuditMode ParseAuditMode(std::string_view s);

// Audited claims, as they appear in transcripts and reports.
namespace claims {
inline constexpr std::string_view kDegreeBound = "eq1_degree_bound";
inline constexpr std::string_view kConnector = "connector_bound";
inline constexpr std::string_view kConnectorFeasible = "connector_feasible";
inline constexpr std::string_view kC1 = "c1_adversary_budget";
inline constexpr std::string_view kC2 = "c2_box_counts";
inline constexpr std::string_view kC3 = "c3_inactive_before_degree";
inline constexpr std::string_view kC4 = "c4_connector_exists";
inline constexpr std::string_view kFailureOnce = "type1_at_most_once";
inline constexpr std::string_view kExposureOnce = "exposure_exactly_once";
inline constexpr std::string_view kC6 = "c6_type2_failures";
inline constexpr std::string_view kCliqueIntegrity = "clique_integrity";
}  // namespace claims

// Claims whose violations are statistical flags, never hard failures.
bool IsStatisticalClaim(std::string_view claim);

struct AuditCounter {
  std::int64_t checks = 0;
  std::int64_t violations = 0;
  std::int64_t hard_violations = 0;
};

class AuditLog {
 public:
  AuditLog() = default;
  explicit AuditLog(bool hard) : hard_(hard) {}

  bool hard() const { return hard_; }
  void set_hard(bool hard) { hard_ = hard; }

  // Counts one check. A failed check is annotated with value and bound.
  // Returns ok.
  bool Check(std::string_view claim, bool ok, double value, double bound,
             Annotations& notes, Json detail = Json::object());

  const std::map<std::string, AuditCounter>& counters() const {
    return counters_;
  }
  std::int64_t violations() const;
  std::int64_t hard_violations() const;

  void Merge(const AuditLog& other);
  Json ToJson() const;

 private:
  bool hard_ = false;
  std::map<std::string, AuditCounter> counters_;
};

}  // namespace walkbreak

#endif  // WALKBREAK_AUDIT_H_
