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

#include "walkbreak/audit.h"

#include "walkbreak/error.h"

namespace walkbreak {

std::string_view AuditModeName(AuditMode m) {
  return m == AuditMode::kHard ? "hard" : "flag";
}

AuditMode ParseAuditMode(std::string_view s) {
  if (s == "hard") return AuditMode::kHard;
  if (s == "flag") return AuditMode::kFlag;
  throw Error(ErrorCode::kInvalidConfig,
              "audit mode must be hard or flag, got '" + std::string(s) + "'");
}

bool IsStatisticalClaim(std::string_view claim) {
  return claim == claims::kC6;
}

bool AuditLog::Check(std::string_view claim, bool ok, double value,
                     double bound, Annotations& notes, Json detail) {
  AuditCounter& c = counters_[std::string(claim)];
  ++c.checks;
  if (ok) return true;
  const bool hard = hard_ && !IsStatisticalClaim(claim);
  ++c.violations;
  if (hard) ++c.hard_violations;
  Json note = {{"kind", "audit"},
               {"claim", claim},
               {"value", value},
               {"bound", bound},
               {"hard", hard}};
  for (auto& [k, v] : detail.items()) note[k] = v;
  notes.push_back(std::move(note));
  return false;
}

std::int64_t AuditLog::violations() const {
  std::int64_t total = 0;
  for (const auto& [_, c] : counters_) total += c.violations;
  return total;
}

std::int64_t AuditLog::hard_violations() const {
  std::int64_t total = 0;
  for (const auto& [_, c] : counters_) total += c.hard_violations;
  return total;
}

void AuditLog::Merge(const AuditLog& other) {
  for (const auto& [claim, c] : other.counters_) {
    AuditCounter& mine = counters_[claim];
    mine.checks += c.checks;
    mine.violations += c.violations;
    mine.hard_violations += c.hard_violations;
  }
}

Json AuditLog::ToJson() const {
  Json out = Json::object();
  for (const auto& [claim, c] : counters_) {
    out[claim] = {{"checks", c.checks},
                  {"violations", c.violations},
                  {"hard_violations", c.hard_violations}};
  }
  return out;
}

}  // namespace walkbreak
