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

// Line-delimited JSON game transcripts.
//
//   {"type":"header","format":"walkbreak-transcript","version":1,"n":..,
//    "walker_bias":2,"breaker_bias":..,"goal":..,"walker":..,"breaker":..,
//    "seed":..,"first_player":..,"stop_on_win":..,"hamilton_budget":..,
//    "certify_budget":..,"p":"2/5","epsilon":"1/5","audit":..,
//    "in_regime":..}
//   {"type":"round","round":1,"breaker_edges":[[u,v],..],
//    "walker_steps":[[from,to],..],"annotations":[..]}
//   ...
//   {"type":"footer","outcome":..,"winner":..,"rounds":..,"goal_round":..,
//    "isolated_vertex":..,"walker_edges":..,"breaker_edges":..,
//    "free_edges":..,"audits":{..},"audit_violations":..,
//    "hard_violations":..,"metrics":{..},"annotations":[..]}
//
// A round record omits the move of a side that did not move in it. A
// resignation is recorded as "walker_resign": "<reason>".

#ifndef WALKBREAK_TRANSCRIPT_H_
#define WALKBREAK_TRANSCRIPT_H_

#include <string>
#include <string_view>
#include <vector>

#include "walkbreak/audit.h"
#include "walkbreak/board.h"

namespace walkbreak {

inline constexpr std::string_view kTranscriptFormat = "walkbreak-transcript";
inline constexpr int kTranscriptVersion = 1;

struct Transcript {
  Json header = Json::object();
  std::vector<Json> rounds;
  Json footer = Json::object();

  std::string ToJsonl() const;
};

Json EdgesToJson(const std::vector<Edge>& edges);
Json StepsToJson(const std::vector<Step>& steps);
BreakerMove BreakerMoveFromJson(const Json& j);
WalkerMove WalkerMoveFromJson(const Json& j);

// Throws kParseError on malformed input or an unknown version.
Transcript ParseTranscript(std::string_view text);
Transcript ReadTranscriptFile(const std::string& path);

// Applies every recorded move to a fresh board. Throws the referee's error
// if a recorded move is illegal.
GameState ReplayTranscript(const Transcript& transcript);

}  // namespace walkbreak

#endif  // WALKBREAK_TRANSCRIPT_H_
