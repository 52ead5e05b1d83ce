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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <string>

#include "doctest.h"
#include "walkbreak/error.h"
#include "walkbreak/game.h"
#include "walkbreak/transcript.h"

namespace walkbreak {
namespace {

ErrorCode ParseCode(const std::string& text) {
  try {
    ReplayTranscript(ParseTranscript(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidConfig;
}

GameResult Sample(Goal goal = Goal::kConnectivity) {
  GameSetup setup;
  setup.n = 24;
  setup.b = 2;
  setup.seed = 5;
  setup.goal = goal;
  setup.audit = AuditMode::kFlag;
  if (goal == Goal::kHamiltonCycle) {
    setup.walker = "walker.hamiltonicity";
    setup.p = Rational(1, 4);
    setup.epsilon = Rational(1, 5);
  }
  return PlayGame(setup);
}

TEST_CASE("Transcripts round-trip") {
  for (Goal goal : {Goal::kConnectivity, Goal::kHamiltonCycle}) {
    GameResult r = Sample(goal);
    const std::string text = r.transcript.ToJsonl();
    Transcript t = ParseTranscript(text);
    CHECK(t.ToJsonl() == text);
    CHECK(t.header["format"] == "walkbreak-transcript");
    CHECK(t.header["version"] == 1);
    CHECK(t.footer["winner"] == PlayerName(r.winner));
    CHECK(ReplayTranscript(t) == r.final_state);
  }
}

TEST_CASE("Walker-first transcripts replay") {
  GameSetup setup;
  setup.n = 30;
  setup.b = 6;
  setup.walker = "walker.random";
  setup.breaker = "breaker.isolation";
  setup.audit = AuditMode::kFlag;
  GameResult r = PlayGame(setup);
  CHECK(r.transcript.header["first_player"] == "walker");
  CHECK(ReplayTranscript(r.transcript) == r.final_state);
}

TEST_CASE("Malformed transcripts") {
  const std::string good = Sample().transcript.ToJsonl();
  CHECK(ParseCode("") == ErrorCode::kParseError);
  CHECK(ParseCode("{not json}\n") == ErrorCode::kParseError);
  CHECK(ParseCode(good.substr(0, good.find('\n') + 1)) ==
        ErrorCode::kParseError);

  std::string wrong_version = good;
  wrong_version.replace(wrong_version.find("\"version\":1"), 11,
                        "\"version\":9");
  CHECK(ParseCode(wrong_version) == ErrorCode::kParseError);

  std::string unknown = good;
  unknown.insert(0, "{\"type\":\"mystery\"}\n");
  CHECK(ParseCode(unknown) == ErrorCode::kParseError);
}

TEST_CASE("Replay rejects tampered moves") {
  Transcript t = Sample().transcript;
  REQUIRE(t.rounds.size() > 2);
  Json& steps = t.rounds[1]["walker_steps"];
  steps[0][0] = (steps[0][0].get<int>() + 1) % 24;
  CHECK_THROWS_AS(ReplayTranscript(t), Error);
}

TEST_CASE("Missing transcript file") {
  try {
    ReadTranscriptFile("/nonexistent/t.jsonl");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace walkbreak
