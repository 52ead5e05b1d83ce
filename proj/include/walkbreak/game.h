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

#ifndef WALKBREAK_GAME_H_
#define WALKBREAK_GAME_H_

#include <cstdint>
#include <optional>
#include <string>

#include "walkbreak/strategy.h"
#include "walkbreak/transcript.h"

namespace walkbreak {

struct GameSetup {
  int n = 0;
  int b = 1;
  Goal goal = Goal::kConnectivity;
  // Unset: Walker starts against breaker.isolation, Breaker otherwise.
  std::optional<Player> first_player;
  std::string walker = "walker.connectivity";
  std::string breaker = "breaker.random";
  std::uint64_t seed = 0;
  Rational p{1, 2};
  Rational epsilon{1, 20};
  AuditMode audit = AuditMode::kHard;
  bool stop_on_win = true;
  std::uint64_t hamilton_budget = 200'000;
  std::uint64_t certify_budget = 100'000'000;
};

Player ResolveFirstPlayer(const GameSetup& setup);
StrategyConfig MakeStrategyConfig(const GameSetup& setup);

// Throws kInvalidConfig for unknown, swapped or goal-incompatible
// strategies and bad parameters.
void ValidateSetup(const GameSetup& setup);

struct GameResult {
  GameState final_state;
  GameStatus status = GameStatus::kRunning;
  // A resignation counts as Breaker's win.
  Player winner = Player::kBreaker;
  bool walker_in_regime = false;
  GameMetrics metrics;
  AuditLog audits;
  Transcript transcript;
};

Json MetricsToJson(const GameMetrics& metrics);

// Plays one game to the end. The strategies draw from separate streams
// derived from the seed. A strategy that throws or submits an illegal move
// raises kStrategyFault naming it.
GameResult PlayGame(const GameSetup& setup);
GameResult PlayGame(const GameSetup& setup, Strategy& walker,
                    Strategy& breaker);

}  // namespace walkbreak

#endif  // WALKBREAK_GAME_H_
