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

#ifndef WALKBREAK_STRATEGY_H_
#define WALKBREAK_STRATEGY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "walkbreak/audit.h"
#include "walkbreak/board.h"
#include "walkbreak/numeric.h"

namespace walkbreak {

struct Resign {
  std::string reason;
};

using Decision = std::variant<WalkerMove, BreakerMove, Resign>;

// Everything a strategy may depend on besides the board and its own
// randomness stream.
struct StrategyConfig {
  int n = 0;
  int b = 1;
  Goal goal = Goal::kConnectivity;
  // Exposure probability (Hamiltonicity strategy).
  Rational p{1, 2};
  // Regime slack: the connectivity regime is b <= (1/4 - epsilon) n / ln n;
  // the exposure strategy uses it as its degree-ratio tolerance.
  Rational epsilon{1, 20};
  AuditMode audit_mode = AuditMode::kHard;
  // Node budget for certifying the Hamiltonicity of the exposure graph.
  std::uint64_t certify_budget = 100'000'000;
};

// Strategy-specific end-of-game quantities; absent fields do not apply.
struct GameMetrics {
  std::int64_t f1_total = 0;
  int f2_max = 0;
  std::optional<Rational> min_degree_ratio;
  std::optional<bool> hamiltonian;
  bool hamiltonian_unknown = false;
  std::int64_t exposed_pairs = 0;
  std::int64_t h_edges = 0;
  std::int64_t gprime_edges = 0;
  bool c6_exceeded = false;
  bool stage_two = false;
};

class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string_view name() const = 0;
  virtual Player role() const = 0;
  // Whether the configured parameters lie in the regime where the strategy's
  // guarantees are proven; audits are hard only there.
  virtual bool in_regime() const { return false; }

  // Next move for the side to play. Notes go into the current round record.
  virtual Decision Decide(const GameState& state, Rng& rng,
                          Annotations& notes) = 0;
  // Sees each opponent move right after the referee applied it.
  virtual void Observe(const GameState& after, const Decision& opponent_move,
                       Annotations& notes) {}
  // Called once after the game ended.
  virtual void Finish(const GameState& final_state, Rng& rng,
                      Annotations& notes) {}
  virtual void Report(GameMetrics& metrics) const {}

  const AuditLog& audits() const { return audits_; }

 protected:
  AuditLog audits_;
};

// Names: walker.connectivity, walker.hamiltonicity, walker.random,
// breaker.isolation, breaker.random, breaker.greedy_star.
std::unique_ptr<Strategy> MakeStrategy(std::string_view name,
                                       const StrategyConfig& config);
const std::vector<std::string>& StrategyNames();
bool IsWalkerStrategy(std::string_view name);

// Regime predicates.
bool ConnectivityRegime(int n, int b, const Rational& epsilon);
bool HamiltonicityRegime(int n, int b, const Rational& p,
                         const Rational& epsilon);

}  // namespace walkbreak

#endif  // WALKBREAK_STRATEGY_H_
