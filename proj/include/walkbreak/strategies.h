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

// Concrete strategies. All ties are broken towards the lowest vertex index.

#ifndef WALKBREAK_STRATEGIES_H_
#define WALKBREAK_STRATEGIES_H_

#include <optional>
#include <vector>

#include "walkbreak/box_games.h"
#include "walkbreak/graph.h"
#include "walkbreak/strategy.h"

namespace walkbreak {

// Walker's connectivity strategy. Every move ends at the unvisited vertex of
// largest Breaker degree, passing through an unvisited vertex when possible.
class ConnectivityWalker : public Strategy {
 public:
  explicit ConnectivityWalker(const StrategyConfig& config);

  std::string_view name() const override { return "walker.connectivity"; }
  Player role() const override { return Player::kWalker; }
  bool in_regime() const override { return in_regime_; }

  Decision Decide(const GameState& state, Rng& rng,
                  Annotations& notes) override;

  // Vertices not yet visited by Walker, as of the last decision.
  const std::vector<int>& unvisited() const { return unvisited_; }

  // 2b ln n - b and 4b ln n - b.
  double degree_bound() const { return degree_bound_; }
  double connector_bound() const { return connector_bound_; }

 private:
  Decision FirstMove(const GameState& state, Annotations& notes);
  void SyncUnvisited(const GameState& state);

  int n_;
  int b_;
  bool in_regime_;
  double degree_bound_;
  double connector_bound_;
  std::vector<int> unvisited_;
};

enum class ExposureStage { kOne, kTwo };

// Bookkeeping of the exposure strategy: which pairs have had their coin
// tossed, the random graph H of successes, G' = successes Walker owns, the
// failure counters and the simulated MinBox(n, 4n, p/2, 4b) game.
struct ExposureState {
  ExposureState(int n, int b, Rational p, Rational epsilon);

  bool unexposed(int u, int v) const {
    return unexposed_[static_cast<std::size_t>(u) * n + v] != 0;
  }
  int unexposed_count(int v) const { return unexposed_count_[v]; }
  // U_v in increasing order.
  std::vector<int> UnexposedAt(int v) const;
  // Marks {u, v} exposed; returns false if it already was.
  bool Expose(int u, int v);

  int n;
  int b;
  Rational p;
  Rational epsilon;
  std::optional<int> exposure_vertex;
  SimpleGraph h;
  SimpleGraph gprime;
  std::vector<int> f1;
  std::vector<int> f2;
  MinBoxState minbox;
  ExposureStage stage = ExposureStage::kOne;
  std::int64_t exposed_pairs = 0;
  std::int64_t double_exposures = 0;

 private:
  std::vector<char> unexposed_;
  std::vector<int> unexposed_count_;
};

// Walker's two-stage exposure strategy for spanning properties: she builds
// G' (a subgraph of her own graph) whose degrees track those of a random
// graph H ~ G(n, p) generated on the fly.
class HamiltonicityWalker : public Strategy {
 public:
  explicit HamiltonicityWalker(const StrategyConfig& config);

  std::string_view name() const override { return "walker.hamiltonicity"; }
  Player role() const override { return Player::kWalker; }
  bool in_regime() const override { return in_regime_; }

  Decision Decide(const GameState& state, Rng& rng,
                  Annotations& notes) override;
  void Observe(const GameState& after, const Decision& opponent_move,
               Annotations& notes) override;
  void Finish(const GameState& final_state, Rng& rng,
              Annotations& notes) override;
  void Report(GameMetrics& metrics) const override;

  const ExposureState& exposure() const { return es_; }

  // Number of extra simulated elements after a type I failure: ceil(2pn)-1.
  int type1_extra_claims() const { return type1_extra_; }
  // epsilon (n-1) / 5 + b.
  double c3_bound() const { return c3_bound_; }
  // (9/10) epsilon (n-1) p.
  double c6_bound() const { return c6_bound_; }

 private:
  Decision FirstMove(const GameState& state, Annotations& notes);
  Decision MoveTo(const GameState& state, int v, Annotations& notes);
  Decision ExposeAt(const GameState& state, int v, Rng& rng,
                    Annotations& notes);
  void EnterStageTwo(const GameState& state, Rng& rng, Annotations& notes,
                     std::string_view when);
  void AuditDecisionPoint(const GameState& state, Annotations& notes);
  std::optional<int> DeclareExposureVertex(Annotations& notes);
  static WalkerMove BackAndForth(const GameState& state);

  ExposureState es_;
  bool in_regime_;
  int type1_extra_;
  double c3_bound_;
  double c6_bound_;
  std::uint64_t certify_budget_;
};

// Breaker's isolation strategy (Walker moves first): build a clique of order
// floor(b/2) on vertices Walker never visited, then play the Box game with
// one box per surviving clique vertex until one of them is isolated.
class IsolationBreaker : public Strategy {
 public:
  enum class Stage { kBuildClique, kBoxAttack };

  explicit IsolationBreaker(const StrategyConfig& config);

  std::string_view name() const override { return "breaker.isolation"; }
  Player role() const override { return Player::kBreaker; }

  Decision Decide(const GameState& state, Rng& rng,
                  Annotations& notes) override;

  const std::vector<int>& clique() const { return clique_; }
  Stage stage() const { return stage_; }
  int target_order() const { return target_order_; }

 private:
  void Evict(const GameState& state, Annotations& notes);
  bool GrowClique(const GameState& state, std::vector<Edge>& move, int& need,
                  Annotations& notes);
  void AttackBoxes(const GameState& state, std::vector<Edge>& move, int& need);
  void FillLowest(const GameState& state, std::vector<Edge>& move, int& need);
  bool Claimable(const GameState& state, int u, int v) const;
  void Take(std::vector<Edge>& move, int u, int v);

  int n_;
  int b_;
  int target_order_;
  Stage stage_ = Stage::kBuildClique;
  int build_rounds_ = 0;
  std::vector<int> clique_;
  std::vector<char> in_clique_;
  // Pairs already in the move being built, row-major; cleared per move.
  std::vector<char> pending_;
  // Every pair before this cursor (row-major, u < v) is owned.
  int cursor_u_ = 0;
  int cursor_v_ = 1;
};

class RandomBreaker : public Strategy {
 public:
  explicit RandomBreaker(const StrategyConfig& config) {}
  std::string_view name() const override { return "breaker.random"; }
  Player role() const override { return Player::kBreaker; }
  Decision Decide(const GameState& state, Rng& rng,
                  Annotations& notes) override;
};

// Claims free edges at the unvisited vertex of largest Breaker degree.
class GreedyStarBreaker : public Strategy {
 public:
  explicit GreedyStarBreaker(const StrategyConfig& config) {}
  std::string_view name() const override { return "breaker.greedy_star"; }
  Player role() const override { return Player::kBreaker; }
  Decision Decide(const GameState& state, Rng& rng,
                  Annotations& notes) override;
};

// Uniformly random legal steps.
class RandomWalker : public Strategy {
 public:
  explicit RandomWalker(const StrategyConfig& config) {}
  std::string_view name() const override { return "walker.random"; }
  Player role() const override { return Player::kWalker; }
  Decision Decide(const GameState& state, Rng& rng,
                  Annotations& notes) override;
};

}  // namespace walkbreak

#endif  // WALKBREAK_STRATEGIES_H_
