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

// Referee for biased (a:b) Walker-Breaker games on K_n.
//
// Walker claims edges along a walk: each step leaves her current position
// along a free edge (claiming it) or along one of her own edges (claiming
// nothing). Breaker claims b free edges per move, or every remaining free
// edge once fewer than b are left. Walker's goal is checked after each of
// her moves only.

#ifndef WALKBREAK_BOARD_H_
#define WALKBREAK_BOARD_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "walkbreak/graph.h"

namespace walkbreak {

enum class Owner : std::uint8_t { kFree = 0, kWalker = 1, kBreaker = 2 };
enum class Player { kWalker, kBreaker };
enum class Goal { kConnectivity, kHamiltonCycle };
enum class GameStatus { kRunning, kWalkerWin, kBreakerWin, kWalkerResign };

std::string_view PlayerName(Player p);
std::string_view GoalName(Goal g);
std::string_view StatusName(GameStatus s);
Player ParsePlayer(std::string_view s);
Goal ParseGoal(std::string_view s);
GameStatus ParseStatus(std::string_view s);

struct Step {
  int from = 0;
  int to = 0;
  friend bool operator==(const Step&, const Step&) = default;
};

struct WalkerMove {
  std::vector<Step> steps;
  friend bool operator==(const WalkerMove&, const WalkerMove&) = default;
};

struct BreakerMove {
  std::vector<Edge> edges;
  friend bool operator==(const BreakerMove&, const BreakerMove&) = default;
};

// Convenience: walk through the listed vertices, e.g. {0, 3, 1} is the
// two-step move 0->3->1.
WalkerMove WalkThrough(std::initializer_list<int> vertices);

struct GameOptions {
  Goal goal = Goal::kConnectivity;
  int walker_bias = 2;
  // When false, play continues after Walker reaches her goal; the win is
  // still recorded and reported at the end.
  bool stop_on_win = true;
  // Node budget for each in-game Hamilton cycle check of Walker's graph.
  std::uint64_t hamilton_budget = 200'000;
  friend bool operator==(const GameOptions&, const GameOptions&) = default;
};

class GameState {
 public:
  int n() const { return n_; }
  int walker_bias() const { return options_.walker_bias; }
  int breaker_bias() const { return breaker_bias_; }
  const GameOptions& options() const { return options_; }

  Owner owner(int u, int v) const {
    return owner_[static_cast<std::size_t>(u) * n_ + v];
  }
  // Ownership of all pairs {v, x}; entry v itself is kFree and meaningless.
  std::span<const Owner> owner_row(int v) const {
    return {owner_.data() + static_cast<std::size_t>(v) * n_,
            static_cast<std::size_t>(n_)};
  }

  std::optional<int> walker_position() const { return position_; }
  int round() const { return round_; }
  Player first_player() const { return first_player_; }
  Player to_move() const { return to_move_; }
  GameStatus status() const { return status_; }
  bool over() const { return status_ != GameStatus::kRunning; }

  int breaker_degree(int v) const { return breaker_degree_[v]; }
  int walker_degree(int v) const { return walker_degree_[v]; }
  // A vertex is visited once Walker owns an edge at it.
  bool visited(int v) const { return walker_degree_[v] > 0; }
  int visited_count() const { return visited_count_; }

  std::int64_t total_pairs() const {
    return static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
  }
  std::int64_t free_count() const { return free_count_; }
  std::int64_t walker_edge_count() const { return walker_edges_; }
  std::int64_t breaker_edge_count() const { return breaker_edges_; }

  // Round in which Walker's goal first held, if it has.
  std::optional<int> goal_round() const { return goal_round_; }
  // A vertex whose n-1 edges all belong to Breaker, certifying that the
  // goal is out of reach; set when the game ends this way.
  std::optional<int> isolated_vertex() const { return isolated_vertex_; }

  SimpleGraph WalkerGraph() const;
  SimpleGraph BreakerGraph() const;

  // Ends the game as a Walker resignation (issued by the game driver when a
  // strategy gives up, never by the referee).
  void Resign();

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  friend GameState NewGame(int n, int b, Player first_player,
                           GameOptions options);
  friend void ApplyBreakerMove(GameState& state, const BreakerMove& move);
  friend void ApplyWalkerMove(GameState& state, const WalkerMove& move);

  void SetOwner(int u, int v, Owner o);
  void BeginMove(Player mover);
  void EndMove(Player mover);
  bool GoalHolds() const;

  int n_ = 0;
  int breaker_bias_ = 1;
  GameOptions options_;
  std::vector<Owner> owner_;
  std::vector<int> breaker_degree_;
  std::vector<int> walker_degree_;
  int visited_count_ = 0;
  std::int64_t free_count_ = 0;
  std::int64_t walker_edges_ = 0;
  std::int64_t breaker_edges_ = 0;
  std::optional<int> position_;
  int round_ = 0;
  Player first_player_ = Player::kBreaker;
  Player to_move_ = Player::kBreaker;
  GameStatus status_ = GameStatus::kRunning;
  std::optional<int> goal_round_;
  std::optional<int> isolated_vertex_;
};

// Throws kInvalidConfig for n < 3, b < 1 or walker_bias < 1.
GameState NewGame(int n, int b, Player first_player = Player::kBreaker,
                  GameOptions options = {});

// Both validate the whole move before touching the state, so a rejected
// move leaves the state unchanged.
void ApplyBreakerMove(GameState& state, const BreakerMove& move);
void ApplyWalkerMove(GameState& state, const WalkerMove& move);

// Vertices reachable from `from` in one step: free or Walker-owned edges.
std::vector<int> LegalSteps(const GameState& state, int from);

}  // namespace walkbreak

#endif  // WALKBREAK_BOARD_H_
