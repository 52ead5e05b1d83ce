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

#include "walkbreak/board.h"

#include <algorithm>
#include <string>

#include "walkbreak/error.h"

namespace walkbreak {

namespace {

std::string EdgeText(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

void CheckTurn(const GameState& state, Player mover) {
  if (state.over()) {
    throw Error(ErrorCode::kTurnError, "game is already over");
  }
  if (state.to_move() != mover) {
    throw Error(ErrorCode::kTurnError,
                "not " + std::string(PlayerName(mover)) + "'s turn");
  }
}

}  // namespace

std::string_view PlayerName(Player p) {
  return p == Player::kWalker ? "walker" : "breaker";
}

std::string_view GoalName(Goal g) {
  return g == Goal::kConnectivity ? "connectivity" : "hamiltonicity";
}

std::string_view StatusName(GameStatus s) {
  switch (s) {
    case GameStatus::kRunning: return "Running";
    case GameStatus::kWalkerWin: return "WalkerWin";
    case GameStatus::kBreakerWin: return "BreakerWin";
    case GameStatus::kWalkerResign: return "WalkerResign";
  }
  return "Running";
}

Player ParsePlayer(std::string_view s) {
  if (s == "walker") return Player::kWalker;
  if (s == "breaker") return Player::kBreaker;
  throw Error(ErrorCode::kInvalidConfig, "unknown player '" + std::string(s) + "'");
}

Goal ParseGoal(std::string_view s) {
  if (s == "connectivity") return Goal::kConnectivity;
  if (s == "hamiltonicity" || s == "hamilton_cycle") return Goal::kHamiltonCycle;
  throw Error(ErrorCode::kInvalidConfig, "unknown goal '" + std::string(s) + "'");
}

GameStatus ParseStatus(std::string_view s) {
  for (GameStatus g : {GameStatus::kRunning, GameStatus::kWalkerWin,
                       GameStatus::kBreakerWin, GameStatus::kWalkerResign}) {
    if (StatusName(g) == s) return g;
  }
  throw Error(ErrorCode::kParseError, "unknown outcome '" + std::string(s) + "'");
}

WalkerMove WalkThrough(std::initializer_list<int> vertices) {
  WalkerMove move;
  const int* prev = nullptr;
  for (const int& v : vertices) {
    if (prev) move.steps.push_back({*prev, v});
    prev = &v;
  }
  return move;
}

SimpleGraph GameState::WalkerGraph() const {
  SimpleGraph g(n_);
  for (int u = 0; u < n_; ++u) {
    if (walker_degree_[u] == 0) continue;
    auto row = owner_row(u);
    for (int v = u + 1; v < n_; ++v) {
      if (row[v] == Owner::kWalker) g.AddEdge(u, v);
    }
  }
  return g;
}

SimpleGraph GameState::BreakerGraph() const {
  SimpleGraph g(n_);
  for (int u = 0; u < n_; ++u) {
    auto row = owner_row(u);
    for (int v = u + 1; v < n_; ++v) {
      if (row[v] == Owner::kBreaker) g.AddEdge(u, v);
    }
  }
  return g;
}

void GameState::Resign() {
  if (status_ == GameStatus::kRunning) status_ = GameStatus::kWalkerResign;
}

void GameState::SetOwner(int u, int v, Owner o) {
  owner_[static_cast<std::size_t>(u) * n_ + v] = o;
  owner_[static_cast<std::size_t>(v) * n_ + u] = o;
  --free_count_;
  if (o == Owner::kWalker) {
    for (int x : {u, v}) {
      if (walker_degree_[x]++ == 0) ++visited_count_;
    }
    ++walker_edges_;
  } else {
    ++breaker_degree_[u];
    ++breaker_degree_[v];
    ++breaker_edges_;
  }
}

void GameState::BeginMove(Player mover) {
  if (mover == first_player_) ++round_;
}

void GameState::EndMove(Player mover) {
  to_move_ = mover == Player::kWalker ? Player::kBreaker : Player::kWalker;
  if (status_ == GameStatus::kRunning && free_count_ == 0) {
    status_ = goal_round_ ? GameStatus::kWalkerWin : GameStatus::kBreakerWin;
  }
}

bool GameState::GoalHolds() const {
  if (visited_count_ < n_) return false;
  if (options_.goal == Goal::kConnectivity) return true;
  for (int v = 0; v < n_; ++v) {
    if (walker_degree_[v] < 2) return false;
  }
  return HasHamiltonCycle(WalkerGraph(), options_.hamilton_budget) ==
         HamiltonResult::kYes;
}

GameState NewGame(int n, int b, Player first_player, GameOptions options) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidConfig,
                "need at least 3 vertices, got " + std::to_string(n));
  }
  if (b < 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "Breaker bias must be >= 1, got " + std::to_string(b));
  }
  if (options.walker_bias < 1) {
    throw Error(ErrorCode::kInvalidConfig, "Walker bias must be >= 1");
  }
  GameState s;
  s.n_ = n;
  s.breaker_bias_ = b;
  s.options_ = options;
  s.owner_.assign(static_cast<std::size_t>(n) * n, Owner::kFree);
  s.breaker_degree_.assign(n, 0);
  s.walker_degree_.assign(n, 0);
  s.free_count_ = s.total_pairs();
  s.first_player_ = first_player;
  s.to_move_ = first_player;
  return s;
}

void ApplyBreakerMove(GameState& state, const BreakerMove& move) {
  CheckTurn(state, Player::kBreaker);
  const int n = state.n();
  std::vector<Edge> edges;
  edges.reserve(move.edges.size());
  for (Edge e : move.edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) {
      throw Error(ErrorCode::kIllegalClaim,
                  "not a pair of distinct board vertices: " + EdgeText(e.u, e.v));
    }
    if (state.owner(e.u, e.v) != Owner::kFree) {
      throw Error(ErrorCode::kIllegalClaim,
                  "edge " + EdgeText(e.u, e.v) + " is already owned");
    }
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::kIllegalClaim, "edge listed twice in one move");
  }
  const std::int64_t expected =
      std::min<std::int64_t>(state.breaker_bias(), state.free_count());
  if (static_cast<std::int64_t>(edges.size()) != expected) {
    throw Error(ErrorCode::kBadBias,
                "Breaker must claim " + std::to_string(expected) +
                    " edges, got " + std::to_string(edges.size()));
  }

  state.BeginMove(Player::kBreaker);
  for (Edge e : edges) state.SetOwner(e.u, e.v, Owner::kBreaker);
  if (!state.goal_round_) {
    for (Edge e : edges) {
      for (int x : {e.u, e.v}) {
        if (state.breaker_degree_[x] == n - 1 && !state.isolated_vertex_) {
          state.isolated_vertex_ = x;
          state.status_ = GameStatus::kBreakerWin;
        }
      }
    }
  }
  state.EndMove(Player::kBreaker);
}

void ApplyWalkerMove(GameState& state, const WalkerMove& move) {
  CheckTurn(state, Player::kWalker);
  const int n = state.n();
  if (static_cast<int>(move.steps.size()) != state.walker_bias()) {
    throw Error(ErrorCode::kBadBias,
                "Walker must take " + std::to_string(state.walker_bias()) +
                    " steps, got " + std::to_string(move.steps.size()));
  }
  std::optional<int> at = state.walker_position();
  for (const Step& s : move.steps) {
    if (s.from < 0 || s.from >= n || s.to < 0 || s.to >= n || s.from == s.to) {
      throw Error(ErrorCode::kBrokenWalk,
                  "invalid step " + EdgeText(s.from, s.to));
    }
    if (at && s.from != *at) {
      throw Error(ErrorCode::kBrokenWalk,
                  "step " + EdgeText(s.from, s.to) + " does not start at " +
                      std::to_string(*at));
    }
    if (state.owner(s.from, s.to) == Owner::kBreaker) {
      throw Error(ErrorCode::kIllegalTraversal,
                  "edge " + EdgeText(s.from, s.to) + " belongs to Breaker");
    }
    at = s.to;
  }

  state.BeginMove(Player::kWalker);
  bool claimed = false;
  for (const Step& s : move.steps) {
    if (state.owner(s.from, s.to) == Owner::kFree) {
      state.SetOwner(s.from, s.to, Owner::kWalker);
      claimed = true;
    }
  }
  state.position_ = move.steps.back().to;
  if (claimed && !state.goal_round_ && state.GoalHolds()) {
    state.goal_round_ = state.round_;
    if (state.options_.stop_on_win) state.status_ = GameStatus::kWalkerWin;
  }
  state.EndMove(Player::kWalker);
}

std::vector<int> LegalSteps(const GameState& state, int from) {
  std::vector<int> out;
  if (from < 0 || from >= state.n()) return out;
  auto row = state.owner_row(from);
  for (int w = 0; w < state.n(); ++w) {
    if (w != from && row[w] != Owner::kBreaker) out.push_back(w);
  }
  return out;
}

}  // namespace walkbreak
