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

#include <cmath>

#include "walkbreak/strategies.h"

namespace walkbreak {
namespace {

bool Free(const GameState& s, int u, int v) {
  return s.owner(u, v) == Owner::kFree;
}

bool Passable(const GameState& s, int u, int v) {
  return s.owner(u, v) != Owner::kBreaker;
}

// Walker's move once every vertex is visited: along her lowest owned edge
// at the current position and back.
Decision Idle(const GameState& s) {
  const int w = *s.walker_position();
  for (int x = 0; x < s.n(); ++x) {
    if (x != w && s.owner(w, x) == Owner::kWalker) {
      return WalkerMove{{{w, x}, {x, w}}};
    }
  }
  return Resign{"no owned edge at position"};
}

}  // namespace

ConnectivityWalker::ConnectivityWalker(const StrategyConfig& config)
    : n_(config.n),
      b_(config.b),
      in_regime_(ConnectivityRegime(config.n, config.b, config.epsilon)),
      degree_bound_(2.0 * config.b * std::log(config.n) - config.b),
      connector_bound_(4.0 * config.b * std::log(config.n) - config.b) {
  audits_.set_hard(in_regime_ && config.audit_mode == AuditMode::kHard);
}

void ConnectivityWalker::SyncUnvisited(const GameState& state) {
  unvisited_.clear();
  for (int v = 0; v < state.n(); ++v) {
    if (!state.visited(v)) unvisited_.push_back(v);
  }
}

Decision ConnectivityWalker::FirstMove(const GameState& state,
                                       Annotations& notes) {
  const int n = state.n();
  // Top two by Breaker degree, lowest index on ties.
  int v0 = -1, v1 = -1;
  for (int v = 0; v < n; ++v) {
    const int d = state.breaker_degree(v);
    if (v0 < 0 || d > state.breaker_degree(v0)) {
      v1 = v0;
      v0 = v;
    } else if (v1 < 0 || d > state.breaker_degree(v1)) {
      v1 = v;
    }
  }
  if (state.owner(v0, v1) == Owner::kBreaker) {
    for (int u = 0; u < n; ++u) {
      if (u == v0 || u == v1) continue;
      if (Free(state, v0, u) && Free(state, u, v1)) {
        return WalkThrough({v0, u, v1});
      }
    }
    return Resign{"no free connector between the two largest degrees"};
  }
  int best = -1;
  int best_any = -1;
  for (int u = 0; u < n; ++u) {
    if (u == v0 || u == v1) continue;
    if (best_any < 0 || state.breaker_degree(u) > state.breaker_degree(best_any))
      best_any = u;
    if (!Free(state, v1, u)) continue;
    if (best < 0 || state.breaker_degree(u) > state.breaker_degree(best))
      best = u;
  }
  if (best < 0) return Resign{"no free edge out of the second vertex"};
  if (state.breaker_degree(best) < state.breaker_degree(best_any)) {
    notes.push_back({{"kind", "fallback"},
                     {"rule", "first_move_target"},
                     {"wanted", best_any},
                     {"chosen", best}});
  }
  return WalkThrough({v0, v1, best});
}

Decision ConnectivityWalker::Decide(const GameState& state, Rng& rng,
                                    Annotations& notes) {
  SyncUnvisited(state);
  if (!state.walker_position()) return FirstMove(state, notes);
  if (unvisited_.empty()) return Idle(state);

  const int w = *state.walker_position();
  int a = unvisited_.front();
  for (int u : unvisited_) {
    if (state.breaker_degree(u) > state.breaker_degree(a)) a = u;
  }
  const double da = state.breaker_degree(a);
  const double dwa = state.breaker_degree(w) + da;
  const Json at = {{"round", state.round()}, {"w", w}, {"a", a}};
  audits_.Check(claims::kDegreeBound, da <= degree_bound_, da, degree_bound_,
                notes, at);
  audits_.Check(claims::kConnector, dwa <= connector_bound_, dwa,
                connector_bound_, notes, at);
  audits_.Check(claims::kConnectorFeasible, dwa < n_ - 2, dwa, n_ - 2, notes,
                at);

  for (int y : unvisited_) {
    if (y != a && Free(state, w, y) && Free(state, y, a)) {
      return WalkThrough({w, y, a});
    }
  }
  for (int y = 0; y < state.n(); ++y) {
    if (y != w && y != a && Passable(state, w, y) && Passable(state, y, a)) {
      return WalkThrough({w, y, a});
    }
  }
  // No connector: take the edge wa itself, then step on, preferring an
  // unvisited vertex.
  if (Passable(state, w, a)) {
    int next = -1;
    for (int x = 0; x < state.n(); ++x) {
      if (x == a || !Passable(state, a, x)) continue;
      if (next < 0 || (!state.visited(x) && state.visited(next))) next = x;
    }
    if (next >= 0) {
      notes.push_back({{"kind", "fallback"},
                       {"rule", "direct_edge"},
                       {"w", w},
                       {"a", a},
                       {"round", state.round()}});
      return WalkThrough({w, a, next});
    }
  }
  return Resign{"no connector to the target vertex"};
}

}  // namespace walkbreak
