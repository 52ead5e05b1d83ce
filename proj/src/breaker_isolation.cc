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

#include <algorithm>

#include "walkbreak/strategies.h"

namespace walkbreak {

IsolationBreaker::IsolationBreaker(const StrategyConfig& config)
    : n_(config.n),
      b_(config.b),
      target_order_(config.b / 2),
      in_clique_(config.n, 0),
      pending_(static_cast<std::size_t>(config.n) * config.n, 0) {}

bool IsolationBreaker::Claimable(const GameState& state, int u, int v) const {
  return state.owner(u, v) == Owner::kFree &&
         !pending_[static_cast<std::size_t>(u) * n_ + v];
}

void IsolationBreaker::Take(std::vector<Edge>& move, int u, int v) {
  move.emplace_back(u, v);
  pending_[static_cast<std::size_t>(u) * n_ + v] = 1;
  pending_[static_cast<std::size_t>(v) * n_ + u] = 1;
}

void IsolationBreaker::Evict(const GameState& state, Annotations& notes) {
  const std::size_t before = clique_.size();
  std::vector<int> kept;
  for (int c : clique_) {
    if (state.visited(c)) {
      in_clique_[c] = 0;
      notes.push_back({{"kind", "clique_evict"}, {"vertex", c}});
    } else {
      kept.push_back(c);
    }
  }
  clique_ = std::move(kept);
  bool pairwise = true;
  for (std::size_t i = 0; i < clique_.size(); ++i) {
    for (std::size_t j = i + 1; j < clique_.size(); ++j) {
      if (state.owner(clique_[i], clique_[j]) != Owner::kBreaker)
        pairwise = false;
    }
  }
  const double lost = static_cast<double>(before - clique_.size());
  audits_.Check(claims::kCliqueIntegrity, pairwise && lost <= 1, lost, 1,
                notes, {{"pairwise", pairwise}, {"round", state.round()}});
}

bool IsolationBreaker::GrowClique(const GameState& state,
                                  std::vector<Edge>& move, int& need,
                                  Annotations& notes) {
  int u = -1, v = -1;
  for (int x = 0; x < n_ && v < 0; ++x) {
    if (in_clique_[x] || state.visited(x) || state.walker_position() == x)
      continue;
    (u < 0 ? u : v) = x;
  }
  if (v < 0) {
    notes.push_back({{"kind", "fallback"},
                     {"rule", "clique_growth"},
                     {"reason", "no two untouched vertices"}});
    return false;
  }
  std::vector<Edge> claim;
  if (state.owner(u, v) == Owner::kFree) claim.emplace_back(u, v);
  for (int c : clique_) {
    if (state.owner(u, c) == Owner::kFree) claim.emplace_back(u, c);
    if (state.owner(v, c) == Owner::kFree) claim.emplace_back(v, c);
  }
  if (static_cast<int>(claim.size()) > need) {
    notes.push_back({{"kind", "fallback"},
                     {"rule", "clique_growth"},
                     {"reason", "bias too small"}});
    return false;
  }
  for (const Edge& e : claim) Take(move, e.u, e.v);
  need -= static_cast<int>(claim.size());
  for (int x : {u, v}) {
    clique_.push_back(x);
    in_clique_[x] = 1;
  }
  std::sort(clique_.begin(), clique_.end());
  return true;
}

void IsolationBreaker::AttackBoxes(const GameState& state,
                                   std::vector<Edge>& move, int& need) {
  if (clique_.empty() || need <= 0) return;
  std::vector<int> sizes;
  for (int c : clique_) {
    int free = 0;
    for (int x = 0; x < n_; ++x) {
      if (x != c && Claimable(state, c, x)) ++free;
    }
    sizes.push_back(free);
  }
  BoxGameState boxes(sizes, need);
  const std::vector<int> counts = BoxMakerStrategyMove(boxes);
  for (std::size_t i = 0; i < clique_.size(); ++i) {
    const int c = clique_[i];
    int take = counts[i];
    for (int x = 0; x < n_ && take > 0; ++x) {
      if (x == c || !Claimable(state, c, x)) continue;
      Take(move, c, x);
      --take;
      --need;
    }
  }
}

void IsolationBreaker::FillLowest(const GameState& state,
                                  std::vector<Edge>& move, int& need) {
  // Skip the prefix that is owned for good.
  while (cursor_u_ < n_ - 1 &&
         state.owner(cursor_u_, cursor_v_) != Owner::kFree) {
    if (++cursor_v_ == n_) {
      ++cursor_u_;
      cursor_v_ = cursor_u_ + 1;
    }
  }
  int u = cursor_u_, v = cursor_v_;
  while (need > 0 && u < n_ - 1) {
    if (Claimable(state, u, v)) {
      Take(move, u, v);
      --need;
    }
    if (++v == n_) {
      ++u;
      v = u + 1;
    }
  }
}

Decision IsolationBreaker::Decide(const GameState& state, Rng& rng,
                                  Annotations& notes) {
  Evict(state, notes);
  int need = static_cast<int>(
      std::min<std::int64_t>(b_, state.free_count()));
  std::vector<Edge> move;
  if (stage_ == Stage::kBuildClique) {
    const int i = build_rounds_ + 1;
    if (static_cast<int>(clique_.size()) < target_order_ && 2 * i < n_ - 4) {
      ++build_rounds_;
      if (!GrowClique(state, move, need, notes)) stage_ = Stage::kBoxAttack;
      // Leftover budget goes to the clique's free edges.
      for (int c : clique_) {
        for (int x = 0; x < n_ && need > 0; ++x) {
          if (x != c && Claimable(state, c, x)) {
            Take(move, c, x);
            --need;
          }
        }
      }
    } else {
      stage_ = Stage::kBoxAttack;
      notes.push_back({{"kind", "stage"},
                       {"stage", "box_attack"},
                       {"clique", clique_}});
    }
  }
  if (stage_ == Stage::kBoxAttack) AttackBoxes(state, move, need);
  FillLowest(state, move, need);
  for (const Edge& e : move) {
    pending_[static_cast<std::size_t>(e.u) * n_ + e.v] = 0;
    pending_[static_cast<std::size_t>(e.v) * n_ + e.u] = 0;
  }
  return BreakerMove{std::move(move)};
}

}  // namespace walkbreak
