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
#include <cmath>
#include <set>

#include "walkbreak/error.h"
#include "walkbreak/strategies.h"

namespace walkbreak {

const std::vector<std::string>& StrategyNames() {
  static const std::vector<std::string> names = {
      "walker.connectivity", "walker.hamiltonicity", "walker.random",
      "breaker.isolation",   "breaker.random",       "breaker.greedy_star"};
  return names;
}

bool IsWalkerStrategy(std::string_view name) {
  return name.starts_with("walker.");
}

std::unique_ptr<Strategy> MakeStrategy(std::string_view name,
                                       const StrategyConfig& config) {
  if (name == "walker.connectivity")
    return std::make_unique<ConnectivityWalker>(config);
  if (name == "walker.hamiltonicity")
    return std::make_unique<HamiltonicityWalker>(config);
  if (name == "walker.random") return std::make_unique<RandomWalker>(config);
  if (name == "breaker.isolation")
    return std::make_unique<IsolationBreaker>(config);
  if (name == "breaker.random") return std::make_unique<RandomBreaker>(config);
  if (name == "breaker.greedy_star")
    return std::make_unique<GreedyStarBreaker>(config);
  throw Error(ErrorCode::kInvalidConfig,
              "unknown strategy '" + std::string(name) + "'");
}

bool ConnectivityRegime(int n, int b, const Rational& epsilon) {
  if (n < 3 || epsilon <= 0 || epsilon >= Rational(1, 4)) return false;
  return b <= (0.25 - ToDouble(epsilon)) * n / std::log(n);
}

bool HamiltonicityRegime(int n, int b, const Rational& p,
                         const Rational& epsilon) {
  if (n < 3 || epsilon <= 0 || epsilon > Rational(1, 100)) return false;
  if (p <= 0 || p >= 1) return false;
  const double eps = ToDouble(epsilon);
  if (ToDouble(p) < 10.0 * std::log(n) / (eps * n)) return false;
  // b <= epsilon / (60 p), exactly.
  return Rational(b) <= epsilon / (p * 60);
}

Decision RandomBreaker::Decide(const GameState& state, Rng& rng,
                               Annotations& notes) {
  const int n = state.n();
  const std::int64_t need =
      std::min<std::int64_t>(state.breaker_bias(), state.free_count());
  BreakerMove move;
  std::set<Edge> chosen;
  std::uniform_int_distribution<int> vertex(0, n - 1);
  int misses = 0;
  while (static_cast<std::int64_t>(chosen.size()) < need && misses < 64) {
    int u = vertex(rng);
    int v = vertex(rng);
    if (u == v || state.owner(u, v) != Owner::kFree ||
        !chosen.insert(Edge(u, v)).second) {
      ++misses;
    }
  }
  if (static_cast<std::int64_t>(chosen.size()) < need) {
    // Sparse board: sample the rest from the explicit free list.
    std::vector<Edge> free;
    for (int u = 0; u < n; ++u) {
      auto row = state.owner_row(u);
      for (int v = u + 1; v < n; ++v) {
        if (row[v] == Owner::kFree && !chosen.count(Edge(u, v)))
          free.emplace_back(u, v);
      }
    }
    std::shuffle(free.begin(), free.end(), rng);
    for (const Edge& e : free) {
      if (static_cast<std::int64_t>(chosen.size()) >= need) break;
      chosen.insert(e);
    }
  }
  move.edges.assign(chosen.begin(), chosen.end());
  return move;
}

Decision GreedyStarBreaker::Decide(const GameState& state, Rng& rng,
                                   Annotations& notes) {
  const int n = state.n();
  int need = static_cast<int>(
      std::min<std::int64_t>(state.breaker_bias(), state.free_count()));
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = state.breaker_degree(v);
  std::set<Edge> chosen;
  auto free_at = [&](int v, int x) {
    return x != v && state.owner(v, x) == Owner::kFree &&
           !chosen.count(Edge(v, x));
  };
  std::vector<char> exhausted(n, 0);
  while (need > 0) {
    int target = -1;
    for (int v = 0; v < n; ++v) {
      if (state.visited(v) || state.walker_position() == v || exhausted[v])
        continue;
      if (target < 0 || degree[v] > degree[target]) target = v;
    }
    if (target < 0) break;
    bool any = false;
    for (int x = 0; x < n && need > 0; ++x) {
      if (!free_at(target, x)) continue;
      chosen.insert(Edge(target, x));
      ++degree[target];
      ++degree[x];
      --need;
      any = true;
    }
    if (!any || need > 0) exhausted[target] = 1;
  }
  for (int u = 0; u < n && need > 0; ++u) {
    for (int v = u + 1; v < n && need > 0; ++v) {
      if (free_at(u, v)) {
        chosen.insert(Edge(u, v));
        --need;
      }
    }
  }
  BreakerMove move;
  move.edges.assign(chosen.begin(), chosen.end());
  return move;
}

Decision RandomWalker::Decide(const GameState& state, Rng& rng,
                              Annotations& notes) {
  const int n = state.n();
  int at;
  if (auto pos = state.walker_position()) {
    at = *pos;
  } else {
    std::vector<int> starts;
    for (int v = 0; v < n; ++v) {
      if (!LegalSteps(state, v).empty()) starts.push_back(v);
    }
    if (starts.empty()) return Resign{"no legal start vertex"};
    std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
    at = starts[pick(rng)];
  }
  WalkerMove move;
  for (int i = 0; i < state.walker_bias(); ++i) {
    // Claims within the move never turn an edge into Breaker's, so the
    // referee's view of legality is unchanged between steps.
    std::vector<int> steps = LegalSteps(state, at);
    if (steps.empty()) {
      if (!move.steps.empty()) {
        steps.push_back(move.steps.back().from);
      } else {
        return Resign{"stuck"};
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    int next = steps[pick(rng)];
    move.steps.push_back({at, next});
    at = next;
  }
  return move;
}

}  // namespace walkbreak
