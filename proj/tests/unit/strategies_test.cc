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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "walkbreak/error.h"
#include "walkbreak/game.h"
#include "walkbreak/strategies.h"

namespace walkbreak {
namespace {

StrategyConfig Config(int n, int b, Goal goal = Goal::kConnectivity) {
  StrategyConfig c;
  c.n = n;
  c.b = b;
  c.goal = goal;
  c.audit_mode = AuditMode::kFlag;
  return c;
}

// Applies Breaker's move and lets the Walker strategy observe it.
void BreakerPlays(GameState& s, Strategy& walker, std::vector<Edge> edges) {
  BreakerMove m{std::move(edges)};
  ApplyBreakerMove(s, m);
  Annotations notes;
  walker.Observe(s, Decision(m), notes);
}

WalkerMove WalkerDecides(const GameState& s, Strategy& walker, Rng& rng) {
  Annotations notes;
  Decision d = walker.Decide(s, rng, notes);
  REQUIRE(std::holds_alternative<WalkerMove>(d));
  return std::get<WalkerMove>(d);
}

TEST_CASE("walker.connectivity first move around a Breaker edge") {
  GameState s = NewGame(6, 1);
  ConnectivityWalker w(Config(6, 1));
  Rng rng(1);
  BreakerPlays(s, w, {{0, 1}});
  CHECK(WalkerDecides(s, w, rng) == WalkThrough({0, 2, 1}));
}

TEST_CASE("walker.connectivity first move with degree ties") {
  GameState s = NewGame(6, 2);
  ConnectivityWalker w(Config(6, 2));
  Rng rng(1);
  BreakerPlays(s, w, {{0, 1}, {0, 2}});
  CHECK(WalkerDecides(s, w, rng) == WalkThrough({0, 3, 1}));
}

TEST_CASE("walker.connectivity heads for the most blocked unvisited vertex") {
  GameState s = NewGame(8, 2);
  ConnectivityWalker w(Config(8, 2));
  Rng rng(1);
  BreakerPlays(s, w, {{0, 1}, {0, 2}});
  const WalkerMove first = WalkerDecides(s, w, rng);
  ApplyWalkerMove(s, first);
  BreakerPlays(s, w, {{5, 6}, {5, 7}});
  const WalkerMove second = WalkerDecides(s, w, rng);
  REQUIRE(second.steps.size() == 2);
  CHECK(second.steps[0].from == *s.walker_position());
  CHECK(second.steps[1].to == 5);
  CHECK_FALSE(s.visited(second.steps[0].to));
}

TEST_CASE("walker.connectivity visits every vertex in ceil((n-1)/2) rounds") {
  for (int seed = 0; seed < 20; ++seed) {
    GameSetup setup;
    setup.n = 100;
    setup.b = 3;
    setup.breaker = "breaker.greedy_star";
    setup.seed = seed;
    GameResult r = PlayGame(setup);
    CHECK(r.winner == Player::kWalker);
    CHECK(r.audits.hard_violations() == 0);
    CHECK(r.final_state.goal_round() <= 50);
  }
}

TEST_CASE("walker.hamiltonicity declares the most dangerous exposure vertex") {
  StrategyConfig c = Config(10, 2, Goal::kHamiltonCycle);
  c.p = Rational(2, 5);
  c.epsilon = Rational(1, 5);
  GameOptions options;
  options.goal = Goal::kHamiltonCycle;
  GameState s = NewGame(10, 2, Player::kBreaker, options);
  HamiltonicityWalker w(c);
  Rng rng(1);
  BreakerPlays(s, w, {{3, 5}, {3, 7}});
  CHECK(WalkerDecides(s, w, rng) == WalkThrough({0, 1, 3}));
  CHECK(w.exposure().exposure_vertex == 3);
}

TEST_CASE("walker.hamiltonicity type I failure") {
  StrategyConfig c = Config(10, 2, Goal::kHamiltonCycle);
  c.p = Rational(1, 1'000'000'000);
  c.epsilon = Rational(1, 5);
  GameOptions options;
  options.goal = Goal::kHamiltonCycle;
  GameState s = NewGame(10, 2, Player::kBreaker, options);
  HamiltonicityWalker w(c);
  Rng rng(1);
  BreakerPlays(s, w, {{3, 5}, {3, 7}});
  ApplyWalkerMove(s, WalkerDecides(s, w, rng));
  BreakerPlays(s, w, {{0, 2}, {4, 6}});
  const WalkerMove m = WalkerDecides(s, w, rng);
  CHECK(m == WalkThrough({3, 1, 3}));
  CHECK(w.exposure().f1[3] == 1);
  CHECK(w.exposure().unexposed_count(3) == 0);
  CHECK_FALSE(w.exposure().exposure_vertex.has_value());
  CHECK(w.exposure().gprime.num_edges() == 0);
}

TEST_CASE("walker.hamiltonicity type II failure") {
  bool seen = false;
  for (std::uint64_t seed = 0; seed < 64 && !seen; ++seed) {
    StrategyConfig c = Config(8, 2, Goal::kHamiltonCycle);
    c.p = Rational(999'999'999, 1'000'000'000);
    c.epsilon = Rational(1, 5);
    GameOptions options;
    options.goal = Goal::kHamiltonCycle;
    GameState s = NewGame(8, 2, Player::kBreaker, options);
    HamiltonicityWalker w(c);
    Rng rng(seed);
    BreakerPlays(s, w, {{3, 5}, {3, 7}});
    ApplyWalkerMove(s, WalkerDecides(s, w, rng));
    BreakerPlays(s, w, {{3, 4}, {3, 6}});
    Annotations notes;
    Decision d = w.Decide(s, rng, notes);
    const auto it = std::find_if(notes.begin(), notes.end(), [](const Json& j) {
      return j.value("kind", "") == "exposure";
    });
    REQUIRE(it != notes.end());
    if (it->at("result") != "type2") continue;
    seen = true;
    const int other = it->at("other").get<int>();
    CHECK(s.owner(3, other) == Owner::kBreaker);
    CHECK(w.exposure().f2[3] == 1);
    CHECK(w.exposure().f2[other] == 1);
    CHECK(w.exposure().gprime.num_edges() == 0);
    CHECK_FALSE(w.exposure().unexposed(3, other));
  }
  CHECK(seen);
}

TEST_CASE("walker.hamiltonicity keeps G' inside H and Walker's graph") {
  GameSetup setup;
  setup.n = 30;
  setup.b = 1;
  setup.goal = Goal::kHamiltonCycle;
  setup.walker = "walker.hamiltonicity";
  setup.p = Rational(1, 5);
  setup.epsilon = Rational(1, 5);
  setup.audit = AuditMode::kFlag;
  setup.stop_on_win = false;
  StrategyConfig c = MakeStrategyConfig(setup);
  HamiltonicityWalker w(c);
  std::unique_ptr<Strategy> b = MakeStrategy("breaker.random", c);
  GameResult r = PlayGame(setup, w, *b);
  const ExposureState& es = w.exposure();
  const SimpleGraph walker_graph = r.final_state.WalkerGraph();
  for (const Edge& e : es.gprime.Edges()) {
    CHECK(es.h.HasEdge(e.u, e.v));
    CHECK(walker_graph.HasEdge(e.u, e.v));
  }
  CHECK(es.exposed_pairs == 30 * 29 / 2);
  CHECK(es.double_exposures == 0);
  for (int v = 0; v < 30; ++v) CHECK(es.f1[v] <= 1);
}

TEST_CASE("breaker.isolation grows a Breaker clique") {
  GameState s = NewGame(20, 8, Player::kWalker);
  IsolationBreaker br(Config(20, 8));
  CHECK(br.target_order() == 4);
  Rng rng(1);
  Annotations notes;
  ApplyWalkerMove(s, WalkThrough({0, 1, 2}));

  Decision d1 = br.Decide(s, rng, notes);
  const BreakerMove m1 = std::get<BreakerMove>(d1);
  CHECK(m1.edges.size() == 8);
  CHECK(std::count(m1.edges.begin(), m1.edges.end(), Edge(3, 4)) == 1);
  ApplyBreakerMove(s, m1);
  CHECK(br.clique() == std::vector<int>{3, 4});

  ApplyWalkerMove(s, WalkThrough({2, 5, 6}));
  Decision d2 = br.Decide(s, rng, notes);
  ApplyBreakerMove(s, std::get<BreakerMove>(d2));
  const std::vector<int>& clique = br.clique();
  REQUIRE(clique.size() == 4);
  for (int u : clique) {
    CHECK_FALSE(s.visited(u));
    for (int v : clique) {
      if (u != v) CHECK(s.owner(u, v) == Owner::kBreaker);
    }
  }
}

TEST_CASE("breaker.isolation isolates a certified vertex") {
  for (const char* walker : {"walker.connectivity", "walker.random"}) {
    for (int seed = 0; seed < 5; ++seed) {
      GameSetup setup;
      setup.n = 60;
      setup.b = 20;
      setup.walker = walker;
      setup.breaker = "breaker.isolation";
      setup.audit = AuditMode::kFlag;
      setup.seed = seed;
      GameResult r = PlayGame(setup);
      REQUIRE(r.winner == Player::kBreaker);
      const auto v = r.final_state.isolated_vertex();
      REQUIRE(v.has_value());
      CHECK(r.final_state.breaker_degree(*v) == 59);
      CHECK_FALSE(r.final_state.visited(*v));
    }
  }
}

TEST_CASE("breaker.random is reproducible and legal") {
  GameSetup setup;
  setup.n = 40;
  setup.b = 5;
  setup.seed = 99;
  GameResult a = PlayGame(setup);
  GameResult b = PlayGame(setup);
  CHECK(a.transcript.ToJsonl() == b.transcript.ToJsonl());
}

TEST_CASE("breaker.greedy_star starts at vertex 0") {
  GameState s = NewGame(10, 3);
  std::unique_ptr<Strategy> g = MakeStrategy("breaker.greedy_star", Config(10, 3));
  Rng rng(1);
  Annotations notes;
  const BreakerMove m = std::get<BreakerMove>(g->Decide(s, rng, notes));
  CHECK(m.edges == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("walker.random never crosses Breaker edges") {
  for (int seed = 0; seed < 50; ++seed) {
    GameSetup setup;
    setup.n = 12;
    setup.b = 4;
    setup.walker = "walker.random";
    setup.first_player = Player::kBreaker;
    setup.seed = seed;
    setup.stop_on_win = false;
    GameResult r = PlayGame(setup);
    CHECK(r.status != GameStatus::kRunning);
    GameState replay = ReplayTranscript(r.transcript);
    CHECK(replay == r.final_state);
  }
}

TEST_CASE("Strategy registry") {
  CHECK(StrategyNames().size() == 6);
  for (const std::string& name : StrategyNames()) {
    StrategyConfig c = Config(10, 2);
    c.p = Rational(2, 5);
    c.epsilon = Rational(1, 5);
    std::unique_ptr<Strategy> s = MakeStrategy(name, c);
    CHECK(s->name() == name);
    CHECK((s->role() == Player::kWalker) == IsWalkerStrategy(name));
  }
  CHECK_THROWS_AS(MakeStrategy("walker.teleport", Config(10, 2)), Error);
}

TEST_CASE("Regimes") {
  CHECK(ConnectivityRegime(200, 7, Rational(1, 20)));
  CHECK_FALSE(ConnectivityRegime(200, 8, Rational(1, 20)));
  CHECK(ConnectivityRegime(1000, 28, Rational(1, 20)));
  CHECK_FALSE(HamiltonicityRegime(60, 2, Rational(2, 5), Rational(1, 5)));
  CHECK_FALSE(HamiltonicityRegime(1000, 1, Rational(1, 2), Rational(1, 100)));
}

}  // namespace
}  // namespace walkbreak
