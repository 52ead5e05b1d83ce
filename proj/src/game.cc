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

#include "walkbreak/game.h"

#include <algorithm>

#include "walkbreak/error.h"

namespace walkbreak {
namespace {

Json OptionalInt(const std::optional<int>& v) {
  return v ? Json(*v) : Json(nullptr);
}

void Tag(Annotations& notes, std::string_view by, Json& sink) {
  for (Json& note : notes) {
    if (!note.contains("by")) note["by"] = by;
    sink.push_back(std::move(note));
  }
  notes.clear();
}

[[noreturn]] void Fault(const Strategy& s, const std::string& what) {
  throw Error(ErrorCode::kStrategyFault,
              std::string(s.name()) + ": " + what);
}

}  // namespace

Player ResolveFirstPlayer(const GameSetup& setup) {
  if (setup.first_player) return *setup.first_player;
  return setup.breaker == "breaker.isolation" ? Player::kWalker
                                              : Player::kBreaker;
}

StrategyConfig MakeStrategyConfig(const GameSetup& setup) {
  StrategyConfig c;
  c.n = setup.n;
  c.b = setup.b;
  c.goal = setup.goal;
  c.p = setup.p;
  c.epsilon = setup.epsilon;
  c.audit_mode = setup.audit;
  c.certify_budget = setup.certify_budget;
  return c;
}

void ValidateSetup(const GameSetup& setup) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidConfig, msg);
  };
  const auto& names = StrategyNames();
  auto known = [&](const std::string& s) {
    return std::find(names.begin(), names.end(), s) != names.end();
  };
  if (!known(setup.walker) || !IsWalkerStrategy(setup.walker))
    fail("'" + setup.walker + "' is not a walker strategy");
  if (!known(setup.breaker) || IsWalkerStrategy(setup.breaker))
    fail("'" + setup.breaker + "' is not a breaker strategy");
  if (setup.walker == "walker.connectivity" &&
      setup.goal != Goal::kConnectivity)
    fail("walker.connectivity plays the connectivity goal only");
  if (setup.walker == "walker.hamiltonicity" &&
      setup.goal != Goal::kHamiltonCycle)
    fail("walker.hamiltonicity plays the hamiltonicity goal only");
  if (setup.n < 3) fail("n must be >= 3");
  if (setup.b < 1) fail("b must be >= 1");
  if (setup.p <= 0 || setup.p >= 1) fail("p must lie in (0, 1)");
  if (setup.epsilon <= 0 || setup.epsilon >= 1)
    fail("epsilon must lie in (0, 1)");
}

Json MetricsToJson(const GameMetrics& m) {
  Json j = {{"f1_total", m.f1_total},
            {"f2_max", m.f2_max},
            {"min_degree_ratio", nullptr},
            {"hamiltonian", nullptr},
            {"hamiltonian_unknown", m.hamiltonian_unknown},
            {"exposed_pairs", m.exposed_pairs},
            {"h_edges", m.h_edges},
            {"gprime_edges", m.gprime_edges},
            {"c6_exceeded", m.c6_exceeded},
            {"stage_two", m.stage_two}};
  if (m.min_degree_ratio) j["min_degree_ratio"] = FormatRational(*m.min_degree_ratio);
  if (m.hamiltonian) j["hamiltonian"] = *m.hamiltonian;
  return j;
}

GameResult PlayGame(const GameSetup& setup) {
  ValidateSetup(setup);
  const StrategyConfig config = MakeStrategyConfig(setup);
  auto walker = MakeStrategy(setup.walker, config);
  auto breaker = MakeStrategy(setup.breaker, config);
  return PlayGame(setup, *walker, *breaker);
}

GameResult PlayGame(const GameSetup& setup, Strategy& walker,
                    Strategy& breaker) {
  GameOptions options;
  options.goal = setup.goal;
  options.stop_on_win = setup.stop_on_win;
  options.hamilton_budget = setup.hamilton_budget;
  const Player first = ResolveFirstPlayer(setup);
  GameState state = NewGame(setup.n, setup.b, first, options);

  Rng walker_rng(DeriveSeed(setup.seed, 1, 0));
  Rng breaker_rng(DeriveSeed(setup.seed, 2, 0));

  GameResult result;
  result.walker_in_regime = walker.in_regime();
  Transcript& t = result.transcript;
  t.header = {{"type", "header"},
              {"format", kTranscriptFormat},
              {"version", kTranscriptVersion},
              {"n", setup.n},
              {"walker_bias", state.walker_bias()},
              {"breaker_bias", setup.b},
              {"goal", GoalName(setup.goal)},
              {"walker", walker.name()},
              {"breaker", breaker.name()},
              {"seed", setup.seed},
              {"first_player", PlayerName(first)},
              {"stop_on_win", setup.stop_on_win},
              {"hamilton_budget", setup.hamilton_budget},
              {"certify_budget", setup.certify_budget},
              {"p", FormatRational(setup.p)},
              {"epsilon", FormatRational(setup.epsilon)},
              {"audit", AuditModeName(setup.audit)},
              {"in_regime", walker.in_regime()}};

  Json record;
  Annotations notes;
  while (!state.over()) {
    const Player mover = state.to_move();
    Strategy& me = mover == Player::kWalker ? walker : breaker;
    Strategy& other = mover == Player::kWalker ? breaker : walker;
    Rng& rng = mover == Player::kWalker ? walker_rng : breaker_rng;
    if (mover == first) {
      record = {{"type", "round"},
                {"round", state.round() + 1},
                {"annotations", Json::array()}};
    }

    Decision d;
    try {
      d = me.Decide(state, rng, notes);
    } catch (const std::exception& e) {
      Fault(me, e.what());
    }
    Tag(notes, me.name(), record["annotations"]);

    if (const auto* r = std::get_if<Resign>(&d)) {
      if (mover != Player::kWalker) Fault(me, "Breaker cannot resign");
      state.Resign();
      record["walker_resign"] = r->reason;
    } else if (mover == Player::kWalker) {
      const auto* m = std::get_if<WalkerMove>(&d);
      if (m == nullptr) Fault(me, "returned a Breaker move");
      try {
        ApplyWalkerMove(state, *m);
      } catch (const Error& e) {
        Fault(me, e.what());
      }
      record["walker_steps"] = StepsToJson(m->steps);
    } else {
      const auto* m = std::get_if<BreakerMove>(&d);
      if (m == nullptr) Fault(me, "returned a Walker move");
      try {
        ApplyBreakerMove(state, *m);
      } catch (const Error& e) {
        Fault(me, e.what());
      }
      record["breaker_edges"] = EdgesToJson(m->edges);
    }

    if (!state.over() || !std::holds_alternative<Resign>(d)) {
      try {
        other.Observe(state, d, notes);
      } catch (const std::exception& e) {
        Fault(other, e.what());
      }
      Tag(notes, other.name(), record["annotations"]);
    }
    if (mover != first || state.over()) t.rounds.push_back(std::move(record));
  }

  Json final_notes = Json::array();
  try {
    walker.Finish(state, walker_rng, notes);
  } catch (const std::exception& e) {
    Fault(walker, e.what());
  }
  Tag(notes, walker.name(), final_notes);
  try {
    breaker.Finish(state, breaker_rng, notes);
  } catch (const std::exception& e) {
    Fault(breaker, e.what());
  }
  Tag(notes, breaker.name(), final_notes);

  walker.Report(result.metrics);
  breaker.Report(result.metrics);
  result.audits.Merge(walker.audits());
  result.audits.Merge(breaker.audits());
  result.status = state.status();
  // A resignation after the goal was reached does not undo the win.
  const bool walker_won = state.status() == GameStatus::kWalkerWin ||
                          (state.status() == GameStatus::kWalkerResign &&
                           state.goal_round().has_value());
  result.winner = walker_won ? Player::kWalker : Player::kBreaker;

  t.footer = {{"type", "footer"},
              {"outcome", StatusName(state.status())},
              {"winner", PlayerName(result.winner)},
              {"rounds", state.round()},
              {"goal_round", OptionalInt(state.goal_round())},
              {"isolated_vertex", OptionalInt(state.isolated_vertex())},
              {"walker_edges", state.walker_edge_count()},
              {"breaker_edges", state.breaker_edge_count()},
              {"free_edges", state.free_count()},
              {"audits", result.audits.ToJson()},
              {"audit_violations", result.audits.violations()},
              {"hard_violations", result.audits.hard_violations()},
              {"metrics", MetricsToJson(result.metrics)},
              {"annotations", std::move(final_notes)}};
  result.final_state = std::move(state);
  return result;
}

}  // namespace walkbreak
