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

#include "walkbreak/error.h"
#include "walkbreak/strategies.h"

namespace walkbreak {
namespace {

std::int64_t CeilRational(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (q * r.denominator() < r.numerator()) ++q;
  return q;
}

}  // namespace

ExposureState::ExposureState(int n, int b, Rational p, Rational epsilon)
    : n(n),
      b(b),
      p(p),
      epsilon(epsilon),
      h(n),
      gprime(n),
      f1(n, 0),
      f2(n, 0),
      minbox(n, 4 * n, p / 2, 4 * b, 4 * b),
      unexposed_(static_cast<std::size_t>(n) * n, 1),
      unexposed_count_(n, n - 1) {
  for (int v = 0; v < n; ++v) unexposed_[static_cast<std::size_t>(v) * n + v] = 0;
}

std::vector<int> ExposureState::UnexposedAt(int v) const {
  std::vector<int> out;
  out.reserve(unexposed_count_[v]);
  for (int u = 0; u < n; ++u) {
    if (unexposed(v, u)) out.push_back(u);
  }
  return out;
}

bool ExposureState::Expose(int u, int v) {
  if (!unexposed(u, v)) {
    ++double_exposures;
    return false;
  }
  unexposed_[static_cast<std::size_t>(u) * n + v] = 0;
  unexposed_[static_cast<std::size_t>(v) * n + u] = 0;
  --unexposed_count_[u];
  --unexposed_count_[v];
  ++exposed_pairs;
  return true;
}

HamiltonicityWalker::HamiltonicityWalker(const StrategyConfig& config)
    : es_(config.n, config.b, config.p, config.epsilon),
      in_regime_(HamiltonicityRegime(config.n, config.b, config.p,
                                     config.epsilon)),
      type1_extra_(static_cast<int>(
          CeilRational(config.p * 2 * config.n) - 1)),
      c3_bound_(ToDouble(config.epsilon) * (config.n - 1) / 5.0 + config.b),
      c6_bound_(0.9 * ToDouble(config.epsilon) * (config.n - 1) *
                ToDouble(config.p)),
      certify_budget_(config.certify_budget) {
  audits_.set_hard(in_regime_ && config.audit_mode == AuditMode::kHard);
}

WalkerMove HamiltonicityWalker::BackAndForth(const GameState& state) {
  const int w = *state.walker_position();
  for (int x = 0; x < state.n(); ++x) {
    if (x != w && state.owner(w, x) == Owner::kWalker) {
      return WalkerMove{{{w, x}, {x, w}}};
    }
  }
  throw Error(ErrorCode::kStrategyFault,
              "walker.hamiltonicity: no owned edge at the current position");
}

void HamiltonicityWalker::Observe(const GameState& after,
                                  const Decision& opponent_move,
                                  Annotations& notes) {
  if (es_.stage != ExposureStage::kOne) return;
  const auto* move = std::get_if<BreakerMove>(&opponent_move);
  if (move == nullptr) return;
  MinBoxState& mb = es_.minbox;
  std::vector<int> inc(es_.n, 0);
  for (const Edge& e : move->edges) {
    ++inc[e.u];
    ++inc[e.v];
  }
  bool fits = true;
  for (int v = 0; v < es_.n; ++v) {
    if (inc[v] > mb.free_elements(v)) {
      fits = false;
      audits_.Check(claims::kC2, false, mb.breaker_count(v) + inc[v],
                    mb.box_size() - mb.maker_count(v), notes,
                    {{"box", v}, {"event", "box_exhausted"}});
      inc[v] = mb.free_elements(v);
    }
  }
  if (fits) audits_.Check(claims::kC2, true, 0, 0, notes);
  MinBoxBreakerApply(mb, inc);
  audits_.Check(claims::kC1,
                mb.adversary_since_maker() <= mb.adversary_budget(),
                mb.adversary_since_maker(), mb.adversary_budget(), notes,
                {{"round", after.round()}});
}

void HamiltonicityWalker::AuditDecisionPoint(const GameState& state,
                                             Annotations& notes) {
  const MinBoxState& mb = es_.minbox;
  const Rational maker_cap = (Rational(1) + es_.p * 2) * es_.n;
  int worst_m = 0, worst_b = 0;
  int worst_c3 = -1;
  for (int v = 0; v < es_.n; ++v) {
    if (mb.maker_count(v) > mb.maker_count(worst_m)) worst_m = v;
    if (mb.breaker_count(v) > mb.breaker_count(worst_b)) worst_b = v;
    if (mb.IsActive(v) &&
        (worst_c3 < 0 ||
         state.breaker_degree(v) > state.breaker_degree(worst_c3))) {
      worst_c3 = v;
    }
  }
  audits_.Check(claims::kC2, Rational(mb.maker_count(worst_m)) < maker_cap,
                mb.maker_count(worst_m), ToDouble(maker_cap), notes,
                {{"box", worst_m}, {"count", "maker"}});
  audits_.Check(claims::kC2, mb.breaker_count(worst_b) < es_.n,
                mb.breaker_count(worst_b), es_.n, notes,
                {{"box", worst_b}, {"count", "breaker"}});
  if (worst_c3 >= 0) {
    const double d = state.breaker_degree(worst_c3);
    audits_.Check(claims::kC3, d < c3_bound_, d, c3_bound_, notes,
                  {{"vertex", worst_c3}, {"round", state.round()}});
  }
}

std::optional<int> HamiltonicityWalker::DeclareExposureVertex(
    Annotations& notes) {
  try {
    const int v = MinBoxMakerMove(es_.minbox);
    es_.exposure_vertex = v;
    notes.push_back({{"kind", "exposure_vertex"}, {"vertex", v}});
    return v;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoActiveBox) throw;
    return std::nullopt;
  }
}

Decision HamiltonicityWalker::FirstMove(const GameState& state,
                                        Annotations& notes) {
  const std::optional<int> v = DeclareExposureVertex(notes);
  if (!v) return Resign{"no active box at the start"};
  const int n = state.n();
  int v0 = -1;
  for (int x = 0; x < n; ++x) {
    if (x == *v) continue;
    if (v0 < 0 || state.breaker_degree(x) < state.breaker_degree(v0)) v0 = x;
  }
  for (int y = 0; y < n; ++y) {
    if (y == v0 || y == *v) continue;
    if (state.owner(v0, y) == Owner::kFree &&
        state.owner(y, *v) == Owner::kFree) {
      audits_.Check(claims::kC4, true, 0, 0, notes);
      return WalkThrough({v0, y, *v});
    }
  }
  audits_.Check(claims::kC4, false, 0, 1, notes,
                {{"from", v0}, {"to", *v}, {"round", state.round()}});
  return Resign{"no connector to the exposure vertex"};
}

Decision HamiltonicityWalker::MoveTo(const GameState& state, int v,
                                     Annotations& notes) {
  const int w = *state.walker_position();
  for (int y = 0; y < state.n(); ++y) {
    if (y == w || y == v) continue;
    if (state.owner(w, y) != Owner::kBreaker &&
        state.owner(y, v) != Owner::kBreaker) {
      audits_.Check(claims::kC4, true, 0, 0, notes);
      return WalkThrough({w, y, v});
    }
  }
  audits_.Check(claims::kC4, false, 0, 1, notes,
                {{"from", w}, {"to", v}, {"round", state.round()}});
  return Resign{"no connector to the exposure vertex"};
}

Decision HamiltonicityWalker::ExposeAt(const GameState& state, int v, Rng& rng,
                                       Annotations& notes) {
  std::vector<int> order = es_.UnexposedAt(v);
  std::shuffle(order.begin(), order.end(), rng);
  std::optional<int> hit;
  int tosses = 0;
  for (int u : order) {
    es_.Expose(v, u);
    ++tosses;
    if (BernoulliExact(rng, es_.p)) {
      hit = u;
      break;
    }
  }
  es_.exposure_vertex.reset();
  if (!hit) {
    ++es_.f1[v];
    audits_.Check(claims::kFailureOnce, es_.f1[v] <= 1, es_.f1[v], 1, notes,
                  {{"vertex", v}});
    es_.minbox.MakerClaim(v, type1_extra_);
    notes.push_back({{"kind", "exposure"},
                     {"vertex", v},
                     {"tosses", tosses},
                     {"result", "type1"}});
    return BackAndForth(state);
  }
  const int u = *hit;
  es_.h.AddEdge(v, u);
  if (state.owner(v, u) == Owner::kBreaker) {
    ++es_.f2[v];
    ++es_.f2[u];
    notes.push_back({{"kind", "exposure"},
                     {"vertex", v},
                     {"tosses", tosses},
                     {"result", "type2"},
                     {"other", u}});
    return BackAndForth(state);
  }
  es_.gprime.AddEdge(v, u);
  es_.minbox.MakerClaim(u, 1);
  notes.push_back({{"kind", "exposure"},
                   {"vertex", v},
                   {"tosses", tosses},
                   {"result", "success"},
                   {"other", u}});
  return WalkThrough({v, u, v});
}

void HamiltonicityWalker::EnterStageTwo(const GameState& state, Rng& rng,
                                        Annotations& notes,
                                        std::string_view when) {
  es_.stage = ExposureStage::kTwo;
  es_.exposure_vertex.reset();
  std::int64_t tossed = 0, successes = 0, type2 = 0;
  for (int u = 0; u < es_.n; ++u) {
    for (int v = u + 1; v < es_.n; ++v) {
      if (!es_.unexposed(u, v)) continue;
      es_.Expose(u, v);
      ++tossed;
      if (!BernoulliExact(rng, es_.p)) continue;
      ++successes;
      es_.h.AddEdge(u, v);
      // An edge Walker already owns is in H and W alike.
      if (state.owner(u, v) == Owner::kWalker) {
        es_.gprime.AddEdge(u, v);
      } else {
        ++es_.f2[u];
        ++es_.f2[v];
        ++type2;
      }
    }
  }
  notes.push_back({{"kind", "stage_two"},
                   {"when", when},
                   {"round", state.round()},
                   {"tossed", tossed},
                   {"successes", successes},
                   {"type2", type2}});
}

Decision HamiltonicityWalker::Decide(const GameState& state, Rng& rng,
                                     Annotations& notes) {
  if (es_.stage == ExposureStage::kTwo) {
    notes.push_back({{"kind", "filler"}});
    return BackAndForth(state);
  }
  AuditDecisionPoint(state, notes);
  if (!state.walker_position()) return FirstMove(state, notes);
  const int w = *state.walker_position();
  std::optional<int> v = es_.exposure_vertex;
  if (!v) v = DeclareExposureVertex(notes);
  if (!v) {
    EnterStageTwo(state, rng, notes, "no_active_box");
    notes.push_back({{"kind", "filler"}});
    return BackAndForth(state);
  }
  if (w == *v) return ExposeAt(state, *v, rng, notes);
  return MoveTo(state, *v, notes);
}

void HamiltonicityWalker::Finish(const GameState& final_state, Rng& rng,
                                 Annotations& notes) {
  if (es_.stage == ExposureStage::kOne) {
    EnterStageTwo(final_state, rng, notes, "game_end");
  }
  const std::int64_t pairs =
      static_cast<std::int64_t>(es_.n) * (es_.n - 1) / 2;
  audits_.Check(claims::kExposureOnce,
                es_.exposed_pairs == pairs && es_.double_exposures == 0,
                static_cast<double>(es_.exposed_pairs),
                static_cast<double>(pairs), notes,
                {{"double_exposures", es_.double_exposures}});
  const int f2_max = *std::max_element(es_.f2.begin(), es_.f2.end());
  audits_.Check(claims::kC6, f2_max <= c6_bound_, f2_max, c6_bound_, notes);
}

void HamiltonicityWalker::Report(GameMetrics& metrics) const {
  metrics.f1_total = 0;
  for (int x : es_.f1) metrics.f1_total += x;
  metrics.f2_max = *std::max_element(es_.f2.begin(), es_.f2.end());
  metrics.c6_exceeded = metrics.f2_max > c6_bound_;
  metrics.min_degree_ratio = MinDegreeRatio(es_.gprime, es_.h);
  metrics.exposed_pairs = es_.exposed_pairs;
  metrics.h_edges = es_.h.num_edges();
  metrics.gprime_edges = es_.gprime.num_edges();
  metrics.stage_two = es_.stage == ExposureStage::kTwo;
  switch (HasHamiltonCycle(es_.gprime, certify_budget_)) {
    case HamiltonResult::kYes:
      metrics.hamiltonian = true;
      break;
    case HamiltonResult::kNo:
      metrics.hamiltonian = false;
      break;
    case HamiltonResult::kUnknown:
      metrics.hamiltonian_unknown = true;
      break;
  }
}

}  // namespace walkbreak
