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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. `acceptance 3 7` runs criteria 3 and 7.

#include <chrono>
#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "walkbreak/box_games.h"
#include "walkbreak/error.h"
#include "walkbreak/experiment.h"
#include "walkbreak/game.h"
#include "walkbreak/strategies.h"
#include "walkbreak/transcript.h"

namespace walkbreak {
namespace {

constexpr std::uint64_t kMasterSeed = 20260601;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void Note(const char* fmt, ...) __attribute__((format(printf, 2, 3))) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    lines.push_back(buf);
  }
  // Records a sub-check; a failing one fails the criterion.
  void Require(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "ok    " : "FAILED") + "  " + what);
    pass = pass && ok;
  }
};

std::string Fmt(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

// 1. Box game criterion against the minimax oracle.
Outcome BoxCriterion() {
  Outcome o;
  const auto start = Clock::now();
  int instances = 0, mismatches = 0;
  for (int k = 1; k <= 4; ++k) {
    for (int a = 1; a <= 3; ++a) {
      for (int t = 0; t <= 14; ++t) {
        const std::vector<int> sizes = NearEqualSizes(k, t);
        const bool oracle = ExactBoxGameWinner(sizes, a) == BoxPlayer::kMaker;
        ++instances;
        if (oracle != BoxMakerWins(k, t, a)) {
          ++mismatches;
          o.Note("mismatch k=%d t=%d a=%d", k, t, a);
        }
      }
    }
  }
  const double secs = Seconds(start);
  o.Require(mismatches == 0, Fmt("%d instances, %d mismatches", instances,
                                 mismatches));
  o.Require(secs < 60, Fmt("runtime %.2f s (< 60 s)", secs));
  return o;
}

// 2. Harmonic bounds on f.
Outcome BoxBounds() {
  Outcome o;
  const auto start = Clock::now();
  int checked = 0, violations = 0;
  for (int k = 2; k <= 500; ++k) {
    for (int a = 1; a <= 50; ++a) {
      const BoxFBounds b = ComputeBoxFBounds(k, a);
      const BigRational f(BoxF(k, a));
      ++checked;
      if (!(b.lower <= f && f <= b.upper)) {
        ++violations;
        o.Note("violation k=%d a=%d", k, a);
      }
    }
  }
  const double secs = Seconds(start);
  o.Require(violations == 0,
            Fmt("%d (k, a) pairs, %d violations", checked, violations));
  o.Require(secs < 1, Fmt("runtime %.3f s (< 1 s)", secs));
  return o;
}

// 3. MinBox danger bound against a random budget-respecting adversary.
Outcome MinBoxDanger() {
  Outcome o;
  const auto start = Clock::now();
  constexpr int kBoxes = 100, kSize = 400, kGames = 1000;
  const int biases[] = {2, 5, 10};
  std::int64_t checks = 0, violations = 0;
  double worst_ratio = 0;
  for (int g = 0; g < kGames; ++g) {
    const int b = biases[g % 3];
    Rng rng(DeriveSeed(kMasterSeed, 3, g));
    MinBoxState s(kBoxes, kSize, Rational(1, 2), b, b);
    const double bound = s.DangerBound();
    auto audit = [&] {
      for (int i = 0; i < kBoxes; ++i) {
        if (!s.IsFree(i) || !s.IsActive(i)) continue;
        ++checks;
        worst_ratio = std::max(worst_ratio, s.Danger(i) / bound);
        if (s.Danger(i) > bound) ++violations;
      }
    };
    std::uniform_int_distribution<int> box(0, kBoxes - 1);
    std::bernoulli_distribution focus(0.5);
    std::vector<int> inc(kBoxes);
    while (true) {
      // Adversary: b elements, each aimed with probability 1/2 at one target
      // box and otherwise scattered. Every other exchange the target is the
      // most dangerous free active box, else a random box.
      std::fill(inc.begin(), inc.end(), 0);
      int target = box(rng);
      if (focus(rng)) {
        for (int i = 0; i < kBoxes; ++i) {
          if (s.IsFree(i) && s.IsActive(i) &&
              (!s.IsFree(target) || !s.IsActive(target) ||
               s.Danger(i) > s.Danger(target)))
            target = i;
        }
      }
      int placed = 0;
      for (int e = 0, tries = 0; e < b && tries < 64 * b; ++tries) {
        const int i = focus(rng) ? target : box(rng);
        if (inc[i] < s.free_elements(i)) {
          ++inc[i];
          ++e;
          ++placed;
        }
      }
      MinBoxBreakerApply(s, inc);
      audit();
      try {
        MinBoxMakerMove(s);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoActiveBox) throw;
        break;
      }
      audit();
      if (placed == 0 && s.max_adversary_exchange() > b) break;
    }
    if (s.max_adversary_exchange() > b) {
      o.Note("game %d exceeded the adversary budget", g);
      ++violations;
    }
  }
  const double secs = Seconds(start);
  o.Require(violations == 0,
            Fmt("%d games, %lld box checks, %lld violations, max "
                "danger/bound %.3f",
                kGames, static_cast<long long>(checks),
                static_cast<long long>(violations), worst_ratio));
  o.Require(secs < 60, Fmt("runtime %.1f s (< 60 s)", secs));
  return o;
}

std::int64_t ClaimHard(const AuditLog& log, std::string_view claim) {
  auto it = log.counters().find(std::string(claim));
  return it == log.counters().end() ? 0 : it->second.hard_violations;
}

std::int64_t ClaimViolations(const AuditLog& log, std::string_view claim) {
  auto it = log.counters().find(std::string(claim));
  return it == log.counters().end() ? 0 : it->second.violations;
}

std::int64_t ClaimChecks(const AuditLog& log, std::string_view claim) {
  auto it = log.counters().find(std::string(claim));
  return it == log.counters().end() ? 0 : it->second.checks;
}

// 4. walker.connectivity inside its regime.
Outcome ConnectivityWalkerSide() {
  Outcome o;
  const auto start = Clock::now();
  const int sizes[] = {200, 500, 1000};
  const char* breakers[] = {"breaker.random", "breaker.greedy_star",
                            "breaker.isolation"};
  int cell = 0;
  for (int n : sizes) {
    const int b = static_cast<int>(std::floor(0.2 * n / std::log(n)));
    for (const char* breaker : breakers) {
      int wins = 0;
      std::int64_t hard = 0, eq1_checks = 0;
      bool in_regime = true;
      for (int t = 0; t < 100; ++t) {
        GameSetup setup;
        setup.n = n;
        setup.b = b;
        setup.walker = "walker.connectivity";
        setup.breaker = breaker;
        setup.epsilon = Rational(1, 20);
        setup.audit = AuditMode::kHard;
        setup.seed = DeriveSeed(kMasterSeed, 4000 + cell, t);
        const GameResult r = PlayGame(setup);
        wins += r.winner == Player::kWalker;
        hard += ClaimHard(r.audits, claims::kDegreeBound) +
                ClaimHard(r.audits, claims::kConnector);
        eq1_checks += ClaimChecks(r.audits, claims::kDegreeBound);
        in_regime = in_regime && r.walker_in_regime;
      }
      o.Require(in_regime && wins == 100 && hard == 0,
                Fmt("n=%d b=%d vs %s: %d/100 wins, %lld hard violations "
                    "(%lld degree checks), in regime %s",
                    n, b, breaker, wins, static_cast<long long>(hard),
                    static_cast<long long>(eq1_checks),
                    in_regime ? "yes" : "no"));
      ++cell;
    }
  }
  o.Note("runtime %.1f s", Seconds(start));
  return o;
}

// Smallest b whose clique order m = floor(b/2) satisfies m(n-m) <= f(m, b).
int MinimalIsolationBias(int n) {
  for (int b = 2; b < n; ++b) {
    const int m = b / 2;
    if (m >= 1 && static_cast<std::int64_t>(m) * (n - m) <= BoxF(m, b))
      return b;
  }
  return -1;
}

// 5. breaker.isolation at the exact-f bias.
Outcome ConnectivityBreakerSide() {
  Outcome o;
  const auto start = Clock::now();
  constexpr int n = 200;
  const int b = MinimalIsolationBias(n);
  const int m = b / 2;
  o.Note("n=%d: minimal b = %d (m = %d, m(n-m) = %d <= f(m,b) = %lld; "
         "b-1 fails: %s)",
         n, b, m, m * (n - m), static_cast<long long>(BoxF(m, b)),
         (b - 1) / 2 >= 1 &&
                 static_cast<std::int64_t>((b - 1) / 2) * (n - (b - 1) / 2) <=
                     BoxF((b - 1) / 2, b - 1)
             ? "no"
             : "yes");
  int cell = 0;
  for (const char* walker : {"walker.connectivity", "walker.random"}) {
    int wins = 0, certified = 0;
    for (int t = 0; t < 100; ++t) {
      GameSetup setup;
      setup.n = n;
      setup.b = b;
      setup.walker = walker;
      setup.breaker = "breaker.isolation";
      setup.epsilon = Rational(1, 20);
      setup.audit = AuditMode::kFlag;
      setup.seed = DeriveSeed(kMasterSeed, 5000 + cell, t);
      const GameResult r = PlayGame(setup);
      if (r.winner != Player::kBreaker) continue;
      ++wins;
      const auto v = r.final_state.isolated_vertex();
      if (!v || r.final_state.visited(*v)) continue;
      bool all_breaker = true;
      for (int u = 0; u < n; ++u) {
        if (u != *v && r.final_state.owner(*v, u) != Owner::kBreaker)
          all_breaker = false;
      }
      certified += all_breaker;
    }
    o.Require(wins == 100 && certified == 100,
              Fmt("vs %s: %d/100 Breaker wins, %d certified isolated "
                  "vertices",
                  walker, wins, certified));
    ++cell;
  }
  o.Note("runtime %.1f s", Seconds(start));
  return o;
}

// 6. Hamiltonicity exposure protocol at relaxed parameters.
Outcome HamiltonicityProtocol() {
  Outcome o;
  const auto start = Clock::now();
  constexpr int n = 60, kTrials = 200;
  const Rational p(2, 5), epsilon(1, 5);
  const std::int64_t pairs = n * (n - 1) / 2;
  const Rational ratio_target = Rational(1) - epsilon;

  std::int64_t c1_4 = 0, type1 = 0, exposure_bad = 0, c6_exceeded = 0;
  std::int64_t ratio_ok = 0, ham_yes = 0, ham_unknown = 0, walker_wins = 0;
  std::map<std::string, std::int64_t> per_claim;
  std::vector<double> h_edges;
  double ratio_sum = 0;
  for (int t = 0; t < kTrials; ++t) {
    GameSetup setup;
    setup.n = n;
    setup.b = 2;
    setup.goal = Goal::kHamiltonCycle;
    setup.walker = "walker.hamiltonicity";
    setup.breaker = "breaker.random";
    setup.p = p;
    setup.epsilon = epsilon;
    setup.audit = AuditMode::kFlag;
    // The exposure process must run over all of K_n, so the game is played
    // to exhaustion.
    setup.stop_on_win = false;
    setup.seed = DeriveSeed(kMasterSeed, 6, t);
    const GameResult r = PlayGame(setup);
    for (auto claim : {claims::kC1, claims::kC2, claims::kC3, claims::kC4}) {
      c1_4 += ClaimViolations(r.audits, claim);
      per_claim[std::string(claim)] += ClaimViolations(r.audits, claim);
    }
    type1 += ClaimViolations(r.audits, claims::kFailureOnce);
    exposure_bad += ClaimViolations(r.audits, claims::kExposureOnce) +
                    (r.metrics.exposed_pairs != pairs);
    c6_exceeded += r.metrics.c6_exceeded;
    h_edges.push_back(static_cast<double>(r.metrics.h_edges));
    if (r.metrics.min_degree_ratio) {
      ratio_sum += ToDouble(*r.metrics.min_degree_ratio);
      ratio_ok += *r.metrics.min_degree_ratio >= ratio_target;
    }
    ham_yes += r.metrics.hamiltonian.value_or(false);
    ham_unknown += r.metrics.hamiltonian_unknown;
    walker_wins += r.winner == Player::kWalker;
  }
  double mean = 0, var = 0;
  for (double x : h_edges) mean += x;
  mean /= kTrials;
  for (double x : h_edges) var += (x - mean) * (x - mean);
  var /= kTrials - 1;
  const double se = std::sqrt(var / kTrials);
  const double expected = pairs * ToDouble(p);

  o.Require(c1_4 == 0 && type1 == 0,
            Fmt("(a) %lld c1-c4 audit violations, %lld f_I > 1 events",
                static_cast<long long>(c1_4), static_cast<long long>(type1)));
  for (const auto& [claim, count] : per_claim)
    o.Note("      %s: %lld violations", claim.c_str(),
           static_cast<long long>(count));
  o.Require(exposure_bad == 0,
            Fmt("(b) %lld games with a pair not exposed exactly once",
                static_cast<long long>(exposure_bad)));
  o.Require(std::abs(mean - expected) <= 3 * se,
            Fmt("(c) mean |H| = %.2f, expected %.1f, 3 SE = %.2f", mean,
                expected, 3 * se));
  o.Require(ratio_ok * 100 >= 95 * kTrials,
            Fmt("(d) min_degree_ratio >= %.2f in %lld/%d trials (mean %.3f); "
                "c6 exceeded in %lld",
                ToDouble(ratio_target), static_cast<long long>(ratio_ok),
                kTrials, ratio_sum / kTrials,
                static_cast<long long>(c6_exceeded)));
  o.Require(ham_unknown == 0 && ham_yes * 100 >= 95 * kTrials,
            Fmt("(e) G' Hamiltonian in %lld/%d trials, %lld unknown",
                static_cast<long long>(ham_yes), kTrials,
                static_cast<long long>(ham_unknown)));
  o.Note("walker wins %lld/%d; runtime %.1f s",
         static_cast<long long>(walker_wins), kTrials, Seconds(start));
  return o;
}

// Replays a transcript move by move, checking the referee invariants.
// Returns an empty string or the first broken property.
std::string CheckGame(const GameResult& r) {
  const Transcript& t = r.transcript;
  const int n = t.header.at("n").get<int>();
  GameOptions options;
  options.goal = ParseGoal(t.header.at("goal").get<std::string>());
  options.stop_on_win = t.header.at("stop_on_win").get<bool>();
  options.hamilton_budget = t.header.at("hamilton_budget").get<std::uint64_t>();
  const Player first =
      ParsePlayer(t.header.at("first_player").get<std::string>());
  GameState s = NewGame(n, t.header.at("breaker_bias").get<int>(), first,
                        options);
  std::vector<Owner> before(static_cast<std::size_t>(n) * n);
  std::optional<Step> last_step;

  auto conserve = [&]() -> std::string {
    std::int64_t free = 0, walker = 0, breaker = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const Owner now = s.owner(u, v);
        if (now != s.owner(v, u)) return "asymmetric ownership";
        const Owner old = before[static_cast<std::size_t>(u) * n + v];
        if (old != Owner::kFree && old != now) return "an edge changed owner";
        before[static_cast<std::size_t>(u) * n + v] = now;
        if (u < v) {
          free += now == Owner::kFree;
          walker += now == Owner::kWalker;
          breaker += now == Owner::kBreaker;
        }
      }
    }
    if (free != s.free_count() || walker != s.walker_edge_count() ||
        breaker != s.breaker_edge_count() ||
        free + walker + breaker != s.total_pairs())
      return "edge counts not conserved";
    return "";
  };
  auto backtrack = [&]() -> std::string {
    if (!last_step || s.over()) return "";
    const auto steps = LegalSteps(s, *s.walker_position());
    if (std::find(steps.begin(), steps.end(), last_step->from) == steps.end())
      return "Walker cannot retrace her last edge";
    return "";
  };

  for (const Json& round : t.rounds) {
    for (int half = 0; half < 2; ++half) {
      const bool walker_turn = (half == 0) == (first == Player::kWalker);
      std::string err;
      if (walker_turn && round.contains("walker_steps")) {
        const WalkerMove m = WalkerMoveFromJson(round["walker_steps"]);
        std::optional<int> at = s.walker_position();
        for (const Step& st : m.steps) {
          if (at && st.from != *at) return "walk is not contiguous";
          if (s.owner(st.from, st.to) == Owner::kBreaker)
            return "walk crosses a Breaker edge";
          at = st.to;
        }
        ApplyWalkerMove(s, m);
        last_step = m.steps.back();
        if (s.walker_position() != at) return "position not at walk end";
      } else if (walker_turn && round.contains("walker_resign")) {
        s.Resign();
      } else if (!walker_turn && round.contains("breaker_edges")) {
        ApplyBreakerMove(s, BreakerMoveFromJson(round["breaker_edges"]));
      } else {
        continue;
      }
      if (!(err = conserve()).empty()) return err;
      if (!(err = backtrack()).empty()) return err;
    }
  }
  if (!(s == r.final_state)) return "step replay differs from the game";
  if (!(ReplayTranscript(t) == r.final_state))
    return "transcript replay differs from the game";
  return "";
}

// 7. Referee properties over random games.
Outcome RefereeProperties() {
  Outcome o;
  const auto start = Clock::now();
  constexpr int kGames = 10000;
  Rng rng(DeriveSeed(kMasterSeed, 7, 0));
  std::uniform_int_distribution<int> size(3, 16), bias(1, 6), coin(0, 1);
  const char* breakers[] = {"breaker.random", "breaker.greedy_star",
                            "breaker.isolation"};
  std::uniform_int_distribution<int> pick(0, 2);
  int broken = 0, redo_mismatch = 0;
  std::map<std::string, int> outcomes;
  for (int g = 0; g < kGames; ++g) {
    GameSetup setup;
    setup.n = size(rng);
    setup.b = bias(rng);
    setup.walker = "walker.random";
    setup.breaker = breakers[pick(rng)];
    setup.goal = coin(rng) ? Goal::kHamiltonCycle : Goal::kConnectivity;
    setup.first_player = coin(rng) ? Player::kWalker : Player::kBreaker;
    setup.stop_on_win = coin(rng);
    setup.audit = AuditMode::kFlag;
    setup.seed = rng();
    const GameResult r = PlayGame(setup);
    ++outcomes[std::string(StatusName(r.status))];
    const std::string err = CheckGame(r);
    if (!err.empty()) {
      if (++broken <= 5) o.Note("game %d: %s", g, err.c_str());
    }
    if (g % 10 == 0 &&
        PlayGame(setup).transcript.ToJsonl() != r.transcript.ToJsonl())
      ++redo_mismatch;
  }
  std::string mix;
  for (const auto& [k, v] : outcomes) mix += " " + k + "=" + std::to_string(v);
  const double secs = Seconds(start);
  o.Require(broken == 0,
            Fmt("%d games, %d with a broken invariant; outcomes:%s", kGames,
                broken, mix.c_str()));
  o.Require(redo_mismatch == 0,
            Fmt("%d replays of %d games differ", redo_mismatch, kGames / 10));
  o.Require(secs < 120, Fmt("runtime %.1f s (< 120 s)", secs));
  return o;
}

// 8. Byte-identical CSV for repeated runs.
Outcome Determinism() {
  Outcome o;
  const auto start = Clock::now();
  ExperimentConfig conn;
  ApplyConfigText(conn,
                  "goal = connectivity\nn = 200\nb = 7\ntrials = 20\n"
                  "walker = walker.connectivity\nbreaker = breaker.isolation\n");
  conn.seed = kMasterSeed;
  ExperimentConfig ham;
  ApplyConfigText(ham,
                  "goal = hamiltonicity\nn = 60\nb = 2\np = 2/5\n"
                  "epsilon = 1/5\ntrials = 6\naudit = flag\n"
                  "walker = walker.hamiltonicity\nbreaker = breaker.random\n"
                  "stop_on_win = false\n");
  ham.seed = kMasterSeed;
  ExperimentConfig sweep;
  ApplyConfigText(sweep,
                  "n = 80\nb_min = 1\nb_max = 40\ntrials = 4\n"
                  "breaker = breaker.isolation\n");
  sweep.seed = kMasterSeed;

  for (ExperimentConfig* c : {&conn, &ham}) {
    const std::string first = TrialsCsv(RunBatch(*c).records);
    const std::string again = TrialsCsv(RunBatch(*c).records);
    c->workers = 3;
    const std::string parallel = TrialsCsv(RunBatch(*c).records);
    o.Require(first == again && first == parallel,
              Fmt("%s batch: %zu CSV bytes, rerun %s, 3 workers %s",
                  GoalName(c->goal).data(), first.size(),
                  first == again ? "identical" : "DIFFERENT",
                  first == parallel ? "identical" : "DIFFERENT"));
  }
  const SweepResult s1 = RunSweep(sweep);
  const SweepResult s2 = RunSweep(sweep);
  o.Require(SweepCsv(s1) == SweepCsv(s2) &&
                TrialsCsv(s1.records) == TrialsCsv(s2.records),
            "sweep CSVs identical on rerun");
  o.Note("runtime %.1f s", Seconds(start));
  return o;
}

}  // namespace
}  // namespace walkbreak

int main(int argc, char** argv) {
  using namespace walkbreak;
  const std::vector<std::pair<const char*, std::function<Outcome()>>>
      criteria = {
          {"box game criterion matches the minimax oracle", BoxCriterion},
          {"harmonic bounds on f(k, a)", BoxBounds},
          {"MinBox danger bound", MinBoxDanger},
          {"walker.connectivity wins inside its regime",
           ConnectivityWalkerSide},
          {"breaker.isolation wins at the exact-f bias",
           ConnectivityBreakerSide},
          {"Hamiltonicity exposure protocol", HamiltonicityProtocol},
          {"referee properties over random games", RefereeProperties},
          {"byte-identical CSV outputs", Determinism},
      };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.Require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL",
                criteria[i].first);
    for (const std::string& line : o.lines) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
