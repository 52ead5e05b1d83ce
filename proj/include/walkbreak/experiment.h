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

// Batch experiments: seeded trial grids, bias sweeps, audit reports.
//
// Config files hold one `key = value` pair per line; `#` starts a comment.
// Lists are comma separated. Keys:
//
//   goal            connectivity | hamiltonicity
//   n, b            vertex counts and biases (lists; the grid is n x b)
//   b_min, b_max    bias range for sweeps
//   p, epsilon      rationals ("2/5", "0.4")
//   walker, breaker strategy names
//   first_player    auto | walker | breaker
//   trials          trials per cell (or per sweep probe)
//   seed            master seed
//   audit           hard | flag
//   workers         worker threads
//   stop_on_win     true | false
//   hamilton_budget, certify_budget
//   record_timing   fill wallclock_ms (makes outputs non-reproducible)
//   output          output directory; WALKBREAK_OUTPUT_DIR overrides it
//   transcripts     write one transcript per trial

#ifndef WALKBREAK_EXPERIMENT_H_
#define WALKBREAK_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walkbreak/game.h"

namespace walkbreak {

struct ExperimentConfig {
  Goal goal = Goal::kConnectivity;
  std::vector<int> n;
  std::vector<int> b;
  std::optional<int> b_min;
  std::optional<int> b_max;
  Rational p{1, 2};
  Rational epsilon{1, 20};
  std::string walker = "walker.connectivity";
  std::string breaker = "breaker.random";
  std::optional<Player> first_player;
  int trials = 10;
  std::uint64_t seed = 1;
  AuditMode audit = AuditMode::kHard;
  int workers = 1;
  bool stop_on_win = true;
  std::uint64_t hamilton_budget = 200'000;
  std::uint64_t certify_budget = 100'000'000;
  bool record_timing = false;
  std::string output = "walkbreak_out";
  bool transcripts = false;
};

inline constexpr std::string_view kOutputDirEnv = "WALKBREAK_OUTPUT_DIR";

// Throws kInvalidConfig for unknown keys or bad values.
void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value);
// Applies `key = value` lines on top of `config`.
void ApplyConfigText(ExperimentConfig& config, std::string_view text);
ExperimentConfig LoadConfigFile(const std::string& path);
Json ConfigToJson(const ExperimentConfig& config);

enum class RunKind { kBatch, kSweep };
void ValidateConfig(const ExperimentConfig& config, RunKind kind);

// The configured output directory unless the environment overrides it.
std::string ResolveOutputDir(const ExperimentConfig& config);

struct TrialRecord {
  std::int64_t trial_id = 0;
  Goal goal = Goal::kConnectivity;
  int n = 0;
  int b = 0;
  Rational p;
  Rational epsilon;
  std::string walker_strategy;
  std::string breaker_strategy;
  std::uint64_t seed = 0;
  // "walker", "breaker" or "fault".
  std::string winner;
  int rounds = 0;
  std::int64_t walker_edge_count = 0;
  std::int64_t breaker_edge_count = 0;
  std::int64_t f1_total = 0;
  int f2_max = 0;
  std::optional<Rational> min_degree_ratio;
  std::optional<bool> hamiltonian;
  bool hamiltonian_unknown = false;
  std::int64_t audit_violations = 0;
  std::optional<double> wallclock_ms;

  // Not part of the CSV schema.
  std::string outcome;
  std::int64_t hard_violations = 0;
  bool in_regime = false;
  bool c6_exceeded = false;
  std::int64_t h_edges = 0;
  std::optional<int> isolated_vertex;
  std::string fault;
};

inline constexpr std::string_view kTrialCsvVersionLine =
    "# walkbreak-trials v1";
std::string TrialCsvHeader();
std::string TrialCsvRow(const TrialRecord& r);
// Version line, header and one row per record.
std::string TrialsCsv(const std::vector<TrialRecord>& records);

// Plays one trial; a strategy fault yields a record with winner "fault".
TrialRecord RunTrial(const GameSetup& setup, std::int64_t trial_id,
                     bool record_timing, Transcript* transcript = nullptr);

struct BatchResult {
  std::vector<TrialRecord> records;  // ordered by trial_id
  Json summary;
};

// Runs the n x b grid; trial (cell, i) uses seed DeriveSeed(seed, cell, i).
// With `write_outputs`, writes trials.csv, summary.json and optionally
// transcripts/ under the output directory.
BatchResult RunBatch(const ExperimentConfig& config,
                     bool write_outputs = false);

struct SweepRow {
  int n = 0;
  // Largest probed b with win rate >= 1/2 and smallest above it with win
  // rate < 1/2; unset when the crossing lies outside [b_min, b_max].
  std::optional<int> b_lower;
  std::optional<int> b_upper;
  std::optional<double> rate_lower;
  std::optional<double> rate_upper;
  bool monotone = true;
  // Every (b, b') pair of consecutive probes where the rate crosses 1/2.
  std::vector<std::pair<int, int>> crossings;
  std::vector<std::pair<int, double>> probes;
  double reference_low = 0;   // 0.25 n / ln n
  double reference_high = 0;  // n / ln n
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<TrialRecord> records;
};

SweepResult RunSweep(const ExperimentConfig& config,
                     bool write_outputs = false);
std::string SweepCsv(const SweepResult& result);

// Aggregates the audit counters of every *.jsonl transcript in `dir`
// (recursively) per claim and per regime.
Json AuditReport(const std::string& dir);

// Rows (k, a, lower_bound, f, upper_bound, oracle_check) for 1 <= k <=
// k_max, 1 <= a <= a_max. Bounds are printed to six decimals, rounded
// outwards. oracle_check is "pass"/"FAIL" where the minimax oracle can
// decide t = f and t = f + 1, "NA" elsewhere.
std::string BoxGameTablesCsv(int k_max, int a_max);

void WriteTextFile(const std::string& path, std::string_view text);

}  // namespace walkbreak

#endif  // WALKBREAK_EXPERIMENT_H_
