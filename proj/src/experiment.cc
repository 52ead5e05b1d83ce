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

#include "walkbreak/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/algorithm/string/trim.hpp>

#include "walkbreak/box_games.h"
#include "walkbreak/error.h"

namespace walkbreak {
namespace {

namespace fs = std::filesystem;

[[noreturn]] void Invalid(const std::string& msg) {
  throw Error(ErrorCode::kInvalidConfig, msg);
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    Invalid(std::string(key) + ": not an integer: '" + std::string(s) + "'");
  }
  return value;
}

bool ParseBool(std::string_view key, std::string_view s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  Invalid(std::string(key) + ": expected true or false");
}

std::vector<int> ParseIntList(std::string_view key, std::string_view s) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    std::string item(s.substr(start, comma - start));
    boost::algorithm::trim(item);
    if (!item.empty()) out.push_back(ParseNumber<int>(key, item));
    start = comma + 1;
  }
  if (out.empty()) Invalid(std::string(key) + ": empty list");
  return out;
}

Rational ParseRationalKey(std::string_view key, std::string_view s) {
  try {
    return ParseRational(s);
  } catch (const Error& e) {
    Invalid(std::string(key) + ": " + e.what());
  }
}

std::string FormatDecimal(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

// x to six decimals, rounded down (up = false) or up, trailing zeros cut.
std::string FormatBound(const BigRational& x, bool up) {
  using boost::multiprecision::cpp_int;
  const cpp_int scale = 1'000'000;
  cpp_int num = boost::multiprecision::numerator(x) * scale;
  const cpp_int den = boost::multiprecision::denominator(x);
  cpp_int q = num / den;
  if (up && q * den < num) ++q;
  const cpp_int whole = q / scale;
  std::string frac = cpp_int(q % scale).str();
  frac.insert(0, 6 - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = whole.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

GameSetup SetupFor(const ExperimentConfig& c, int n, int b,
                   std::uint64_t seed) {
  GameSetup s;
  s.n = n;
  s.b = b;
  s.goal = c.goal;
  s.first_player = c.first_player;
  s.walker = c.walker;
  s.breaker = c.breaker;
  s.seed = seed;
  s.p = c.p;
  s.epsilon = c.epsilon;
  s.audit = c.audit;
  s.stop_on_win = c.stop_on_win;
  s.hamilton_budget = c.hamilton_budget;
  s.certify_budget = c.certify_budget;
  return s;
}

struct Job {
  GameSetup setup;
  std::int64_t trial_id;
};

// Runs the jobs on a worker pool; the result is in job order.
std::vector<TrialRecord> RunJobs(const std::vector<Job>& jobs, int workers,
                                 bool record_timing,
                                 const std::optional<std::string>& tdir) {
  std::vector<TrialRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        Transcript t;
        out[i] = RunTrial(jobs[i].setup, jobs[i].trial_id, record_timing,
                          tdir ? &t : nullptr);
        if (tdir) {
          WriteTextFile(*tdir + "/trial_" +
                            std::to_string(jobs[i].trial_id) + ".jsonl",
                        t.ToJsonl());
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const int threads =
      std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::optional<std::string> TranscriptDir(const ExperimentConfig& c,
                                         bool write_outputs) {
  if (!write_outputs || !c.transcripts) return std::nullopt;
  const std::string dir = ResolveOutputDir(c) + "/transcripts";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

void SetConfigValue(ExperimentConfig& c, std::string_view key,
                    std::string_view value) {
  std::string v(value);
  boost::algorithm::trim(v);
  if (key == "goal") {
    try {
      c.goal = ParseGoal(v);
    } catch (const Error& e) {
      Invalid(e.what());
    }
  } else if (key == "n") {
    c.n = ParseIntList(key, v);
  } else if (key == "b") {
    c.b = ParseIntList(key, v);
  } else if (key == "b_min") {
    c.b_min = ParseNumber<int>(key, v);
  } else if (key == "b_max") {
    c.b_max = ParseNumber<int>(key, v);
  } else if (key == "p") {
    c.p = ParseRationalKey(key, v);
  } else if (key == "epsilon") {
    c.epsilon = ParseRationalKey(key, v);
  } else if (key == "walker") {
    c.walker = v;
  } else if (key == "breaker") {
    c.breaker = v;
  } else if (key == "first_player") {
    if (v == "auto") {
      c.first_player.reset();
    } else {
      try {
        c.first_player = ParsePlayer(v);
      } catch (const Error& e) {
        Invalid(e.what());
      }
    }
  } else if (key == "trials") {
    c.trials = ParseNumber<int>(key, v);
  } else if (key == "seed") {
    c.seed = ParseNumber<std::uint64_t>(key, v);
  } else if (key == "audit") {
    c.audit = ParseAuditMode(v);
  } else if (key == "workers") {
    c.workers = ParseNumber<int>(key, v);
  } else if (key == "stop_on_win") {
    c.stop_on_win = ParseBool(key, v);
  } else if (key == "hamilton_budget") {
    c.hamilton_budget = ParseNumber<std::uint64_t>(key, v);
  } else if (key == "certify_budget") {
    c.certify_budget = ParseNumber<std::uint64_t>(key, v);
  } else if (key == "record_timing") {
    c.record_timing = ParseBool(key, v);
  } else if (key == "output") {
    c.output = v;
  } else if (key == "transcripts") {
    c.transcripts = ParseBool(key, v);
  } else {
    Invalid("unknown config key '" + std::string(key) + "'");
  }
}

void ApplyConfigText(ExperimentConfig& config, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      Invalid("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = line.substr(0, eq);
    boost::algorithm::trim(key);
    SetConfigValue(config, key, std::string_view(line).substr(eq + 1));
  }
}

ExperimentConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  ExperimentConfig c;
  ApplyConfigText(c, buf.str());
  return c;
}

Json ConfigToJson(const ExperimentConfig& c) {
  auto opt = [](const std::optional<int>& v) {
    return v ? Json(*v) : Json(nullptr);
  };
  return {{"goal", GoalName(c.goal)},
          {"n", c.n},
          {"b", c.b},
          {"b_min", opt(c.b_min)},
          {"b_max", opt(c.b_max)},
          {"p", FormatRational(c.p)},
          {"epsilon", FormatRational(c.epsilon)},
          {"walker", c.walker},
          {"breaker", c.breaker},
          {"first_player",
           c.first_player ? Json(PlayerName(*c.first_player)) : Json("auto")},
          {"trials", c.trials},
          {"seed", c.seed},
          {"audit", AuditModeName(c.audit)},
          {"stop_on_win", c.stop_on_win},
          {"hamilton_budget", c.hamilton_budget},
          {"certify_budget", c.certify_budget},
          {"record_timing", c.record_timing}};
}

void ValidateConfig(const ExperimentConfig& c, RunKind kind) {
  if (c.trials < 1) Invalid("trials must be >= 1");
  if (c.workers < 1) Invalid("workers must be >= 1");
  if (c.n.empty()) Invalid("n is required");
  if (kind == RunKind::kBatch) {
    if (c.b.empty()) Invalid("b is required");
  } else {
    if (!c.b_min || !c.b_max) Invalid("sweeps need b_min and b_max");
    if (*c.b_min < 1 || *c.b_min > *c.b_max) Invalid("empty sweep range");
  }
  // Per-game checks, on one representative cell per n.
  for (int n : c.n) {
    const int b = kind == RunKind::kBatch ? c.b.front() : *c.b_min;
    ValidateSetup(SetupFor(c, n, b, 0));
  }
  for (int b : c.b) {
    if (b < 1) Invalid("b must be >= 1");
  }
}

std::string ResolveOutputDir(const ExperimentConfig& c) {
  if (const char* env = std::getenv(std::string(kOutputDirEnv).c_str())) {
    if (*env) return env;
  }
  return c.output;
}

std::string TrialCsvHeader() {
  return "trial_id,goal,n,b,p,epsilon,walker_strategy,breaker_strategy,seed,"
         "winner,rounds,walker_edge_count,breaker_edge_count,f1_total,f2_max,"
         "min_degree_ratio,hamiltonian,audit_violations,wallclock_ms";
}

std::string TrialCsvRow(const TrialRecord& r) {
  std::string ham = "NA";
  if (r.hamiltonian_unknown) {
    ham = "unknown";
  } else if (r.hamiltonian) {
    ham = *r.hamiltonian ? "true" : "false";
  }
  std::ostringstream o;
  o << r.trial_id << ',' << GoalName(r.goal) << ',' << r.n << ',' << r.b
    << ',' << FormatRational(r.p) << ',' << FormatRational(r.epsilon) << ','
    << r.walker_strategy << ',' << r.breaker_strategy << ',' << r.seed << ','
    << r.winner << ',' << r.rounds << ',' << r.walker_edge_count << ','
    << r.breaker_edge_count << ',' << r.f1_total << ',' << r.f2_max << ','
    << (r.min_degree_ratio ? FormatDecimal(ToDouble(*r.min_degree_ratio), 6)
                           : "NA")
    << ',' << ham << ',' << r.audit_violations << ','
    << (r.wallclock_ms ? FormatDecimal(*r.wallclock_ms, 3) : "NA");
  return o.str();
}

std::string TrialsCsv(const std::vector<TrialRecord>& records) {
  std::string out(kTrialCsvVersionLine);
  out += '\n';
  out += TrialCsvHeader();
  out += '\n';
  for (const auto& r : records) {
    out += TrialCsvRow(r);
    out += '\n';
  }
  return out;
}

TrialRecord RunTrial(const GameSetup& setup, std::int64_t trial_id,
                     bool record_timing, Transcript* transcript) {
  TrialRecord r;
  r.trial_id = trial_id;
  r.goal = setup.goal;
  r.n = setup.n;
  r.b = setup.b;
  r.p = setup.p;
  r.epsilon = setup.epsilon;
  r.walker_strategy = setup.walker;
  r.breaker_strategy = setup.breaker;
  r.seed = setup.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    GameResult g = PlayGame(setup);
    r.winner = std::string(PlayerName(g.winner));
    r.outcome = std::string(StatusName(g.status));
    r.rounds = g.final_state.round();
    r.walker_edge_count = g.final_state.walker_edge_count();
    r.breaker_edge_count = g.final_state.breaker_edge_count();
    r.f1_total = g.metrics.f1_total;
    r.f2_max = g.metrics.f2_max;
    r.min_degree_ratio = g.metrics.min_degree_ratio;
    r.hamiltonian = g.metrics.hamiltonian;
    r.hamiltonian_unknown = g.metrics.hamiltonian_unknown;
    r.audit_violations = g.audits.violations();
    r.hard_violations = g.audits.hard_violations();
    r.in_regime = g.walker_in_regime;
    r.c6_exceeded = g.metrics.c6_exceeded;
    r.h_edges = g.metrics.h_edges;
    r.isolated_vertex = g.final_state.isolated_vertex();
    if (transcript) *transcript = std::move(g.transcript);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kStrategyFault) throw;
    r.winner = "fault";
    r.outcome = "StrategyFault";
    r.fault = e.what();
  }
  if (record_timing) {
    r.wallclock_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return r;
}

BatchResult RunBatch(const ExperimentConfig& config, bool write_outputs) {
  ValidateConfig(config, RunKind::kBatch);
  std::vector<Job> jobs;
  std::int64_t cell = 0;
  for (int n : config.n) {
    for (int b : config.b) {
      for (int t = 0; t < config.trials; ++t) {
        jobs.push_back({SetupFor(config, n, b, DeriveSeed(config.seed, cell, t)),
                        cell * config.trials + t});
      }
      ++cell;
    }
  }
  BatchResult result;
  result.records = RunJobs(jobs, config.workers, config.record_timing,
                           TranscriptDir(config, write_outputs));

  Json cells = Json::array();
  for (std::size_t i = 0; i < result.records.size();
       i += static_cast<std::size_t>(config.trials)) {
    const TrialRecord& first = result.records[i];
    std::int64_t wins = 0, faults = 0, resigns = 0, hard = 0, flagged = 0;
    for (int t = 0; t < config.trials; ++t) {
      const TrialRecord& r = result.records[i + t];
      wins += r.winner == "walker";
      faults += r.winner == "fault";
      resigns += r.outcome == "WalkerResign";
      hard += r.hard_violations;
      flagged += r.audit_violations - r.hard_violations;
    }
    cells.push_back({{"n", first.n},
                     {"b", first.b},
                     {"trials", config.trials},
                     {"walker_wins", wins},
                     {"walker_win_rate",
                      static_cast<double>(wins) / config.trials},
                     {"walker_resignations", resigns},
                     {"faults", faults},
                     {"hard_violations", hard},
                     {"flagged_violations", flagged},
                     {"in_regime", first.in_regime}});
  }
  result.summary = {{"config", ConfigToJson(config)}, {"cells", cells}};

  if (write_outputs) {
    const std::string dir = ResolveOutputDir(config);
    fs::create_directories(dir);
    WriteTextFile(dir + "/trials.csv", TrialsCsv(result.records));
    WriteTextFile(dir + "/summary.json", result.summary.dump(2) + "\n");
  }
  return result;
}

SweepResult RunSweep(const ExperimentConfig& config, bool write_outputs) {
  ValidateConfig(config, RunKind::kSweep);
  SweepResult result;
  const auto tdir = TranscriptDir(config, write_outputs);
  std::int64_t next_id = 0;
  for (std::size_t ni = 0; ni < config.n.size(); ++ni) {
    const int n = config.n[ni];
    std::map<int, double> rate;
    auto probe = [&](int b) {
      if (auto it = rate.find(b); it != rate.end()) return it->second;
      const std::uint64_t cell = (static_cast<std::uint64_t>(ni) << 32) |
                                 static_cast<std::uint32_t>(b);
      std::vector<Job> jobs;
      for (int t = 0; t < config.trials; ++t) {
        jobs.push_back(
            {SetupFor(config, n, b, DeriveSeed(config.seed, cell, t)),
             next_id++});
      }
      auto recs = RunJobs(jobs, config.workers, config.record_timing, tdir);
      int wins = 0;
      for (auto& r : recs) {
        wins += r.winner == "walker";
        result.records.push_back(std::move(r));
      }
      return rate[b] = static_cast<double>(wins) / config.trials;
    };

    int lo = *config.b_min, hi = *config.b_max;
    const bool lo_wins = probe(lo) >= 0.5;
    const bool hi_wins = probe(hi) >= 0.5;
    SweepRow row;
    row.n = n;
    if (lo_wins && !hi_wins) {
      while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        (probe(mid) >= 0.5 ? lo : hi) = mid;
      }
    }
    // Crossings among all probes, in bias order.
    std::optional<std::pair<int, double>> prev;
    for (const auto& [b, r] : rate) {
      row.probes.emplace_back(b, r);
      if (prev && (prev->second >= 0.5) != (r >= 0.5))
        row.crossings.emplace_back(prev->first, b);
      prev = std::pair(b, r);
    }
    for (const auto& [b1, b2] : row.crossings) {
      if (rate[b1] < 0.5) row.monotone = false;
    }
    if (lo_wins && !hi_wins) {
      if (row.monotone) {
        row.b_lower = lo;
        row.b_upper = hi;
      } else {
        // Widen to span every downward crossing.
        for (const auto& [b1, b2] : row.crossings) {
          if (rate[b1] < 0.5) continue;
          if (!row.b_lower || b1 < *row.b_lower) row.b_lower = b1;
          if (!row.b_upper || b2 > *row.b_upper) row.b_upper = b2;
        }
      }
    } else if (lo_wins) {
      row.b_lower = hi;  // Walker still wins at the top of the range.
    } else {
      row.b_upper = lo;  // Breaker already wins at the bottom.
    }
    if (row.b_lower) row.rate_lower = rate[*row.b_lower];
    if (row.b_upper) row.rate_upper = rate[*row.b_upper];
    row.reference_low = 0.25 * n / std::log(n);
    row.reference_high = n / std::log(n);
    result.rows.push_back(std::move(row));
  }

  if (write_outputs) {
    const std::string dir = ResolveOutputDir(config);
    fs::create_directories(dir);
    WriteTextFile(dir + "/trials.csv", TrialsCsv(result.records));
    WriteTextFile(dir + "/sweep.csv", SweepCsv(result));
  }
  return result;
}

std::string SweepCsv(const SweepResult& result) {
  auto opt_i = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("NA");
  };
  auto opt_d = [](const std::optional<double>& v) {
    return v ? FormatDecimal(*v, 4) : std::string("NA");
  };
  std::string out =
      "# walkbreak-sweep v1\n"
      "n,b_lower,b_upper,rate_lower,rate_upper,monotone,crossings,"
      "reference_low,reference_high\n";
  for (const SweepRow& r : result.rows) {
    std::string crossings;
    for (const auto& [b1, b2] : r.crossings) {
      if (!crossings.empty()) crossings += ';';
      crossings += std::to_string(b1) + "-" + std::to_string(b2);
    }
    out += std::to_string(r.n) + "," + opt_i(r.b_lower) + "," +
           opt_i(r.b_upper) + "," + opt_d(r.rate_lower) + "," +
           opt_d(r.rate_upper) + "," + (r.monotone ? "true" : "false") +
           "," + (crossings.empty() ? "NA" : crossings) + "," +
           FormatDecimal(r.reference_low, 4) + "," +
           FormatDecimal(r.reference_high, 4) + "\n";
  }
  return out;
}

Json AuditReport(const std::string& dir) {
  Json report = {{"transcripts", 0},
                 {"games_with_hard_violations", 0},
                 {"claims", Json::object()},
                 {"regimes", Json::object()}};
  if (!fs::exists(dir)) return report;
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  auto add = [](Json& claims, const std::string& claim, const Json& c) {
    if (!claims.contains(claim)) {
      claims[claim] = {{"checks", 0},
                       {"violations", 0},
                       {"hard_violations", 0},
                       {"statistical", IsStatisticalClaim(claim)}};
    }
    Json& dst = claims[claim];
    for (const char* k : {"checks", "violations", "hard_violations"}) {
      dst[k] = dst[k].get<std::int64_t>() + c.at(k).get<std::int64_t>();
    }
  };
  for (const fs::path& path : files) {
    const Transcript t = ReadTranscriptFile(path.string());
    const std::string regime =
        t.header.value("in_regime", false) ? "in_regime" : "out_of_regime";
    Json& reg = report["regimes"][regime];
    if (!reg.contains("transcripts")) {
      reg = {{"transcripts", 0}, {"claims", Json::object()}};
    }
    reg["transcripts"] = reg["transcripts"].get<int>() + 1;
    report["transcripts"] = report["transcripts"].get<int>() + 1;
    if (t.footer.value("hard_violations", 0) > 0) {
      report["games_with_hard_violations"] =
          report["games_with_hard_violations"].get<int>() + 1;
    }
    for (const auto& [claim, c] : t.footer.at("audits").items()) {
      add(report["claims"], claim, c);
      add(reg["claims"], claim, c);
    }
  }
  return report;
}

std::string BoxGameTablesCsv(int k_max, int a_max) {
  if (k_max < 1 || a_max < 1) Invalid("table ranges must be >= 1");
  std::string out = "k,a,lower_bound,f,upper_bound,oracle_check\n";
  for (int k = 1; k <= k_max; ++k) {
    for (int a = 1; a <= a_max; ++a) {
      const std::int64_t f = BoxF(k, a);
      std::string lower = "0", upper = "0";
      if (k >= 2) {
        const BoxFBounds bounds = ComputeBoxFBounds(k, a);
        lower = FormatBound(bounds.lower, false);
        upper = FormatBound(bounds.upper, true);
      }
      std::string check = "NA";
      if (f + 1 <= kOracleMaxElements) {
        const bool ok =
            ExactBoxGameWinner(NearEqualSizes(k, f), a) == BoxPlayer::kMaker &&
            ExactBoxGameWinner(NearEqualSizes(k, f + 1), a) ==
                BoxPlayer::kBreaker;
        check = ok ? "pass" : "FAIL";
      }
      out += std::to_string(k) + "," + std::to_string(a) + "," + lower + "," +
             std::to_string(f) + "," + upper + "," + check + "\n";
    }
  }
  return out;
}

void WriteTextFile(const std::string& path, std::string_view text) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

}  // namespace walkbreak
