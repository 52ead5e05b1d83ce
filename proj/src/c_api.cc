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

#include "walkbreak/walkbreak.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "walkbreak/box_games.h"
#include "walkbreak/error.h"
#include "walkbreak/experiment.h"
#include "walkbreak/game.h"

struct wb_game {
  walkbreak::GameState state;
};

struct wb_config {
  walkbreak::ExperimentConfig config;
};

namespace {

thread_local std::string last_error;

wb_status Fail(wb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <typename F>
wb_status Guard(F&& f) {
  try {
    last_error.clear();
    f();
    return WB_OK;
  } catch (const walkbreak::Error& e) {
    return Fail(static_cast<wb_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(WB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(WB_ERR_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define WB_REQUIRE(p)                                                   \
  do {                                                                  \
    if ((p) == nullptr) return Fail(WB_ERR_NULL_ARGUMENT, #p " is NULL"); \
  } while (0)

}  // namespace

extern "C" {

const char* wb_version(void) { return "1.0.0"; }

const char* wb_status_string(int status) {
  switch (status) {
    case WB_OK: return "OK";
    case WB_ERR_NULL_ARGUMENT: return "NullArgument";
    case WB_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case WB_ERR_INTERNAL: return "Internal";
    default:
      if (status >= WB_ERR_INVALID_CONFIG && status <= WB_ERR_IO) {
        return walkbreak::ErrorCodeName(
                   static_cast<walkbreak::ErrorCode>(status))
            .data();
      }
      return "Unknown";
  }
}

const char* wb_last_error(void) { return last_error.c_str(); }

void wb_free_string(char* s) { std::free(s); }

wb_status wb_game_new(int n, int b, int first_player, int goal,
                      int stop_on_win, wb_game** out) {
  WB_REQUIRE(out);
  *out = nullptr;
  if (first_player != WB_WALKER && first_player != WB_BREAKER)
    return Fail(WB_ERR_INVALID_CONFIG, "bad first_player");
  if (goal != WB_GOAL_CONNECTIVITY && goal != WB_GOAL_HAMILTONICITY)
    return Fail(WB_ERR_INVALID_CONFIG, "bad goal");
  return Guard([&] {
    walkbreak::GameOptions options;
    options.goal = goal == WB_GOAL_CONNECTIVITY
                       ? walkbreak::Goal::kConnectivity
                       : walkbreak::Goal::kHamiltonCycle;
    options.stop_on_win = stop_on_win != 0;
    *out = new wb_game{walkbreak::NewGame(
        n, b,
        first_player == WB_WALKER ? walkbreak::Player::kWalker
                                  : walkbreak::Player::kBreaker,
        options)};
  });
}

void wb_game_free(wb_game* game) { delete game; }

wb_status wb_game_apply_breaker(wb_game* game, const int* edges,
                                size_t count) {
  WB_REQUIRE(game);
  if (count > 0) WB_REQUIRE(edges);
  return Guard([&] {
    walkbreak::BreakerMove move;
    for (size_t i = 0; i < count; ++i) {
      const int u = edges[2 * i], v = edges[2 * i + 1];
      const int n = game->state.n();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
        throw walkbreak::Error(walkbreak::ErrorCode::kIllegalClaim,
                               "edge out of range");
      }
      move.edges.push_back(walkbreak::Edge(u, v));
    }
    walkbreak::ApplyBreakerMove(game->state, move);
  });
}

wb_status wb_game_apply_walker(wb_game* game, const int* vertices,
                               size_t count) {
  WB_REQUIRE(game);
  WB_REQUIRE(vertices);
  return Guard([&] {
    walkbreak::WalkerMove move;
    for (size_t i = 0; i + 1 < count; ++i) {
      move.steps.push_back({vertices[i], vertices[i + 1]});
    }
    walkbreak::ApplyWalkerMove(game->state, move);
  });
}

wb_status wb_game_get_info(const wb_game* game, wb_game_info* out) {
  WB_REQUIRE(game);
  WB_REQUIRE(out);
  const walkbreak::GameState& s = game->state;
  out->n = s.n();
  out->walker_bias = s.walker_bias();
  out->breaker_bias = s.breaker_bias();
  out->round = s.round();
  out->to_move = s.to_move() == walkbreak::Player::kWalker ? WB_WALKER
                                                           : WB_BREAKER;
  out->status = static_cast<int>(s.status());
  out->position = s.walker_position().value_or(-1);
  out->goal_round = s.goal_round().value_or(-1);
  out->isolated_vertex = s.isolated_vertex().value_or(-1);
  out->free_edges = s.free_count();
  out->walker_edges = s.walker_edge_count();
  out->breaker_edges = s.breaker_edge_count();
  return WB_OK;
}

wb_status wb_game_owner(const wb_game* game, int u, int v, int* owner) {
  WB_REQUIRE(game);
  WB_REQUIRE(owner);
  const int n = game->state.n();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v)
    return Fail(WB_ERR_INVALID_CONFIG, "vertex pair out of range");
  *owner = static_cast<int>(game->state.owner(u, v));
  return WB_OK;
}

wb_status wb_game_legal_steps(const wb_game* game, int from, int* out,
                              size_t cap, size_t* count) {
  WB_REQUIRE(game);
  WB_REQUIRE(count);
  if (from < 0 || from >= game->state.n())
    return Fail(WB_ERR_INVALID_CONFIG, "vertex out of range");
  const std::vector<int> steps = walkbreak::LegalSteps(game->state, from);
  *count = steps.size();
  if (cap > 0) WB_REQUIRE(out);
  for (size_t i = 0; i < steps.size() && i < cap; ++i) out[i] = steps[i];
  if (cap < steps.size())
    return Fail(WB_ERR_BUFFER_TOO_SMALL, "buffer holds fewer steps");
  return WB_OK;
}

wb_status wb_config_new(wb_config** out) {
  WB_REQUIRE(out);
  return Guard([&] { *out = new wb_config{}; });
}

void wb_config_free(wb_config* config) { delete config; }

wb_status wb_config_load_file(wb_config* config, const char* path) {
  WB_REQUIRE(config);
  WB_REQUIRE(path);
  return Guard([&] {
    walkbreak::ExperimentConfig c = walkbreak::LoadConfigFile(path);
    config->config = std::move(c);
  });
}

wb_status wb_config_load_text(wb_config* config, const char* text) {
  WB_REQUIRE(config);
  WB_REQUIRE(text);
  return Guard([&] {
    walkbreak::ExperimentConfig c = config->config;
    walkbreak::ApplyConfigText(c, text);
    config->config = std::move(c);
  });
}

wb_status wb_config_set(wb_config* config, const char* key,
                        const char* value) {
  WB_REQUIRE(config);
  WB_REQUIRE(key);
  WB_REQUIRE(value);
  return Guard(
      [&] { walkbreak::SetConfigValue(config->config, key, value); });
}

wb_status wb_config_dump(const wb_config* config, char** json) {
  WB_REQUIRE(config);
  WB_REQUIRE(json);
  return Guard(
      [&] { *json = Dup(walkbreak::ConfigToJson(config->config).dump(2)); });
}

wb_status wb_play(const wb_config* config, uint64_t seed,
                  char** transcript_jsonl) {
  WB_REQUIRE(config);
  WB_REQUIRE(transcript_jsonl);
  return Guard([&] {
    const walkbreak::ExperimentConfig& c = config->config;
    if (c.n.empty() || c.b.empty()) {
      throw walkbreak::Error(walkbreak::ErrorCode::kInvalidConfig,
                             "play needs n and b");
    }
    walkbreak::GameSetup setup;
    setup.n = c.n.front();
    setup.b = c.b.front();
    setup.goal = c.goal;
    setup.first_player = c.first_player;
    setup.walker = c.walker;
    setup.breaker = c.breaker;
    setup.seed = seed;
    setup.p = c.p;
    setup.epsilon = c.epsilon;
    setup.audit = c.audit;
    setup.stop_on_win = c.stop_on_win;
    setup.hamilton_budget = c.hamilton_budget;
    setup.certify_budget = c.certify_budget;
    *transcript_jsonl = Dup(walkbreak::PlayGame(setup).transcript.ToJsonl());
  });
}

wb_status wb_run_batch(const wb_config* config, int write_outputs,
                       char** trials_csv, char** summary_json) {
  WB_REQUIRE(config);
  return Guard([&] {
    auto result = walkbreak::RunBatch(config->config, write_outputs != 0);
    if (trials_csv) *trials_csv = Dup(walkbreak::TrialsCsv(result.records));
    if (summary_json) *summary_json = Dup(result.summary.dump(2));
  });
}

wb_status wb_run_sweep(const wb_config* config, int write_outputs,
                       char** sweep_csv) {
  WB_REQUIRE(config);
  return Guard([&] {
    auto result = walkbreak::RunSweep(config->config, write_outputs != 0);
    if (sweep_csv) *sweep_csv = Dup(walkbreak::SweepCsv(result));
  });
}

wb_status wb_audit_dir(const char* dir, char** report_json) {
  WB_REQUIRE(dir);
  WB_REQUIRE(report_json);
  return Guard(
      [&] { *report_json = Dup(walkbreak::AuditReport(dir).dump(2)); });
}

wb_status wb_box_f(int k, int a, int64_t* out) {
  WB_REQUIRE(out);
  return Guard([&] { *out = walkbreak::BoxF(k, a); });
}

wb_status wb_box_winner(const int* sizes, size_t k, int a, int* winner) {
  WB_REQUIRE(winner);
  if (k > 0) WB_REQUIRE(sizes);
  return Guard([&] {
    const std::vector<int> v(sizes, sizes + k);
    *winner = walkbreak::ExactBoxGameWinner(v, a) ==
                      walkbreak::BoxPlayer::kMaker
                  ? WB_BOX_MAKER
                  : WB_BOX_BREAKER;
  });
}

wb_status wb_box_tables(int k_max, int a_max, char** csv) {
  WB_REQUIRE(csv);
  return Guard([&] { *csv = Dup(walkbreak::BoxGameTablesCsv(k_max, a_max)); });
}

}  // extern "C"
