/* Copyright 2026 The walkbreak Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libwalkbreak.
 *
 * Every function returns a wb_status; WB_OK is 0. On failure the message of
 * the last error on the calling thread is available from wb_last_error().
 * Strings handed out by the library are released with wb_free_string().
 */

#ifndef WALKBREAK_WALKBREAK_H_
#define WALKBREAK_WALKBREAK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(WALKBREAK_BUILDING_LIBRARY)
#define WB_API __declspec(dllexport)
#else
#define WB_API __declspec(dllimport)
#endif
#else
#define WB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wb_status {
  WB_OK = 0,
  WB_ERR_INVALID_CONFIG = 1,
  WB_ERR_ILLEGAL_CLAIM = 2,
  WB_ERR_BAD_BIAS = 3,
  WB_ERR_TURN = 4,
  WB_ERR_ILLEGAL_TRAVERSAL = 5,
  WB_ERR_BROKEN_WALK = 6,
  WB_ERR_STRATEGY_FAULT = 7,
  WB_ERR_VALUE_OVERFLOW = 8,
  WB_ERR_ORACLE_BUDGET = 9,
  WB_ERR_NO_ACTIVE_BOX = 10,
  WB_ERR_BOX_EXHAUSTED = 11,
  WB_ERR_NOT_SUBGRAPH = 12,
  WB_ERR_PARSE = 13,
  WB_ERR_IO = 14,
  WB_ERR_NULL_ARGUMENT = 100,
  WB_ERR_BUFFER_TOO_SMALL = 101,
  WB_ERR_INTERNAL = 102
} wb_status;

enum { WB_WALKER = 0, WB_BREAKER = 1 };
enum { WB_GOAL_CONNECTIVITY = 0, WB_GOAL_HAMILTONICITY = 1 };
enum { WB_OWNER_FREE = 0, WB_OWNER_WALKER = 1, WB_OWNER_BREAKER = 2 };
enum {
  WB_RUNNING = 0,
  WB_WALKER_WIN = 1,
  WB_BREAKER_WIN = 2,
  WB_WALKER_RESIGN = 3
};
enum { WB_BOX_MAKER = 0, WB_BOX_BREAKER = 1 };

typedef struct wb_game wb_game;
typedef struct wb_config wb_config;

typedef struct wb_game_info {
  int n;
  int walker_bias;
  int breaker_bias;
  int round;
  int to_move;         /* WB_WALKER or WB_BREAKER */
  int status;          /* WB_RUNNING, ... */
  int position;        /* -1 before Walker's first move */
  int goal_round;      /* -1 if Walker's goal was never reached */
  int isolated_vertex; /* -1 unless Breaker won by isolation */
  int64_t free_edges;
  int64_t walker_edges;
  int64_t breaker_edges;
} wb_game_info;

WB_API const char* wb_version(void);
WB_API const char* wb_status_string(int status);
WB_API const char* wb_last_error(void);
WB_API void wb_free_string(char* s);

/* Boards. */
WB_API wb_status wb_game_new(int n, int b, int first_player, int goal,
                             int stop_on_win, wb_game** out);
WB_API void wb_game_free(wb_game* game);
/* edges holds count pairs (u, v). */
WB_API wb_status wb_game_apply_breaker(wb_game* game, const int* edges,
                                       size_t count);
/* The walk v_0, v_1, ..., v_{count-1}; count is the walker bias plus one. */
WB_API wb_status wb_game_apply_walker(wb_game* game, const int* vertices,
                                      size_t count);
WB_API wb_status wb_game_get_info(const wb_game* game, wb_game_info* out);
WB_API wb_status wb_game_owner(const wb_game* game, int u, int v, int* owner);
/* Writes up to cap vertices; *count receives the full number. */
WB_API wb_status wb_game_legal_steps(const wb_game* game, int from, int* out,
                                     size_t cap, size_t* count);

/* Experiment configurations (key = value, see the README). */
WB_API wb_status wb_config_new(wb_config** out);
WB_API void wb_config_free(wb_config* config);
WB_API wb_status wb_config_load_file(wb_config* config, const char* path);
WB_API wb_status wb_config_load_text(wb_config* config, const char* text);
WB_API wb_status wb_config_set(wb_config* config, const char* key,
                               const char* value);
/* Resolved configuration as JSON. */
WB_API wb_status wb_config_dump(const wb_config* config, char** json);

/* One game on the first n and b of the config with the given seed. */
WB_API wb_status wb_play(const wb_config* config, uint64_t seed,
                         char** transcript_jsonl);
/* With write_outputs, files go to the output directory as well. Either
 * result pointer may be NULL. */
WB_API wb_status wb_run_batch(const wb_config* config, int write_outputs,
                              char** trials_csv, char** summary_json);
WB_API wb_status wb_run_sweep(const wb_config* config, int write_outputs,
                              char** sweep_csv);
WB_API wb_status wb_audit_dir(const char* dir, char** report_json);

/* Box games. */
WB_API wb_status wb_box_f(int k, int a, int64_t* out);
WB_API wb_status wb_box_winner(const int* sizes, size_t k, int a,
                               int* winner);
WB_API wb_status wb_box_tables(int k_max, int a_max, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* WALKBREAK_WALKBREAK_H_ */
