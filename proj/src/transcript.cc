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

#include "walkbreak/transcript.h"

#include <fstream>
#include <sstream>

#include "walkbreak/error.h"

namespace walkbreak {

std::string Transcript::ToJsonl() const {
  std::string out = header.dump();
  out += '\n';
  for (const Json& r : rounds) {
    out += r.dump();
    out += '\n';
  }
  out += footer.dump();
  out += '\n';
  return out;
}

Json EdgesToJson(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json StepsToJson(const std::vector<Step>& steps) {
  Json out = Json::array();
  for (const Step& s : steps) out.push_back({s.from, s.to});
  return out;
}

BreakerMove BreakerMoveFromJson(const Json& j) {
  BreakerMove move;
  for (const Json& e : j) {
    move.edges.push_back(Edge(e.at(0).get<int>(), e.at(1).get<int>()));
  }
  return move;
}

WalkerMove WalkerMoveFromJson(const Json& j) {
  WalkerMove move;
  for (const Json& s : j) {
    move.steps.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
  }
  return move;
}

Transcript ParseTranscript(std::string_view text) {
  Transcript t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false, have_footer = false;
  int line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      Json j = Json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        if (j.at("format") != kTranscriptFormat ||
            j.at("version") != kTranscriptVersion) {
          throw Error(ErrorCode::kParseError,
                      "unsupported transcript format or version");
        }
        t.header = std::move(j);
        have_header = true;
      } else if (type == "round") {
        t.rounds.push_back(std::move(j));
      } else if (type == "footer") {
        t.footer = std::move(j);
        have_footer = true;
      } else {
        throw Error(ErrorCode::kParseError, "unknown record type " + type);
      }
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError,
                "transcript line " + std::to_string(line_no) + ": " +
                    e.what());
  }
  if (!have_header || !have_footer) {
    throw Error(ErrorCode::kParseError, "transcript lacks header or footer");
  }
  return t;
}

Transcript ReadTranscriptFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseTranscript(buf.str());
}

GameState ReplayTranscript(const Transcript& transcript) {
  const Json& h = transcript.header;
  GameOptions options;
  int n = 0, breaker_bias = 0;
  Player first = Player::kBreaker;
  try {
    options.goal = ParseGoal(h.at("goal").get<std::string>());
    options.walker_bias = h.at("walker_bias").get<int>();
    options.stop_on_win = h.at("stop_on_win").get<bool>();
    options.hamilton_budget = h.at("hamilton_budget").get<std::uint64_t>();
    first = ParsePlayer(h.at("first_player").get<std::string>());
    n = h.at("n").get<int>();
    breaker_bias = h.at("breaker_bias").get<int>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  GameState state = NewGame(n, breaker_bias, first, options);
  try {
    for (const Json& r : transcript.rounds) {
      auto walker = [&] {
        if (r.contains("walker_steps")) {
          ApplyWalkerMove(state, WalkerMoveFromJson(r["walker_steps"]));
        }
        if (r.contains("walker_resign")) state.Resign();
      };
      auto breaker = [&] {
        if (r.contains("breaker_edges")) {
          ApplyBreakerMove(state, BreakerMoveFromJson(r["breaker_edges"]));
        }
      };
      if (first == Player::kBreaker) {
        breaker();
        walker();
      } else {
        walker();
        breaker();
      }
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return state;
}

}  // namespace walkbreak
