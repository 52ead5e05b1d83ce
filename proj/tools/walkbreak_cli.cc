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

// walkbreak: play, batch, sweep, audit and boxgame front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "walkbreak/walkbreak.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { wb_free_string(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ConfigDeleter {
  void operator()(wb_config* c) const { wb_config_free(c); }
};
using OwnedConfig = std::unique_ptr<wb_config, ConfigDeleter>;

int Report(wb_status status) {
  const char* detail = wb_last_error();
  std::cerr << "walkbreak: " << (*detail ? detail : wb_status_string(status))
            << "\n";
  return static_cast<int>(status) < 100 ? static_cast<int>(status) : 99;
}

struct ConfigFlags {
  std::string file;
  std::vector<std::string> sets;

  void Add(CLI::App* app) {
    app->add_option("-c,--config", file, "key = value config file")
        ->check(CLI::ExistingFile);
    app->add_option("-s,--set", sets, "override one key: key=value");
  }

  // Builds the config; returns a nonzero exit code on failure.
  int Load(OwnedConfig& out) const {
    wb_config* raw = nullptr;
    if (wb_status s = wb_config_new(&raw); s != WB_OK) return Report(s);
    out.reset(raw);
    if (!file.empty()) {
      if (wb_status s = wb_config_load_file(raw, file.c_str()); s != WB_OK)
        return Report(s);
    }
    for (const std::string& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        std::cerr << "walkbreak: --set expects key=value, got '" << kv
                  << "'\n";
        return 2;
      }
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      if (wb_status s = wb_config_set(raw, key.c_str(), value.c_str());
          s != WB_OK)
        return Report(s);
    }
    return 0;
  }
};

int Emit(const char* text, const std::string& path) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!(out << text)) {
    std::cerr << "walkbreak: cannot write " << path << "\n";
    return 14;
  }
  return 0;
}

std::vector<int> ParseSizes(const std::string& s) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stoi(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biased Walker-Breaker games on complete graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wb_version()));

  // play
  ConfigFlags play_flags;
  std::uint64_t play_seed = 1;
  std::string play_out;
  auto* play = app.add_subcommand("play", "play one game, print its transcript");
  play_flags.Add(play);
  play->add_option("--seed", play_seed, "game seed");
  play->add_option("-o,--out", play_out, "write the transcript here");

  // batch
  ConfigFlags batch_flags;
  auto* batch = app.add_subcommand(
      "batch", "run a trial grid; writes trials.csv and summary.json");
  batch_flags.Add(batch);

  // sweep
  ConfigFlags sweep_flags;
  auto* sweep = app.add_subcommand(
      "sweep", "bracket the 50% win-rate bias; writes sweep.csv and trials.csv");
  sweep_flags.Add(sweep);

  // audit
  std::string audit_dir;
  auto* audit = app.add_subcommand("audit", "summarise transcript audits");
  audit->add_option("dir", audit_dir, "transcript directory")->required();

  // boxgame
  int k_max = 8, a_max = 4, f_k = 0, box_a = 1;
  std::string sizes;
  auto* box = app.add_subcommand("boxgame", "box game tables and oracle");
  box->add_option("--k-max", k_max, "largest k in the table");
  box->add_option("--a-max", a_max, "largest a in the table");
  auto* f_opt = box->add_option("--f", f_k, "print f(k, a) for this k");
  box->add_option("--a", box_a, "BoxMaker bias for --f and --sizes");
  auto* sizes_opt =
      box->add_option("--sizes", sizes, "solve the instance, e.g. 3,3");

  CLI11_PARSE(app, argc, argv);

  if (*play) {
    OwnedConfig config;
    if (int rc = play_flags.Load(config)) return rc;
    char* raw = nullptr;
    if (wb_status s = wb_play(config.get(), play_seed, &raw); s != WB_OK)
      return Report(s);
    OwnedString text(raw);
    return Emit(text.get(), play_out);
  }
  if (*batch) {
    OwnedConfig config;
    if (int rc = batch_flags.Load(config)) return rc;
    char* raw = nullptr;
    if (wb_status s = wb_run_batch(config.get(), 1, nullptr, &raw); s != WB_OK)
      return Report(s);
    OwnedString text(raw);
    std::cout << text.get() << "\n";
    return 0;
  }
  if (*sweep) {
    OwnedConfig config;
    if (int rc = sweep_flags.Load(config)) return rc;
    char* raw = nullptr;
    if (wb_status s = wb_run_sweep(config.get(), 1, &raw); s != WB_OK)
      return Report(s);
    OwnedString text(raw);
    std::cout << text.get();
    return 0;
  }
  if (*audit) {
    char* raw = nullptr;
    if (wb_status s = wb_audit_dir(audit_dir.c_str(), &raw); s != WB_OK)
      return Report(s);
    OwnedString text(raw);
    std::cout << text.get() << "\n";
    return 0;
  }
  if (*box) {
    if (*f_opt) {
      int64_t f = 0;
      if (wb_status s = wb_box_f(f_k, box_a, &f); s != WB_OK) return Report(s);
      std::cout << f << "\n";
      return 0;
    }
    if (*sizes_opt) {
      std::vector<int> v;
      try {
        v = ParseSizes(sizes);
      } catch (const std::exception&) {
        std::cerr << "walkbreak: bad --sizes '" << sizes << "'\n";
        return 2;
      }
      int winner = 0;
      if (wb_status s = wb_box_winner(v.data(), v.size(), box_a, &winner);
          s != WB_OK)
        return Report(s);
      std::cout << (winner == WB_BOX_MAKER ? "BoxMaker" : "BoxBreaker")
                << "\n";
      return 0;
    }
    char* raw = nullptr;
    if (wb_status s = wb_box_tables(k_max, a_max, &raw); s != WB_OK)
      return Report(s);
    OwnedString text(raw);
    std::cout << text.get();
    return 0;
  }
  return 0;
}
