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

#include "walkbreak/graph.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "walkbreak/error.h"

namespace walkbreak {

namespace {

using Bits = std::vector<std::uint64_t>;

inline void SetBit(Bits& b, int i) { b[i >> 6] |= 1ULL << (i & 63); }
inline void ClearBit(Bits& b, int i) { b[i >> 6] &= ~(1ULL << (i & 63)); }
inline bool TestBit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }

template <typename F>
void ForEachBit(const Bits& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t word = b[w];
    while (word) {
      int bit = std::countr_zero(word);
      f(static_cast<int>(w * 64 + bit));
      word &= word - 1;
    }
  }
}

void CheckVertex(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) {
    throw Error(ErrorCode::kInvalidConfig,
                "vertex " + std::to_string(v) + " out of range");
  }
}

// Depth-first extension of a path anchored at vertex 0. Candidates are
// tried in order of fewest unvisited neighbours (lowest index on ties), and a
// branch is cut as soon as some remaining vertex cannot get two cycle
// neighbours or the remaining vertices are not all reachable from the end.
class HamiltonSearch {
 public:
  HamiltonSearch(const SimpleGraph& g, std::uint64_t budget)
      : g_(g), n_(g.num_vertices()), words_(g.words_per_row()),
        budget_(budget), unvisited_(words_, 0), open_(words_, 0),
        reached_(words_, 0), frontier_(words_, 0), next_(words_, 0),
        candidates_(static_cast<std::size_t>(n_) * n_) {}

  HamiltonResult Run() {
    for (int v = 1; v < n_; ++v) SetBit(unvisited_, v);
    remaining_ = n_ - 1;
    bool found = Extend(0, 0);
    if (aborted_) return HamiltonResult::kUnknown;
    return found ? HamiltonResult::kYes : HamiltonResult::kNo;
  }

 private:
  int CountIn(int x, const Bits& mask) const {
    auto row = g_.Row(x);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(row[w] & mask[w]);
    return c;
  }

  bool Feasible(int end) {
    open_ = unvisited_;
    SetBit(open_, end);
    SetBit(open_, 0);
    bool stuck = false;
    bool anchor_ok = false;
    ForEachBit(unvisited_, [&](int x) {
      if (stuck) return;
      if (CountIn(x, open_) < 2) stuck = true;
      if (g_.HasEdge(x, 0)) anchor_ok = true;
    });
    if (stuck || !anchor_ok) return false;

    std::fill(reached_.begin(), reached_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    SetBit(frontier_, end);
    int count = 0;
    while (true) {
      std::fill(next_.begin(), next_.end(), 0);
      ForEachBit(frontier_, [&](int x) {
        auto row = g_.Row(x);
        for (int w = 0; w < words_; ++w) next_[w] |= row[w];
      });
      bool grew = false;
      for (int w = 0; w < words_; ++w) {
        next_[w] &= unvisited_[w] & ~reached_[w];
        if (next_[w]) grew = true;
        reached_[w] |= next_[w];
        count += std::popcount(next_[w]);
      }
      if (!grew) break;
      frontier_.swap(next_);
    }
    return count == remaining_;
  }

  bool Extend(int end, int depth) {
    if (aborted_) return false;
    if (++expansions_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (remaining_ == 0) return g_.HasEdge(end, 0);
    if (!Feasible(end)) return false;

    // Candidate list for this depth, keyed by (unvisited degree, index).
    std::pair<int, int>* cand = &candidates_[static_cast<std::size_t>(depth) * n_];
    int m = 0;
    auto row = g_.Row(end);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w] & unvisited_[w];
      while (bits) {
        const int x = static_cast<int>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        cand[m++] = {CountIn(x, unvisited_), x};
      }
    }
    std::sort(cand, cand + m);
    for (int i = 0; i < m; ++i) {
      const int next = cand[i].second;
      ClearBit(unvisited_, next);
      --remaining_;
      bool found = Extend(next, depth + 1);
      ++remaining_;
      SetBit(unvisited_, next);
      if (found) return true;
      if (aborted_) return false;
    }
    return false;
  }

  const SimpleGraph& g_;
  int n_;
  int words_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool aborted_ = false;
  Bits unvisited_;
  Bits open_, reached_, frontier_, next_;
  std::vector<std::pair<int, int>> candidates_;
  int remaining_ = 0;
};

// Rotation-extension (Posa) search for a Hamilton cycle. It can only
// answer "found": every cycle it returns is checked edge by edge, so it
// serves as a fast certificate for the exact search below. Deterministic.
bool RotationExtensionFinds(const SimpleGraph& g, int restarts,
                            std::int64_t steps_per_restart) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.Neighbors(v);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<int> path, pos(n);
  for (int r = 0; r < restarts; ++r) {
    path.assign(1, r % n);
    std::fill(pos.begin(), pos.end(), -1);
    pos[path[0]] = 0;
    for (std::int64_t step = 0; step < steps_per_restart; ++step) {
      const int end = path.back();
      // Extend to the unvisited neighbour with fewest unvisited neighbours.
      int best = -1, best_deg = 0;
      for (int x : adj[end]) {
        if (pos[x] >= 0) continue;
        int d = 0;
        for (int y : adj[x]) d += pos[y] < 0;
        if (best < 0 || d < best_deg) {
          best = x;
          best_deg = d;
        }
      }
      if (best >= 0) {
        pos[best] = static_cast<int>(path.size());
        path.push_back(best);
        continue;
      }
      const int len = static_cast<int>(path.size());
      if (len == n && g.HasEdge(end, path[0])) {
        for (int i = 0; i < n; ++i) {
          if (!g.HasEdge(path[i], path[(i + 1) % n])) return false;
        }
        return true;
      }
      // Rotate: pick a path neighbour x = path[i] of the end and reverse the
      // segment after it, making path[i+1] the new end.
      std::uniform_int_distribution<std::size_t> pick(0, adj[end].size() - 1);
      const int x = adj[end][pick(rng)];
      const int i = pos[x];
      if (i < 0 || i >= len - 2) continue;
      std::reverse(path.begin() + i + 1, path.end());
      for (int k = i + 1; k < len; ++k) pos[path[k]] = k;
    }
  }
  return false;
}

// A Hamiltonian graph has no cut vertex.
bool IsBiconnected(const SimpleGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.Neighbors(v);
  std::vector<std::size_t> it(n, 0);
  int timer = 0, root_children = 0;
  std::vector<int> stack = {0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    const int v = stack.back();
    if (it[v] < adj[v].size()) {
      const int w = adj[v][it[v]++];
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      const int p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) return false;
      }
    }
  }
  if (timer < n) return false;
  return root_children <= 1;
}

}  // namespace

SimpleGraph::SimpleGraph(int n)
    : n_(n), words_((n + 63) / 64),
      bits_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0), degree_(n, 0) {
  if (n < 0) throw Error(ErrorCode::kInvalidConfig, "negative vertex count");
}

void SimpleGraph::AddEdge(int u, int v) {
  CheckVertex(*this, u);
  CheckVertex(*this, v);
  if (u == v) throw Error(ErrorCode::kInvalidConfig, "self-loop");
  if (HasEdge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
  ++degree_[u];
  ++degree_[v];
  ++num_edges_;
}

void SimpleGraph::RemoveEdge(int u, int v) {
  if (!HasEdge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
  --degree_[u];
  --degree_[v];
  --num_edges_;
}

bool SimpleGraph::HasEdge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) &
         1;
}

std::vector<int> SimpleGraph::Neighbors(int v) const {
  std::vector<int> out;
  out.reserve(degree_[v]);
  auto row = Row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = row[w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<Edge> SimpleGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < n_; ++u) {
    for (int v : Neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool IsConnectedSpanning(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : g.Neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

HamiltonResult HasHamiltonCycle(const SimpleGraph& g, std::uint64_t budget) {
  const int n = g.num_vertices();
  if (n < 3) return HamiltonResult::kNo;
  for (int v = 0; v < n; ++v) {
    if (g.Degree(v) < 2) return HamiltonResult::kNo;
  }
  // Both edges at a degree-2 vertex are forced, so no vertex can have
  // three degree-2 neighbours.
  for (int v = 0; v < n; ++v) {
    int forced = 0;
    for (int w : g.Neighbors(v)) forced += g.Degree(w) == 2;
    if (forced > 2) return HamiltonResult::kNo;
  }
  if (!IsBiconnected(g)) return HamiltonResult::kNo;
  if (RotationExtensionFinds(g, 4, 2LL * n * n)) return HamiltonResult::kYes;
  return HamiltonSearch(g, budget).Run();
}

DegreeStats ComputeDegreeStats(const SimpleGraph& g,
                               std::span<const int> subset) {
  DegreeStats stats;
  bool first = true;
  for (int v : subset) {
    CheckVertex(g, v);
    int d = g.Degree(v);
    stats.degrees.emplace_back(v, d);
    if (first || d < stats.min) stats.min = d;
    if (first || d > stats.max) stats.max = d;
    first = false;
  }
  return stats;
}

DegreeStats ComputeDegreeStats(const SimpleGraph& g) {
  std::vector<int> all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return ComputeDegreeStats(g, all);
}

Rational MinDegreeRatio(const SimpleGraph& sub, const SimpleGraph& super) {
  if (sub.num_vertices() != super.num_vertices()) {
    throw Error(ErrorCode::kNotSubgraph, "vertex counts differ");
  }
  for (int v = 0; v < sub.num_vertices(); ++v) {
    auto a = sub.Row(v);
    auto b = super.Row(v);
    for (int w = 0; w < sub.words_per_row(); ++w) {
      if (a[w] & ~b[w]) {
        throw Error(ErrorCode::kNotSubgraph,
                    "edge at vertex " + std::to_string(v) +
                        " missing from the supergraph");
      }
    }
  }
  Rational best(1);
  for (int v = 0; v < super.num_vertices(); ++v) {
    if (super.Degree(v) == 0) continue;
    best = std::min(best, Rational(sub.Degree(v), super.Degree(v)));
  }
  return best;
}

void WriteEdgeList(std::ostream& out, const SimpleGraph& g) {
  out << "# n=" << g.num_vertices() << "\n";
  for (const Edge& e : g.Edges()) out << e.u << " " << e.v << "\n";
}

SimpleGraph ReadEdgeList(std::istream& in) {
  std::vector<Edge> edges;
  int n = -1;
  int max_vertex = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (auto pos = line.find("n="); pos != std::string::npos) {
        n = std::stoi(line.substr(pos + 2));
      }
      continue;
    }
    std::istringstream fields(line);
    int u = 0;
    int v = 0;
    if (!(fields >> u >> v) || u < 0 || v < 0) {
      throw Error(ErrorCode::kParseError, "bad edge line: '" + line + "'");
    }
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (n < 0) n = max_vertex + 1;
  if (max_vertex >= n) {
    throw Error(ErrorCode::kParseError, "edge endpoint exceeds declared n");
  }
  SimpleGraph g(n);
  for (const Edge& e : edges) g.AddEdge(e.u, e.v);
  return g;
}

}  // namespace walkbreak
