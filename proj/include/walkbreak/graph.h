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

#ifndef WALKBREAK_GRAPH_H_
#define WALKBREAK_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "walkbreak/numeric.h"

namespace walkbreak {

// Unordered vertex pair, always stored as (min, max).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1 with bitset rows.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  int num_vertices() const { return n_; }
  std::int64_t num_edges() const { return num_edges_; }

  // Self-loops are rejected; adding an existing edge is a no-op.
  void AddEdge(int u, int v);
  void RemoveEdge(int u, int v);
  bool HasEdge(int u, int v) const;
  int Degree(int v) const { return degree_[v]; }
  std::vector<int> Neighbors(int v) const;
  std::vector<Edge> Edges() const;

  int words_per_row() const { return words_; }
  std::span<const std::uint64_t> Row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degree_;
  std::int64_t num_edges_ = 0;
};

// Connected and touching every vertex; the graphs on 0 or 1 vertices count.
bool IsConnectedSpanning(const SimpleGraph& g);

enum class HamiltonResult { kNo, kYes, kUnknown };

inline constexpr std::uint64_t kDefaultHamiltonBudget = 100'000'000;

// Exact backtracking search anchored at vertex 0, extending by the
// lowest-index neighbour first, with degree and connectivity pruning.
// Returns kUnknown only when more than `budget` nodes were expanded.
HamiltonResult HasHamiltonCycle(const SimpleGraph& g,
                                std::uint64_t budget = kDefaultHamiltonBudget);

struct DegreeStats {
  int min = 0;
  int max = 0;
  std::vector<std::pair<int, int>> degrees;  // (vertex, degree)
};

DegreeStats ComputeDegreeStats(const SimpleGraph& g,
                               std::span<const int> subset);
DegreeStats ComputeDegreeStats(const SimpleGraph& g);

// min over v with d_super(v) > 0 of d_sub(v) / d_super(v); 1 when no vertex
// qualifies. Throws kNotSubgraph unless sub is an edge-subgraph of super.
Rational MinDegreeRatio(const SimpleGraph& sub, const SimpleGraph& super);

// Edge-list text: optional "# n=<count>" line, then "u v" per line.
void WriteEdgeList(std::ostream& out, const SimpleGraph& g);
SimpleGraph ReadEdgeList(std::istream& in);

}  // namespace walkbreak

#endif  // WALKBREAK_GRAPH_H_
