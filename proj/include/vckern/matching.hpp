// Copyright 2026 The vckern Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "vckern/graph.hpp"
#include "vckern/vertex_set.hpp"

namespace vckern {

inline constexpr int kUnmatched = -1;

/// Bipartite graph with sides 0..left_size-1 and 0..right_size-1.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left_size, int right_size)
      : right_size_(right_size), adjacency_(left_size) {}

  /// Neighbor lists are kept in insertion order; callers add in ascending
  /// order when they need deterministic tie-breaking.
  void add_edge(int left, int right);

  int left_size() const { return static_cast<int>(adjacency_.size()); }
  int right_size() const { return right_size_; }
  int num_edges() const { return num_edges_; }
  const std::vector<int>& neighbors(int left) const { return adjacency_[left]; }

 private:
  int right_size_ = 0;
  int num_edges_ = 0;
  std::vector<std::vector<int>> adjacency_;
};

struct Matching {
  std::vector<int> pair_left;   // left -> right or kUnmatched
  std::vector<int> pair_right;  // right -> left or kUnmatched
  int size = 0;

  Matching() = default;
  Matching(int left_size, int right_size)
      : pair_left(left_size, kUnmatched), pair_right(right_size, kUnmatched) {}

  void match(int left, int right) {
    pair_left[left] = right;
    pair_right[right] = left;
    ++size;
  }
};

/// Matching in a general graph: mate[v] is v's partner or kUnmatched.
struct GraphMatching {
  std::vector<int> mate;
  std::vector<Edge> edges;  // (u, mate[u]) with u < mate[u], in discovery order

  int size() const { return static_cast<int>(edges.size()); }
  bool is_matched(int v) const { return mate[v] != kUnmatched; }
};

/// Maximal matching by scanning vertices ascending, then neighbors ascending.
GraphMatching greedy_maximal_matching(const Graph& g);

/// Maximum-cardinality matching by Hopcroft-Karp.
Matching hopcroft_karp(const BipartiteGraph& b);
/// Same, augmenting from `warm_start` (which must be a matching of b).
Matching hopcroft_karp(const BipartiteGraph& b, Matching warm_start);

/// Vertices reachable from an M-unmatched vertex along an M-alternating path
/// of even length (unmatched vertices included). Left vertex i is member i of
/// the result; right vertex j is member left_size() + j.
VertexSet even_alternating_reachable(const BipartiteGraph& b, const Matching& m);

}  // namespace vckern
