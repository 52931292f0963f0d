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

#include <span>
#include <utility>
#include <vector>

#include "vckern/vertex_set.hpp"

namespace vckern {

using Edge = std::pair<int, int>;

/// Undirected simple graph over vertices 0..n-1.
///
/// Adjacency lists are sorted ascending, symmetric, and free of self-loops and
/// duplicates. A Graph never changes after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adjacency_(n) {}

  /// Builds a graph from an arbitrary edge list. Self-loops and duplicate
  /// edges (in either orientation) are dropped; `dropped`, when given,
  /// receives how many input edges were discarded.
  /// Throws std::out_of_range for endpoints outside 0..n-1.
  Graph(int n, std::span<const Edge> edges, int* dropped = nullptr);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(int u, int v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const { return VertexSet::full(num_vertices()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  int num_edges_ = 0;
};

/// N(W): the union of the open neighborhoods of the members of W.
VertexSet neighborhood(const Graph& g, const VertexSet& w);

/// True iff every edge of g has an endpoint in s.
bool is_vertex_cover(const Graph& g, const VertexSet& s);

/// Induced subgraph G[W] with compact local ids.
///
/// Local vertex i corresponds to the i-th smallest member of the selection.
/// The view keeps a pointer to its parent, which must outlive it.
class SubgraphView {
 public:
  SubgraphView() = default;
  SubgraphView(const Graph& parent, VertexSet selected);

  const Graph& parent() const { return *parent_; }
  const Graph& graph() const { return local_; }
  const VertexSet& selected() const { return selected_; }
  int num_vertices() const { return local_.num_vertices(); }

  int to_parent(int local) const { return local_to_parent_[local]; }
  /// -1 when the parent vertex is not selected.
  int to_local(int parent) const { return parent_to_local_[parent]; }

  /// Maps a set over local ids to the parent's universe.
  VertexSet lift(const VertexSet& local) const;
  /// Maps the selected part of a parent set to local ids.
  VertexSet restrict(const VertexSet& parent_set) const;

 private:
  const Graph* parent_ = nullptr;
  VertexSet selected_;
  std::vector<int> local_to_parent_;
  std::vector<int> parent_to_local_;
  Graph local_;
};

inline SubgraphView induced_subgraph(const Graph& g, VertexSet w) {
  return SubgraphView(g, std::move(w));
}

/// Vertices of g with at least one neighbor.
VertexSet non_isolated(const Graph& g);

}  // namespace vckern
