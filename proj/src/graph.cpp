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

#include "vckern/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vckern {

Graph::Graph(int n, std::span<const Edge> edges, int* dropped) : adjacency_(n) {
  int discarded = 0;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") outside vertex range 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      ++discarded;
      continue;
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::size_t half_edges = 0;
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    half_edges += adj.size();
  }
  num_edges_ = static_cast<int>(half_edges / 2);
  discarded += static_cast<int>(edges.size()) - discarded - num_edges_;
  if (dropped != nullptr) *dropped = discarded;
}

bool Graph::has_edge(int u, int v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& w) {
  VertexSet out(g.num_vertices());
  for (int v : w) {
    for (int u : g.neighbors(v)) out.insert(u);
  }
  return out;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (s.contains(u)) continue;
    for (int v : g.neighbors(u)) {
      if (!s.contains(v)) return false;
    }
  }
  return true;
}

VertexSet non_isolated(const Graph& g) {
  VertexSet out(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) out.insert(v);
  }
  return out;
}

SubgraphView::SubgraphView(const Graph& parent, VertexSet selected)
    : parent_(&parent),
      selected_(std::move(selected)),
      parent_to_local_(parent.num_vertices(), -1) {
  local_to_parent_.reserve(selected_.size());
  for (int v : selected_) {
    parent_to_local_[v] = static_cast<int>(local_to_parent_.size());
    local_to_parent_.push_back(v);
  }
  std::vector<Edge> local_edges;
  for (int lu = 0; lu < static_cast<int>(local_to_parent_.size()); ++lu) {
    for (int v : parent.neighbors(local_to_parent_[lu])) {
      const int lv = parent_to_local_[v];
      if (lv > lu) local_edges.emplace_back(lu, lv);
    }
  }
  local_ = Graph(static_cast<int>(local_to_parent_.size()), local_edges);
}

VertexSet SubgraphView::lift(const VertexSet& local) const {
  VertexSet out(parent_->num_vertices());
  for (int v : local) out.insert(local_to_parent_[v]);
  return out;
}

VertexSet SubgraphView::restrict(const VertexSet& parent_set) const {
  VertexSet out(num_vertices());
  for (int v : parent_set) {
    const int l = parent_to_local_[v];
    if (l >= 0) out.insert(l);
  }
  return out;
}

}  // namespace vckern
