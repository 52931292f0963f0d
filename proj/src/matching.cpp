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

#include "vckern/matching.hpp"

#include <cassert>
#include <limits>
#include <queue>
#include <stdexcept>

namespace vckern {

void BipartiteGraph::add_edge(int left, int right) {
  if (left < 0 || left >= left_size() || right < 0 || right >= right_size_) {
    throw std::out_of_range("bipartite edge endpoint out of range");
  }
  adjacency_[left].push_back(right);
  ++num_edges_;
}

GraphMatching greedy_maximal_matching(const Graph& g) {
  GraphMatching m;
  m.mate.assign(g.num_vertices(), kUnmatched);
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (m.mate[u] != kUnmatched) continue;
    for (int v : g.neighbors(u)) {
      if (m.mate[v] == kUnmatched) {
        m.mate[u] = v;
        m.mate[v] = u;
        m.edges.emplace_back(u, v);
        break;
      }
    }
  }
  return m;
}

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

// Layered BFS from all free left vertices. Returns true if some free right
// vertex is reachable, i.e. an augmenting path exists.
bool build_layers(const BipartiteGraph& b, const Matching& m, std::vector<int>& dist) {
  std::queue<int> queue;
  for (int u = 0; u < b.left_size(); ++u) {
    if (m.pair_left[u] == kUnmatched) {
      dist[u] = 0;
      queue.push(u);
    } else {
      dist[u] = kInfinity;
    }
  }
  bool found = false;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int r : b.neighbors(u)) {
      const int next = m.pair_right[r];
      if (next == kUnmatched) {
        found = true;
      } else if (dist[next] == kInfinity) {
        dist[next] = dist[u] + 1;
        queue.push(next);
      }
    }
  }
  return found;
}

// Iterative DFS along the layers from free left vertex `root`.
bool augment_from(const BipartiteGraph& b, Matching& m, std::vector<int>& dist,
                  std::vector<std::size_t>& cursor, int root) {
  std::vector<int> path{root};  // left vertices on the current path
  while (!path.empty()) {
    const int u = path.back();
    const auto& adj = b.neighbors(u);
    bool advanced = false;
    while (cursor[u] < adj.size()) {
      const int r = adj[cursor[u]];
      const int next = m.pair_right[r];
      if (next == kUnmatched) {
        // Flip the alternating path ending at free right vertex r.
        int right = r;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
          const int left = *it;
          const int prev_right = m.pair_left[left];
          m.pair_left[left] = right;
          m.pair_right[right] = left;
          right = prev_right;
        }
        ++m.size;
        return true;
      }
      if (dist[next] == dist[u] + 1) {
        path.push_back(next);
        advanced = true;
        break;
      }
      ++cursor[u];
    }
    if (!advanced) {
      dist[u] = kInfinity;
      path.pop_back();
      if (!path.empty()) ++cursor[path.back()];
    }
  }
  return false;
}

}  // namespace

Matching hopcroft_karp(const BipartiteGraph& b) {
  return hopcroft_karp(b, Matching(b.left_size(), b.right_size()));
}

Matching hopcroft_karp(const BipartiteGraph& b, Matching m) {
  assert(static_cast<int>(m.pair_left.size()) == b.left_size());
  assert(static_cast<int>(m.pair_right.size()) == b.right_size());
  std::vector<int> dist(b.left_size());
  std::vector<std::size_t> cursor(b.left_size());
  while (build_layers(b, m, dist)) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int u = 0; u < b.left_size(); ++u) {
      if (m.pair_left[u] == kUnmatched) augment_from(b, m, dist, cursor, u);
    }
  }
  return m;
}

VertexSet even_alternating_reachable(const BipartiteGraph& b, const Matching& m) {
  const int left_n = b.left_size();
  const int right_n = b.right_size();
  std::vector<std::vector<int>> right_adj(right_n);
  for (int u = 0; u < left_n; ++u) {
    for (int r : b.neighbors(u)) right_adj[r].push_back(u);
  }

  VertexSet reached(left_n + right_n);
  std::queue<int> queue;  // ids in the combined numbering
  for (int u = 0; u < left_n; ++u) {
    if (m.pair_left[u] == kUnmatched && reached.insert(u)) queue.push(u);
  }
  for (int r = 0; r < right_n; ++r) {
    if (m.pair_right[r] == kUnmatched && reached.insert(left_n + r)) queue.push(left_n + r);
  }

  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    if (x < left_n) {
      for (int r : b.neighbors(x)) {
        if (r == m.pair_left[x]) continue;
        const int mate = m.pair_right[r];
        if (mate != kUnmatched && reached.insert(mate)) queue.push(mate);
      }
    } else {
      const int y = x - left_n;
      for (int l : right_adj[y]) {
        if (l == m.pair_right[y]) continue;
        const int mate = m.pair_left[l];
        if (mate != kUnmatched && reached.insert(left_n + mate)) queue.push(left_n + mate);
      }
    }
  }
  return reached;
}

}  // namespace vckern
