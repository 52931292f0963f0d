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

#include "vckern/kernel.hpp"

#include <cassert>
#include <cstdint>
#include <queue>

namespace vckern {

LosslessPartition buss_kernel(const Graph& g, int k) {
  const int n = g.num_vertices();
  LosslessPartition out;
  out.forced = VertexSet(n);
  out.restricted = VertexSet(n);
  out.indifferent = VertexSet(n);

  VertexSet alive = g.all_vertices();
  std::vector<int> degree(n);
  // Max-heap on (degree, -index): highest degree first, lowest index on ties.
  std::priority_queue<std::pair<int, int>> heap;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    heap.emplace(degree[v], -v);
  }

  int budget = k;
  while (!heap.empty()) {
    const auto [d, neg_v] = heap.top();
    const int v = -neg_v;
    if (!alive.contains(v) || d != degree[v]) {
      heap.pop();
      continue;
    }
    if (d <= budget) break;
    heap.pop();
    alive.erase(v);
    out.forced.insert(v);
    --budget;
    for (int u : g.neighbors(v)) {
      if (!alive.contains(u)) continue;
      --degree[u];
      heap.emplace(degree[u], -u);
    }
    if (budget < 0) break;
  }

  std::int64_t residual_edges = 0;
  for (int v : alive) {
    if (degree[v] == 0) {
      out.indifferent.insert(v);
    } else {
      residual_edges += degree[v];
    }
  }
  residual_edges /= 2;
  alive -= out.indifferent;

  out.remaining_budget = budget;
  out.infeasible = budget < 0 || residual_edges > static_cast<std::int64_t>(budget) * budget;
  out.residual = SubgraphView(g, std::move(alive));
  return out;
}

CrownResult crown_kernel(const Graph& g, int k) {
  const int n = g.num_vertices();
  CrownResult result;
  const GraphMatching m1 = greedy_maximal_matching(g);
  if (m1.size() > k) {
    result.infeasible = true;
    return result;
  }

  // Bipartite graph: unmatched vertices O (left) against N(O) (right).
  std::vector<int> left_ids;
  std::vector<int> right_of(n, -1);
  std::vector<int> right_ids;
  for (int v = 0; v < n; ++v) {
    if (!m1.is_matched(v)) left_ids.push_back(v);
  }
  for (int v : left_ids) {
    for (int u : g.neighbors(v)) {
      if (right_of[u] < 0) {
        right_of[u] = static_cast<int>(right_ids.size());
        right_ids.push_back(u);
      }
    }
  }
  BipartiteGraph b(static_cast<int>(left_ids.size()), static_cast<int>(right_ids.size()));
  for (int i = 0; i < static_cast<int>(left_ids.size()); ++i) {
    for (int u : g.neighbors(left_ids[i])) b.add_edge(i, right_of[u]);
  }
  const Matching m2 = hopcroft_karp(b);

  VertexSet crown(n);
  std::vector<int> frontier;
  for (int i = 0; i < b.left_size(); ++i) {
    if (m2.pair_left[i] == kUnmatched) {
      crown.insert(left_ids[i]);
      frontier.push_back(left_ids[i]);
    }
  }
  if (crown.empty()) return result;

  // Grow I by the partners of N(I) until closed.
  VertexSet head(n);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int w : g.neighbors(v)) {
        if (!head.insert(w)) continue;
        const int partner = m2.pair_right[right_of[w]];
        assert(partner != kUnmatched);
        const int i = left_ids[partner];
        if (crown.insert(i)) next.push_back(i);
      }
    }
    frontier = std::move(next);
  }

  CrownDecomposition c;
  c.crown = std::move(crown);
  c.head = std::move(head);
  c.rest = (c.crown | c.head).complement();
  for (int w : c.head) c.matching.emplace_back(w, left_ids[m2.pair_right[right_of[w]]]);
  result.crown = std::move(c);
  return result;
}

CrownReduction reduce_crowns(const Graph& g, int k) {
  const int n = g.num_vertices();
  CrownReduction out;
  out.head = VertexSet(n);
  out.removed = VertexSet(n);
  VertexSet alive = g.all_vertices();
  int budget = k;

  while (true) {
    for (int v : alive) {
      bool isolated = true;
      for (int u : g.neighbors(v)) {
        if (alive.contains(u)) {
          isolated = false;
          break;
        }
      }
      if (isolated) out.removed.insert(v);
    }
    alive -= out.removed;
    if (alive.empty()) break;

    const SubgraphView sub(g, alive);
    const CrownResult cr = crown_kernel(sub.graph(), budget);
    if (cr.infeasible) {
      out.infeasible = true;
      break;
    }
    if (!cr.crown) break;
    const VertexSet head = sub.lift(cr.crown->head);
    const VertexSet crown = sub.lift(cr.crown->crown);
    budget -= head.size();
    out.head |= head;
    out.removed |= crown;
    alive -= head;
    alive -= crown;
    if (budget < 0) {
      out.infeasible = true;
      break;
    }
  }
  out.residual = SubgraphView(g, std::move(alive));
  return out;
}

BipartiteGraph build_double_graph(const Graph& g) {
  BipartiteGraph b(g.num_vertices(), g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int u : g.neighbors(v)) b.add_edge(v, u);
  }
  return b;
}

LosslessPartition rigid_crown_pass(const Graph& g) {
  const int n = g.num_vertices();
  const BipartiteGraph b = build_double_graph(g);
  const Matching m = hopcroft_karp(b);
  const VertexSet reach = even_alternating_reachable(b, m);

  LosslessPartition out;
  out.restricted = VertexSet(n);
  out.indifferent = VertexSet(n);
  for (int v = 0; v < n; ++v) {
    if (reach.contains(v) && reach.contains(n + v)) out.restricted.insert(v);
  }
  out.forced = neighborhood(g, out.restricted);
  assert(!out.forced.intersects(out.restricted));
  out.residual = SubgraphView(g, (out.forced | out.restricted).complement());
  return out;
}

LosslessPartition rigid_crown_kernel(const Graph& g) {
  const int n = g.num_vertices();
  LosslessPartition out;
  out.forced = VertexSet(n);
  out.restricted = VertexSet(n);
  out.indifferent = VertexSet(n);
  VertexSet alive = g.all_vertices();
  while (!alive.empty()) {
    const SubgraphView sub(g, alive);
    const LosslessPartition pass = rigid_crown_pass(sub.graph());
    if (pass.forced.empty() && pass.restricted.empty()) break;
    const VertexSet forced = sub.lift(pass.forced);
    const VertexSet restricted = sub.lift(pass.restricted);
    out.forced |= forced;
    out.restricted |= restricted;
    alive -= forced;
    alive -= restricted;
  }
  out.residual = SubgraphView(g, std::move(alive));
  return out;
}

}  // namespace vckern
