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

#include "vckern/search.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "vckern/matching.hpp"

namespace vckern {

CliqueCover clique_cover(const Graph& g) { return clique_cover(g, g.all_vertices()); }

CliqueCover clique_cover(const Graph& g, const VertexSet& active) {
  const int n = g.num_vertices();
  std::vector<int> order = active.to_vector();
  std::vector<int> degree(n, 0);
  for (int v : order) {
    for (int u : g.neighbors(v)) degree[v] += active.contains(u) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });

  CliqueCover cover;
  std::vector<int> clique_of(n, -1);
  std::vector<int> hits;  // per clique: neighbors of the current vertex in it
  std::vector<int> touched;
  for (int v : order) {
    for (int u : g.neighbors(v)) {
      const int c = clique_of[u];
      if (c < 0) continue;
      if (hits[c]++ == 0) touched.push_back(c);
    }
    int target = -1;
    for (int c : touched) {
      if (hits[c] == static_cast<int>(cover.cliques[c].size()) && (target < 0 || c < target)) {
        target = c;
      }
    }
    for (int c : touched) hits[c] = 0;
    touched.clear();
    if (target < 0) {
      target = static_cast<int>(cover.cliques.size());
      cover.cliques.emplace_back();
      hits.push_back(0);
    }
    cover.cliques[target].push_back(v);
    clique_of[v] = target;
  }
  return cover;
}

int lower_bound(const Graph& g) { return lower_bound(g, g.all_vertices()); }

int lower_bound(const Graph& g, const VertexSet& active) {
  return active.size() - static_cast<int>(clique_cover(g, active).cliques.size());
}

VertexSet greedy_cover(const Graph& g) {
  VertexSet cover(g.num_vertices());
  for (auto [u, v] : greedy_maximal_matching(g).edges) {
    cover.insert(u);
    cover.insert(v);
  }
  return cover;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const SearchLimits& limits)
      : g_(g),
        limits_(limits),
        cap_(limits.stop_below ? *limits.stop_below + 1 : std::numeric_limits<int>::max()) {}

  SearchOutcome run() {
    SearchOutcome out;
    best_ = greedy_cover(g_);
    out.lower_bound_at_root = lower_bound(g_);
    if (limits_.node_limit && *limits_.node_limit <= 0) {
      out.cover = best_;
      out.proven_lower_bound = out.lower_bound_at_root;
      return out;
    }
    visit(g_.all_vertices());
    const bool exhausted = !aborted_ && !stopped_;
    out.cover = std::move(best_);
    out.nodes_explored = nodes_;
    out.optimal = exhausted && out.cover.size() <= cap_;
    if (out.optimal) {
      out.proven_lower_bound = out.cover.size();
    } else if (exhausted) {
      out.proven_lower_bound = cap_;
    } else {
      out.proven_lower_bound = out.lower_bound_at_root;
    }
    return out;
  }

 private:
  bool take_branch() {
    if (limits_.node_limit && nodes_ >= *limits_.node_limit) {
      aborted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  void visit(VertexSet active) {
    int pick = -1;
    int pick_degree = 0;
    std::vector<int> isolated;
    for (int v : active) {
      int d = 0;
      for (int u : g_.neighbors(v)) d += active.contains(u) ? 1 : 0;
      if (d == 0) {
        isolated.push_back(v);
      } else if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    for (int v : isolated) active.erase(v);

    const int partial = static_cast<int>(chosen_.size());
    if (active.empty()) {
      if (partial < best_.size()) {
        best_ = VertexSet(g_.num_vertices(), chosen_);
        if (limits_.stop_below && best_.size() < *limits_.stop_below) stopped_ = true;
      }
      return;
    }
    const int bound = limits_.bound == BoundKind::kCliqueCover ? lower_bound(g_, active) : 0;
    if (partial + bound >= std::min(best_.size(), cap_)) return;
    // Only reachable at the root: the greedy incumbent is already good enough.
    if (limits_.stop_below && best_.size() < *limits_.stop_below) {
      stopped_ = true;
      return;
    }

    // Left: pick joins the cover.
    if (!take_branch()) return;
    chosen_.push_back(pick);
    VertexSet left = active;
    left.erase(pick);
    visit(std::move(left));
    chosen_.pop_back();
    if (aborted_ || stopped_) return;

    // Right: pick stays out, so all of its remaining neighbors join.
    if (!take_branch()) return;
    VertexSet right = std::move(active);
    right.erase(pick);
    for (int u : g_.neighbors(pick)) {
      if (right.erase(u)) chosen_.push_back(u);
    }
    visit(std::move(right));
    chosen_.resize(partial);
  }

  const Graph& g_;
  SearchLimits limits_;
  int cap_;
  std::vector<int> chosen_;
  VertexSet best_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  bool stopped_ = false;
};

}  // namespace

SearchOutcome branch_and_bound_vc(const Graph& g, const SearchLimits& limits) {
  return BranchAndBound(g, limits).run();
}

VertexSet brute_force_min_vc(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 24) {
    throw std::invalid_argument("brute_force_min_vc supports n <= 24, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;
  }
  auto covers = [&](std::uint32_t mask) {
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1u) && (adj[v] & ~mask)) return false;
    }
    return true;
  };
  for (int size = 0; size <= n; ++size) {
    // Combinations of `size` indices in lexicographic order.
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int v : idx) mask |= std::uint32_t{1} << v;
      if (covers(mask)) return VertexSet(n, idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return g.all_vertices();
}

}  // namespace vckern
