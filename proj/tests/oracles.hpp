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

// Exhaustive reference computations for small graphs. Nothing here calls the
// library's algorithms; sets are plain uint32 masks.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vckern/graph.hpp"
#include "vckern/vertex_set.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }

inline Mask to_mask(const vckern::VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

inline vckern::VertexSet to_set(int n, Mask m) {
  vckern::VertexSet s(n);
  for (int v = 0; v < n; ++v) {
    if (m & bit(v)) s.insert(v);
  }
  return s;
}

/// Adjacency masks, built from the edge list only.
inline std::vector<Mask> adjacency(const vckern::Graph& g) {
  const int n = g.num_vertices();
  if (n > 20) throw std::invalid_argument("oracle graphs are limited to 20 vertices");
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

inline bool covers(const std::vector<Mask>& adj, Mask c) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!(c & bit(static_cast<int>(v))) && (adj[v] & ~c)) return false;
  }
  return true;
}

/// Every vertex cover of g.
inline std::vector<Mask> all_covers(const vckern::Graph& g) {
  const auto adj = adjacency(g);
  const Mask limit = Mask{1} << g.num_vertices();
  std::vector<Mask> out;
  for (Mask c = 0; c < limit; ++c) {
    if (covers(adj, c)) out.push_back(c);
  }
  return out;
}

inline int min_vc(const vckern::Graph& g) {
  int best = g.num_vertices();
  for (Mask c : all_covers(g)) best = std::min(best, popcount(c));
  return best;
}

inline std::vector<Mask> minimum_covers(const vckern::Graph& g) {
  const auto all = all_covers(g);
  const int best = min_vc(g);
  std::vector<Mask> out;
  for (Mask c : all) {
    if (popcount(c) == best) out.push_back(c);
  }
  return out;
}

/// Smallest cover C with lb <= C <= ub, if any.
inline std::optional<int> domain_min(const vckern::Graph& g, Mask lb, Mask ub) {
  const auto adj = adjacency(g);
  std::optional<int> best;
  // Enumerate subsets of ub that contain lb.
  const Mask free = ub & ~lb;
  Mask sub = free;
  while (true) {
    const Mask c = lb | sub;
    if (covers(adj, c) && (!best || popcount(c) < *best)) best = popcount(c);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return best;
}

inline bool balanced(Mask c, const std::vector<Mask>& parts, int b) {
  int lo = 1 << 30;
  int hi = -1;
  for (Mask p : parts) {
    const int k = popcount(c & p);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  return hi - lo <= b;
}

/// Minimum balanced cover size, or nullopt when none exists.
inline std::optional<int> balanced_min_vc(const vckern::Graph& g, const std::vector<Mask>& parts,
                                          int b) {
  std::optional<int> best;
  for (Mask c : all_covers(g)) {
    if (balanced(c, parts, b) && (!best || popcount(c) < *best)) best = popcount(c);
  }
  return best;
}

/// Maximum bipartite matching by exhaustive DP over used right vertices.
/// adj[l] is a mask over the right side; right side <= 16.
inline int max_matching(const std::vector<Mask>& adj, int right_size) {
  const Mask full = Mask{1} << right_size;
  std::vector<int> best(full, -1);
  best[0] = 0;
  for (Mask left_adj : adj) {
    std::vector<int> next = best;
    for (Mask used = 0; used < full; ++used) {
      if (best[used] < 0) continue;
      Mask options = left_adj & ~used;
      while (options) {
        const Mask r = options & (~options + 1);
        options ^= r;
        next[used | r] = std::max(next[used | r], best[used] + 1);
      }
    }
    best = std::move(next);
  }
  return *std::max_element(best.begin(), best.end());
}

}  // namespace oracle
