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

#include <cstdint>
#include <optional>
#include <vector>

#include "vckern/graph.hpp"
#include "vckern/vertex_set.hpp"

namespace vckern {

struct CliqueCover {
  std::vector<std::vector<int>> cliques;
};

/// Greedy clique cover: vertices by descending degree (ties by index), each
/// joining the first clique it is fully adjacent to.
CliqueCover clique_cover(const Graph& g);
/// Clique cover of G[active]; vertices outside `active` are ignored.
CliqueCover clique_cover(const Graph& g, const VertexSet& active);

/// |V| - |T| for the greedy clique cover T.
int lower_bound(const Graph& g);
int lower_bound(const Graph& g, const VertexSet& active);

/// Both endpoints of every edge of a greedy maximal matching.
VertexSet greedy_cover(const Graph& g);

enum class BoundKind { kCliqueCover, kTrivial };

struct SearchLimits {
  /// Maximum number of branches taken; nullopt means unlimited.
  std::optional<std::int64_t> node_limit;
  /// Stop as soon as a cover strictly smaller than this is known.
  std::optional<int> stop_below;
  BoundKind bound = BoundKind::kCliqueCover;
};

struct SearchOutcome {
  VertexSet cover;
  /// The tree was exhausted and `cover` is a minimum cover.
  bool optimal = false;
  std::int64_t nodes_explored = 0;
  int lower_bound_at_root = 0;
  /// A proven lower bound on the minimum cover size. Equals |cover| when
  /// optimal; with stop_below set, an exhausted search that found nothing
  /// below the threshold proves stop_below + 1.
  int proven_lower_bound = 0;
};

/// Depth-first branch and bound. Left branch takes the max-degree vertex v,
/// right branch takes N(v). Every branch taken counts as one node.
SearchOutcome branch_and_bound_vc(const Graph& g, const SearchLimits& limits = {});

/// Exact minimum cover by enumeration, lexicographically smallest among the
/// minima. Throws std::invalid_argument when n > 24.
VertexSet brute_force_min_vc(const Graph& g);

}  // namespace vckern
