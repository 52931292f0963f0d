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

// Vertex cover kernels.
//
// Three reductions live here. The Buss rule forces high-degree vertices and
// discards isolated ones; it keeps every cover of size <= k. The crown rule
// moves the head W of a crown into the cover and drops its independent side
// I; it keeps at least one minimum cover but may lose others. Rigid crowns
// are the crowns whose head is the unique minimum cover of G[W u I], so
// removing them keeps every minimum cover.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vckern/graph.hpp"
#include "vckern/matching.hpp"
#include "vckern/vertex_set.hpp"

namespace vckern {

/// Partition (H, F, R, I) of the input vertices.
///
/// `forced` lies in every retained solution, `restricted` in none,
/// `indifferent` vertices never matter, and `residual` is what is left.
struct LosslessPartition {
  SubgraphView residual;
  VertexSet forced;
  VertexSet restricted;
  VertexSet indifferent;
  /// Set when no cover within the budget exists.
  bool infeasible = false;
  /// Budget left once the forced vertices are paid for (Buss only).
  int remaining_budget = 0;
};

/// Crown (H, W, I): I independent, no I-H edges, `matching` pairs every
/// head vertex with a distinct crown vertex.
struct CrownDecomposition {
  VertexSet rest;   // H
  VertexSet head;   // W
  VertexSet crown;  // I
  std::vector<Edge> matching;  // (w, i) pairs
};

struct CrownResult {
  std::optional<CrownDecomposition> crown;
  bool infeasible = false;
};

/// Outcome of removing crowns until none is left.
struct CrownReduction {
  SubgraphView residual;
  VertexSet head;     // union of all heads, goes into the cover
  VertexSet removed;  // union of crown sides and stripped isolated vertices
  bool infeasible = false;
};

/// Buss kernel with budget k, iterated to a fixpoint.
LosslessPartition buss_kernel(const Graph& g, int k);

/// One crown from a greedy maximal matching. Returns no crown when the
/// unmatched side is saturated by a maximum matching. Isolated vertices are
/// tolerated and end up in the crown side.
CrownResult crown_kernel(const Graph& g, int k);

/// Applies crown_kernel until it returns none, stripping isolated vertices
/// between rounds and charging each head against the budget.
CrownReduction reduce_crowns(const Graph& g, int k);

/// B_G: left and right copies of every vertex; edge {u,v} becomes
/// (u_l, v_r) and (v_l, u_r).
BipartiteGraph build_double_graph(const Graph& g);

/// One rigid-crown extraction: R = {v : v_l, v_r both even-alternating
/// reachable in B_G}, F = N(R). `indifferent` is always empty.
LosslessPartition rigid_crown_pass(const Graph& g);

/// Rigid-crown kernel, repeated on its own residual until nothing is found.
LosslessPartition rigid_crown_kernel(const Graph& g);

}  // namespace vckern
