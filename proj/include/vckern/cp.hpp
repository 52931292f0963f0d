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

// A deliberately small constraint-programming substrate.
//
// The model has exactly one set variable S over the vertices of a graph and
// one integer variable K, plus auxiliary integer intervals that constraints
// may allocate for their own bookkeeping. Constraints are propagators that
// only ever shrink domains. The search minimizes K by depth-first branch and
// bound, restoring domains from per-node snapshots on backtrack.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vckern/graph.hpp"
#include "vckern/vertex_set.hpp"

namespace vckern {

struct IntDomain {
  int min = 0;
  int max = 0;

  bool empty() const { return min > max; }
  bool fixed() const { return min == max; }
  bool contains(int v) const { return min <= v && v <= max; }
  friend bool operator==(const IntDomain&, const IntDomain&) = default;
};

/// Set-variable domain: every value s satisfies lb <= s <= ub (as sets) and
/// card_min <= |s| <= card_max.
struct SetDomain {
  VertexSet lb;
  VertexSet ub;
  int card_min = 0;
  int card_max = 0;

  SetDomain() = default;
  explicit SetDomain(int n) : lb(n), ub(VertexSet::full(n)), card_min(0), card_max(n) {}

  VertexSet undecided() const { return ub - lb; }
  bool consistent() const {
    return lb.is_subset_of(ub) && lb.size() <= card_max && card_min <= card_max &&
           ub.size() >= card_min;
  }
  friend bool operator==(const SetDomain&, const SetDomain&) = default;
};

/// Domains of one search node. Every mutator returns false, and sets the
/// failure flag, when it empties a domain; after failure all mutators are
/// no-ops returning false.
class PropagationState {
 public:
  PropagationState() = default;
  PropagationState(int n, IntDomain k) : set_(n), k_(k) {}
  PropagationState(SetDomain s, IntDomain k) : set_(std::move(s)), k_(k) {}

  const SetDomain& set() const { return set_; }
  const IntDomain& k() const { return k_; }
  const IntDomain& aux(int i) const { return aux_[i]; }
  int num_vertices() const { return set_.ub.universe(); }

  bool failed() const { return failed_; }
  bool fail() {
    failed_ = true;
    return false;
  }
  /// Bumped on every effective domain change.
  std::uint64_t version() const { return version_; }

  bool include(int v);
  bool exclude(int v);
  bool include_all(const VertexSet& vs);
  bool exclude_all(const VertexSet& vs);
  bool set_card_min(int c);
  bool set_card_max(int c);
  bool set_k_min(int c);
  bool set_k_max(int c);

  /// Allocates an auxiliary interval and returns its index.
  int add_aux(IntDomain d);
  bool set_aux_min(int i, int c);
  bool set_aux_max(int i, int c);

 private:
  bool check();

  SetDomain set_;
  IntDomain k_;
  std::vector<IntDomain> aux_;
  std::uint64_t version_ = 0;
  bool failed_ = false;
};

class Constraint {
 public:
  virtual ~Constraint() = default;
  /// Shrinks domains; returns false on inconsistency.
  virtual bool propagate(PropagationState& state) = 0;
  virtual std::string_view name() const = 0;
};

/// Runs every constraint whose inputs changed since its last run until no
/// constraint changes anything. Returns false on failure.
bool fixpoint(std::span<Constraint* const> constraints, PropagationState& state);

/// Channels |S| = K: cardinality bounds, K bounds and |lb(S)|, |ub(S)|.
/// Minimizing K makes this equivalent to |S| <= K at the optimum.
class CardinalityConstraint final : public Constraint {
 public:
  bool propagate(PropagationState& state) override;
  std::string_view name() const override { return "cardinality"; }
};

/// Unit propagation of u in S or v in S over every edge.
class EdgeClauseConstraint final : public Constraint {
 public:
  explicit EdgeClauseConstraint(const Graph& g) : g_(g) {}
  bool propagate(PropagationState& state) override;
  std::string_view name() const override { return "edge-clauses"; }

 private:
  const Graph& g_;
};

/// max_i |S n s_i| - min_i |S n s_i| <= b, bounds reasoning on part counts.
class BalanceConstraint final : public Constraint {
 public:
  /// `parts` must partition the vertex universe of `state`.
  BalanceConstraint(PropagationState& state, std::vector<VertexSet> parts, int tolerance);
  bool propagate(PropagationState& state) override;
  std::string_view name() const override { return "balance"; }

  const std::vector<VertexSet>& parts() const { return parts_; }
  int tolerance() const { return tolerance_; }

 private:
  std::vector<VertexSet> parts_;
  std::vector<int> counters_;
  int tolerance_;
};

/// A root state plus the constraints posted on it.
class Model {
 public:
  Model(const Graph& g, IntDomain k) : graph_(&g), root_(g.num_vertices(), k) {}

  const Graph& graph() const { return *graph_; }
  PropagationState& root() { return root_; }
  const PropagationState& root() const { return root_; }

  Constraint& post(std::unique_ptr<Constraint> c);
  std::vector<Constraint*> constraints() const;

 private:
  const Graph* graph_;
  PropagationState root_;
  std::vector<std::unique_ptr<Constraint>> constraints_;
};

Constraint& post_cardinality(Model& model);
Constraint& post_edge_clauses(Model& model);
Constraint& post_balance(Model& model, std::vector<VertexSet> parts, int tolerance);

struct SearchConfig {
  std::optional<double> time_limit_s;
  std::optional<std::int64_t> node_limit;
};

struct Improvement {
  int size = 0;
  std::int64_t nodes = 0;
  double seconds = 0.0;
};

struct SearchResult {
  std::optional<VertexSet> best;
  /// Search space exhausted: `best` is optimal, or the model is infeasible.
  bool complete = false;
  std::int64_t nodes = 0;
  std::int64_t nodes_to_best = 0;
  double time_to_best_s = 0.0;
  double total_time_s = 0.0;
  std::vector<Improvement> trace;
};

/// Depth-first branch and bound minimizing K. Branches on the undecided
/// vertex of maximum degree in the graph (lowest index on ties), inclusion
/// first. After each solution, K.max is set below its size for the rest of
/// the search. Every branch taken counts as one node.
SearchResult minimize_search(Model& model, const SearchConfig& config = {});

}  // namespace vckern
