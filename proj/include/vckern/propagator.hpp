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

// The VertexCover(G, K, S) global constraint: |S| <= K and S covers G.
//
// One propagation call runs these stages in order:
//
//   1. Every neighbor of an excluded vertex joins lb(S).
//   2. Buss kernel of the undecided subgraph, budget ub(K) - |lb(S)|.
//   3. Unless the cached witness still proves a cover below ub(K): crown
//      reduction of the Buss residual, then a node-limited branch and bound
//      on what remains. Its outcome yields a new witness and a lower bound
//      on the cover size, which is pushed into lb(K).
//   4. If that bound meets ub(K), every consistent cover is minimum, so the
//      rigid-crown kernel of the undecided subgraph restricts ub(S).
//      Otherwise, with an optimal witness and a gap of at most 2, witness
//      pruning forces vertices that no small cover can omit.
//   5. Forced vertices from the kernels join lb(S).
//
// The five method variants switch stages off; see MethodConfig.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "vckern/cp.hpp"
#include "vckern/graph.hpp"
#include "vckern/vertex_set.hpp"

namespace vckern {

enum class Method {
  kDecomposition,  // edge clauses + cardinality, no global constraint
  kCliqueCover,    // Buss + clique-cover bound only
  kKernelPruning,  // + crowns and rigid crowns, no witness search
  kKernelWitness,  // + witness search for lb(K)
  kFull,           // + witness pruning
};

inline constexpr std::int64_t kDefaultLambda = 5000;

struct MethodConfig {
  Method method = Method::kFull;
  std::int64_t lambda = kDefaultLambda;

  /// Canonical configuration: lambda is forced to 0 for the variants that
  /// never search, and defaults to kDefaultLambda otherwise.
  static MethodConfig make(Method m, std::optional<std::int64_t> lambda = std::nullopt);

  bool uses_crowns() const { return method >= Method::kKernelPruning; }
  bool uses_rigid_crowns() const { return method >= Method::kKernelPruning; }
  bool uses_witness_pruning() const { return method == Method::kFull; }
};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// A vertex cover of the whole graph cached between propagation calls.
struct Witness {
  VertexSet cover;
  /// `cover` was minimum among covers consistent with the domain it was
  /// computed under.
  bool optimal = false;
  /// Lower bound on |C| for every cover C consistent with that domain.
  int size_bound = 0;
  VertexSet lb_snapshot;
  VertexSet ub_snapshot;

  static Witness initial(int n);

  /// True when `d` is a subdomain of the one the witness was computed under,
  /// so that `size_bound` still holds.
  bool valid_for(const SetDomain& d) const {
    return lb_snapshot.universe() == d.lb.universe() && lb_snapshot.is_subset_of(d.lb) &&
           d.ub.is_subset_of(ub_snapshot);
  }
};

/// What one propagation call did, for tests and statistics.
struct PropagationReport {
  bool consistent = true;
  bool witness_recomputed = false;
  /// Cover-size lower bound derived this call (stage 3), if any.
  std::optional<int> size_lower_bound;
  bool rigid_applied = false;
  bool witness_pruning_applied = false;
  VertexSet buss_forced;
  VertexSet rigid_forced;
  VertexSet rigid_restricted;
  VertexSet witness_forced;
  std::int64_t search_nodes = 0;
};

/// One call of the VertexCover propagator on `state`. `cfg.method` must not
/// be kDecomposition. `witness` is read and updated.
PropagationReport propagate_vertex_cover(PropagationState& state, const Graph& g,
                                         const MethodConfig& cfg, Witness& witness);

/// Convenience overload over bare domains; they are left untouched when the
/// call reports an inconsistency.
PropagationReport propagate_vertex_cover(SetDomain& s, IntDomain& k, const Graph& g,
                                         const MethodConfig& cfg, Witness& witness);

/// Vertices v of the cover C = witness.cover u lb_s, v not in lb_s, that every
/// cover of size <= ub_k must contain.
///
/// Let J be the neighbors j of v outside C with N(j) contained in N+(v). Any
/// cover omitting v can trade J for v, so it has at least
/// witness.size_bound + |J| - 1 vertices; v is forced when that exceeds
/// ub_k. Requires every neighbor of an undecided v to be undecided or in
/// lb_s (stage 1 guarantees it).
VertexSet witness_pruning(const Graph& g, const Witness& witness, int ub_k,
                          const VertexSet& lb_s);

/// The propagator as a CP constraint. Owns its witness, so one instance
/// belongs to one search.
class VertexCoverConstraint final : public Constraint {
 public:
  VertexCoverConstraint(const Graph& g, MethodConfig cfg);

  bool propagate(PropagationState& state) override;
  std::string_view name() const override { return "vertex-cover"; }

  const Witness& witness() const { return witness_; }
  const MethodConfig& config() const { return cfg_; }
  std::int64_t calls() const { return calls_; }
  std::int64_t search_nodes() const { return search_nodes_; }

 private:
  const Graph& g_;
  MethodConfig cfg_;
  Witness witness_;
  std::int64_t calls_ = 0;
  std::int64_t search_nodes_ = 0;
};

/// Posts the VertexCover constraint for `cfg` (or, for kDecomposition, edge
/// clauses) together with the |S| = K channel.
void post_vertex_cover_model(Model& model, const MethodConfig& cfg);

}  // namespace vckern
