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

#include "vckern/propagator.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <memory>
#include <stdexcept>

#include "vckern/kernel.hpp"
#include "vckern/search.hpp"

namespace vckern {

MethodConfig MethodConfig::make(Method m, std::optional<std::int64_t> lambda) {
  MethodConfig cfg;
  cfg.method = m;
  switch (m) {
    case Method::kDecomposition:
    case Method::kCliqueCover:
    case Method::kKernelPruning:
      cfg.lambda = 0;
      break;
    case Method::kKernelWitness:
    case Method::kFull:
      cfg.lambda = lambda.value_or(kDefaultLambda);
      if (cfg.lambda < 0) throw std::invalid_argument("lambda must be >= 0");
      break;
  }
  return cfg;
}

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 5> kMethodNames{{
    {Method::kDecomposition, "decomp"},
    {Method::kCliqueCover, "cliquecover"},
    {Method::kKernelPruning, "kernel"},
    {Method::kKernelWitness, "kernelwitness"},
    {Method::kFull, "full"},
}};

}  // namespace

std::string_view method_name(Method m) {
  for (auto [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (auto [method, n] : kMethodNames) {
    if (n == name) return method;
  }
  return std::nullopt;
}

Witness Witness::initial(int n) {
  Witness w;
  w.cover = VertexSet::full(n);
  return w;
}

VertexSet witness_pruning(const Graph& g, const Witness& witness, int ub_k,
                          const VertexSet& lb_s) {
  const int n = g.num_vertices();
  const VertexSet cover = witness.cover | lb_s;
  VertexSet forced(n);
  std::vector<char> in_closed(n, 0);
  for (int v : cover) {
    if (lb_s.contains(v)) continue;
    for (int u : g.neighbors(v)) in_closed[u] = 1;
    in_closed[v] = 1;
    int j_size = 0;
    for (int j : g.neighbors(v)) {
      if (cover.contains(j)) continue;
      const auto nj = g.neighbors(j);
      if (std::all_of(nj.begin(), nj.end(), [&](int u) { return in_closed[u] != 0; })) {
        ++j_size;
      }
    }
    for (int u : g.neighbors(v)) in_closed[u] = 0;
    in_closed[v] = 0;
    if (witness.size_bound + j_size - 1 > ub_k) forced.insert(v);
  }
  return forced;
}

PropagationReport propagate_vertex_cover(PropagationState& s, const Graph& g,
                                         const MethodConfig& cfg, Witness& w) {
  if (cfg.method == Method::kDecomposition) {
    throw std::invalid_argument("the decomposition has no VertexCover propagator");
  }
  const int n = g.num_vertices();
  PropagationReport report;
  report.buss_forced = VertexSet(n);
  report.rigid_forced = VertexSet(n);
  report.rigid_restricted = VertexSet(n);
  report.witness_forced = VertexSet(n);
  auto failed = [&report] {
    report.consistent = false;
    return report;
  };

  if (s.failed() || s.set().lb.size() > s.k().max) return (s.fail(), failed());

  // Neighbors of excluded vertices must be in the cover.
  for (int v : s.set().ub.complement()) {
    for (int u : g.neighbors(v)) {
      if (!s.include(u)) return failed();
    }
  }

  const int ub_k = s.k().max;
  const VertexSet lb = s.set().lb;
  const SubgraphView undecided(g, s.set().undecided());
  const int budget = ub_k - lb.size();
  if (budget < 0) return (s.fail(), failed());

  // Buss kernel of the undecided subgraph.
  const LosslessPartition buss = buss_kernel(undecided.graph(), budget);
  if (buss.infeasible) return (s.fail(), failed());
  VertexSet forced = undecided.lift(buss.forced);
  report.buss_forced = forced;

  // Is the cached witness still a cover strictly below ub(K)?
  const bool refresh = !w.cover.is_subset_of(s.set().ub) || (w.cover | lb).size() >= ub_k;
  if (refresh) {
    const SubgraphView& buss_residual = buss.residual;
    std::optional<CrownReduction> crowns;
    VertexSet crown_head(n);
    int bound = lower_bound(buss_residual.graph());
    if (cfg.uses_crowns()) {
      crowns = reduce_crowns(buss_residual.graph(), buss.remaining_budget);
      if (crowns->infeasible) return (s.fail(), failed());
      crown_head = undecided.lift(buss_residual.lift(crowns->head));
      bound = std::max(bound, crown_head.size() + lower_bound(crowns->residual.graph()));
    }
    const Graph& core = crowns ? crowns->residual.graph() : buss_residual.graph();
    const int base = lb.size() + forced.size() + crown_head.size();
    int size_lb = lb.size() + forced.size() + bound;

    if (cfg.lambda > 0) {
      SearchLimits limits;
      limits.node_limit = cfg.lambda;
      limits.stop_below = ub_k - base;
      const SearchOutcome outcome = branch_and_bound_vc(core, limits);
      report.search_nodes = outcome.nodes_explored;
      report.witness_recomputed = true;

      VertexSet core_cover = buss_residual.lift(
          crowns ? crowns->residual.lift(outcome.cover) : outcome.cover);
      w.cover = lb | forced | crown_head | undecided.lift(core_cover);
      assert(is_vertex_cover(g, w.cover));
      w.optimal = outcome.optimal;
      size_lb = std::max(size_lb, base + outcome.proven_lower_bound);
      w.size_bound = size_lb;
      w.lb_snapshot = lb;
      w.ub_snapshot = s.set().ub;
    }

    report.size_lower_bound = size_lb;
    if (size_lb > ub_k || !s.set_k_min(size_lb)) return (s.fail(), failed());

    if (cfg.uses_rigid_crowns() && size_lb == ub_k) {
      // Only minimum covers remain, so rigid crowns prune both ways.
      const LosslessPartition rigid = rigid_crown_kernel(undecided.graph());
      report.rigid_applied = true;
      report.rigid_forced = undecided.lift(rigid.forced);
      report.rigid_restricted = undecided.lift(rigid.restricted);
      if (!s.exclude_all(report.rigid_restricted)) return failed();
      forced |= report.rigid_forced;
    }
  } else {
    assert(is_vertex_cover(g, w.cover | s.set().lb));
  }

  if (!report.rigid_applied && cfg.uses_witness_pruning() && w.optimal &&
      s.k().max - s.k().min <= 2 && w.valid_for(s.set()) && w.cover.is_subset_of(s.set().ub)) {
    report.witness_pruning_applied = true;
    report.witness_forced = witness_pruning(g, w, s.k().max, s.set().lb);
    forced |= report.witness_forced;
  }

  if (!s.include_all(forced)) return failed();
  return report;
}

PropagationReport propagate_vertex_cover(SetDomain& s, IntDomain& k, const Graph& g,
                                         const MethodConfig& cfg, Witness& w) {
  PropagationState state(s, k);
  PropagationReport report = propagate_vertex_cover(state, g, cfg, w);
  if (report.consistent && !state.failed()) {
    s = state.set();
    k = state.k();
  } else {
    report.consistent = false;
  }
  return report;
}

VertexCoverConstraint::VertexCoverConstraint(const Graph& g, MethodConfig cfg)
    : g_(g), cfg_(cfg), witness_(Witness::initial(g.num_vertices())) {
  if (cfg.method == Method::kDecomposition) {
    throw std::invalid_argument("the decomposition has no VertexCover propagator");
  }
}

bool VertexCoverConstraint::propagate(PropagationState& state) {
  ++calls_;
  const PropagationReport report = propagate_vertex_cover(state, g_, cfg_, witness_);
  search_nodes_ += report.search_nodes;
  return report.consistent && !state.failed();
}

void post_vertex_cover_model(Model& model, const MethodConfig& cfg) {
  post_cardinality(model);
  if (cfg.method == Method::kDecomposition) {
    post_edge_clauses(model);
  } else {
    model.post(std::make_unique<VertexCoverConstraint>(model.graph(), cfg));
  }
}

}  // namespace vckern
