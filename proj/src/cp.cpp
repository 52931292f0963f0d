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

#include "vckern/cp.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vckern {

// ---------------------------------------------------------------------------
// PropagationState

bool PropagationState::check() {
  if (!set_.consistent() || k_.empty()) return fail();
  for (const IntDomain& d : aux_) {
    if (d.empty()) return fail();
  }
  return true;
}

bool PropagationState::include(int v) {
  if (failed_) return false;
  if (set_.lb.contains(v)) return true;
  if (!set_.ub.contains(v)) return fail();
  set_.lb.insert(v);
  ++version_;
  return set_.lb.size() <= set_.card_max || fail();
}

bool PropagationState::exclude(int v) {
  if (failed_) return false;
  if (!set_.ub.contains(v)) return true;
  if (set_.lb.contains(v)) return fail();
  set_.ub.erase(v);
  ++version_;
  return set_.ub.size() >= set_.card_min || fail();
}

bool PropagationState::include_all(const VertexSet& vs) {
  if (failed_) return false;
  if (vs.is_subset_of(set_.lb)) return true;
  if (!vs.is_subset_of(set_.ub)) return fail();
  set_.lb |= vs;
  ++version_;
  return check();
}

bool PropagationState::exclude_all(const VertexSet& vs) {
  if (failed_) return false;
  if (!vs.intersects(set_.ub)) return true;
  if (vs.intersects(set_.lb)) return fail();
  set_.ub -= vs;
  ++version_;
  return check();
}

bool PropagationState::set_card_min(int c) {
  if (failed_) return false;
  if (c <= set_.card_min) return true;
  set_.card_min = c;
  ++version_;
  return check();
}

bool PropagationState::set_card_max(int c) {
  if (failed_) return false;
  if (c >= set_.card_max) return true;
  set_.card_max = c;
  ++version_;
  return check();
}

bool PropagationState::set_k_min(int c) {
  if (failed_) return false;
  if (c <= k_.min) return true;
  k_.min = c;
  ++version_;
  return !k_.empty() || fail();
}

bool PropagationState::set_k_max(int c) {
  if (failed_) return false;
  if (c >= k_.max) return true;
  k_.max = c;
  ++version_;
  return !k_.empty() || fail();
}

int PropagationState::add_aux(IntDomain d) {
  aux_.push_back(d);
  return static_cast<int>(aux_.size()) - 1;
}

bool PropagationState::set_aux_min(int i, int c) {
  if (failed_) return false;
  if (c <= aux_[i].min) return true;
  aux_[i].min = c;
  ++version_;
  return !aux_[i].empty() || fail();
}

bool PropagationState::set_aux_max(int i, int c) {
  if (failed_) return false;
  if (c >= aux_[i].max) return true;
  aux_[i].max = c;
  ++version_;
  return !aux_[i].empty() || fail();
}

// ---------------------------------------------------------------------------
// Fixpoint

bool fixpoint(std::span<Constraint* const> constraints, PropagationState& state) {
  if (state.failed()) return false;
  constexpr auto kNever = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> seen(constraints.size(), kNever);
  bool pending = true;
  while (pending) {
    pending = false;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      if (seen[i] == state.version()) continue;
      const std::uint64_t before = state.version();
      if (!constraints[i]->propagate(state) || state.failed()) {
        state.fail();
        return false;
      }
      // Not every propagator is idempotent: one that changed something runs again.
      if (state.version() == before) {
        seen[i] = before;
      } else {
        pending = true;
      }
    }
    for (std::size_t i = 0; i < constraints.size() && !pending; ++i) {
      pending = seen[i] != state.version();
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constraints

bool CardinalityConstraint::propagate(PropagationState& s) {
  const SetDomain& d = s.set();
  if (!s.set_card_min(std::max(d.lb.size(), s.k().min))) return false;
  if (!s.set_card_max(std::min(d.ub.size(), s.k().max))) return false;
  if (!s.set_k_min(s.set().card_min) || !s.set_k_max(s.set().card_max)) return false;
  if (s.set().lb.size() == s.set().card_max && s.set().ub.size() > s.set().lb.size()) {
    if (!s.exclude_all(s.set().undecided())) return false;
  }
  if (s.set().ub.size() == s.set().card_min && s.set().ub.size() > s.set().lb.size()) {
    if (!s.include_all(s.set().undecided())) return false;
  }
  return true;
}

bool EdgeClauseConstraint::propagate(PropagationState& s) {
  const VertexSet excluded = s.set().ub.complement();
  for (int v : excluded) {
    for (int u : g_.neighbors(v)) {
      if (!s.include(u)) return false;
    }
  }
  return true;
}

BalanceConstraint::BalanceConstraint(PropagationState& state, std::vector<VertexSet> parts,
                                     int tolerance)
    : parts_(std::move(parts)), tolerance_(tolerance) {
  if (tolerance < 0) throw std::invalid_argument("balance tolerance must be >= 0");
  for (const VertexSet& p : parts_) counters_.push_back(state.add_aux({0, p.size()}));
}

bool BalanceConstraint::propagate(PropagationState& s) {
  const int parts = static_cast<int>(parts_.size());
  if (parts == 0) return true;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::uint64_t before = s.version();
    int max_low = std::numeric_limits<int>::min();
    int min_high = std::numeric_limits<int>::max();
    for (int i = 0; i < parts; ++i) {
      const int c = counters_[i];
      if (!s.set_aux_min(c, s.set().lb.intersection_size(parts_[i]))) return false;
      if (!s.set_aux_max(c, s.set().ub.intersection_size(parts_[i]))) return false;
      max_low = std::max(max_low, s.aux(c).min);
      min_high = std::min(min_high, s.aux(c).max);
    }
    if (max_low - min_high > tolerance_) return s.fail();
    for (int i = 0; i < parts; ++i) {
      const int c = counters_[i];
      if (!s.set_aux_min(c, max_low - tolerance_)) return false;
      if (!s.set_aux_max(c, min_high + tolerance_)) return false;
      const int in = s.set().lb.intersection_size(parts_[i]);
      const int possible = s.set().ub.intersection_size(parts_[i]);
      if (in == possible) continue;
      if (s.aux(c).min == possible) {
        if (!s.include_all(s.set().ub & parts_[i])) return false;
      } else if (s.aux(c).max == in) {
        if (!s.exclude_all(s.set().undecided() & parts_[i])) return false;
      }
    }
    changed = s.version() != before;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Model

Constraint& Model::post(std::unique_ptr<Constraint> c) {
  constraints_.push_back(std::move(c));
  return *constraints_.back();
}

std::vector<Constraint*> Model::constraints() const {
  std::vector<Constraint*> out;
  out.reserve(constraints_.size());
  for (const auto& c : constraints_) out.push_back(c.get());
  return out;
}

Constraint& post_cardinality(Model& model) {
  return model.post(std::make_unique<CardinalityConstraint>());
}

Constraint& post_edge_clauses(Model& model) {
  return model.post(std::make_unique<EdgeClauseConstraint>(model.graph()));
}

Constraint& post_balance(Model& model, std::vector<VertexSet> parts, int tolerance) {
  return model.post(
      std::make_unique<BalanceConstraint>(model.root(), std::move(parts), tolerance));
}

// ---------------------------------------------------------------------------
// Search

namespace {

using Clock = std::chrono::steady_clock;

struct Frame {
  PropagationState saved;
  int vertex;
};

}  // namespace

SearchResult minimize_search(Model& model, const SearchConfig& config) {
  const Graph& g = model.graph();
  const auto constraints = model.constraints();
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  std::vector<int> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  SearchResult result;
  auto out_of_budget = [&] {
    if (config.node_limit && result.nodes >= *config.node_limit) return true;
    return config.time_limit_s && elapsed() >= *config.time_limit_s;
  };

  if (config.time_limit_s && *config.time_limit_s <= 0) {
    result.total_time_s = elapsed();
    return result;
  }

  std::optional<int> objective_cap;  // K.max once a solution is known
  std::vector<Frame> stack;
  PropagationState state = model.root();
  bool alive = fixpoint(constraints, state);
  bool interrupted = false;

  // Leaves `state` at the next consistent node, or returns false once the
  // tree is exhausted.
  auto backtrack = [&]() -> bool {
    while (!stack.empty()) {
      if (out_of_budget()) {
        interrupted = true;
        return false;
      }
      Frame frame = std::move(stack.back());
      stack.pop_back();
      state = std::move(frame.saved);
      ++result.nodes;
      state.exclude(frame.vertex);
      if (objective_cap) state.set_k_max(*objective_cap);
      if (fixpoint(constraints, state)) return true;
    }
    return false;
  };

  if (!alive) alive = backtrack();
  while (alive) {
    if (out_of_budget()) {
      interrupted = true;
      break;
    }
    const SetDomain& dom = state.set();
    int pick = -1;
    if (dom.ub.size() != dom.lb.size()) {
      for (int v : order) {
        if (dom.ub.contains(v) && !dom.lb.contains(v)) {
          pick = v;
          break;
        }
      }
    }
    if (pick < 0) {
      const int size = dom.lb.size();
      if (!result.best || size < result.best->size()) {
        result.best = dom.lb;
        result.nodes_to_best = result.nodes;
        result.time_to_best_s = elapsed();
        result.trace.push_back({size, result.nodes, result.time_to_best_s});
      }
      objective_cap = size - 1;
      alive = backtrack();
      continue;
    }
    stack.push_back({state, pick});
    ++result.nodes;
    state.include(pick);
    if (!fixpoint(constraints, state)) alive = backtrack();
  }

  result.complete = !interrupted;
  result.total_time_s = elapsed();
  return result;
}

}  // namespace vckern
