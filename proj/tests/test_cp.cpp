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

#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "vckern/bench.hpp"
#include "vckern/cp.hpp"

using namespace vckern;

namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

bool run(std::vector<Constraint*> cs, PropagationState& s) { return fixpoint(cs, s); }

}  // namespace

TEST_CASE("fixpoint with no constraints leaves the state alone") {
  PropagationState s(5, {0, 5});
  const SetDomain before = s.set();
  CHECK(run({}, s));
  CHECK(s.set() == before);
  CHECK(s.k() == IntDomain{0, 5});
}

TEST_CASE("cardinality") {
  CardinalityConstraint card;
  SUBCASE("required elements raise K") {
    PropagationState s(4, {0, 5});
    s.include(0);
    s.include(1);
    CHECK(run({&card}, s));
    CHECK(s.k().min == 2);
    CHECK(s.k().max == 4);
  }
  SUBCASE("too few possible elements") {
    PropagationState s(3, {2, 2});
    s.exclude(1);
    s.exclude(2);
    CHECK_FALSE(run({&card}, s));
    CHECK(s.failed());
  }
  SUBCASE("too many required elements") {
    PropagationState s(4, {0, 2});
    s.include(0);
    s.include(1);
    s.include(2);
    CHECK_FALSE(run({&card}, s));
  }
  SUBCASE("empty lower bound changes nothing") {
    PropagationState s(4, {0, 4});
    CHECK(run({&card}, s));
    CHECK(s.k() == IntDomain{0, 4});
    CHECK(s.set().lb.empty());
    CHECK(s.set().ub.size() == 4);
  }
}

TEST_CASE("edge clauses") {
  const std::vector<Edge> e{{0, 1}};
  const Graph edge(2, e);
  EdgeClauseConstraint clauses(edge);
  SUBCASE("one excluded endpoint forces the other") {
    PropagationState s(2, {0, 2});
    s.exclude(0);
    CHECK(run({&clauses}, s));
    CHECK(s.set().lb == VertexSet(2, {1}));
  }
  SUBCASE("both excluded fails") {
    PropagationState s(2, {0, 2});
    s.exclude(0);
    s.exclude(1);
    CHECK_FALSE(run({&clauses}, s));
  }
  SUBCASE("no exclusions") {
    PropagationState s(2, {0, 2});
    CHECK(run({&clauses}, s));
    CHECK(s.set().lb.empty());
  }
  SUBCASE("chain on a path") {
    const Graph p = path(4);
    EdgeClauseConstraint chain(p);
    PropagationState s(4, {0, 4});
    s.exclude(0);
    s.exclude(2);
    CHECK(run({&chain}, s));
    CHECK(s.set().lb == VertexSet(4, {1, 3}));
    CHECK(s.set().ub == VertexSet(4, {1, 3}));
  }
  SUBCASE("chain with a tight budget fails") {
    const Graph p = path(4);
    EdgeClauseConstraint chain(p);
    CardinalityConstraint card;
    PropagationState s(4, {0, 1});
    s.exclude(0);
    CHECK_FALSE(run({&chain, &card}, s));
  }
}

TEST_CASE("balance") {
  SUBCASE("tight balance completes the other part") {
    PropagationState s(4, {0, 4});
    BalanceConstraint bal(s, {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}, 0);
    s.include(0);
    s.include(1);
    CHECK(run({&bal}, s));
    CHECK(s.set().lb == VertexSet::full(4));
  }
  SUBCASE("loose balance never prunes") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      PropagationState s(8, {0, 8});
      BalanceConstraint bal(s, generate_partition(8, 4, trial), 2);
      for (int v = 0; v < 8; ++v) {
        const auto r = rng.below(3);
        if (r == 0) s.include(v);
        if (r == 1) s.exclude(v);
      }
      const SetDomain before = s.set();
      CHECK(run({&bal}, s));
      CHECK(s.set() == before);
    }
  }
  SUBCASE("opposite singletons fail") {
    PropagationState s(2, {0, 2});
    BalanceConstraint bal(s, {VertexSet(2, {0}), VertexSet(2, {1})}, 0);
    s.include(0);
    s.exclude(1);
    CHECK_FALSE(run({&bal}, s));
  }
  SUBCASE("negative tolerance is rejected") {
    PropagationState s(2, {0, 2});
    CHECK_THROWS_AS(BalanceConstraint(s, {VertexSet::full(2)}, -1), std::invalid_argument);
  }
}

TEST_CASE("balance propagation keeps every balanced completion") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(8));
    const int b = static_cast<int>(rng.below(3));
    const auto parts = generate_partition(n, 4, trial);
    std::vector<oracle::Mask> part_masks;
    for (const auto& p : parts) part_masks.push_back(oracle::to_mask(p));
    PropagationState s(n, {0, n});
    BalanceConstraint bal(s, parts, b);
    for (int v = 0; v < n; ++v) {
      const auto r = rng.below(4);
      if (r == 0) s.include(v);
      if (r == 1) s.exclude(v);
    }
    const oracle::Mask lb = oracle::to_mask(s.set().lb);
    const oracle::Mask ub = oracle::to_mask(s.set().ub);
    const bool ok = run({&bal}, s);
    const oracle::Mask lb2 = ok ? oracle::to_mask(s.set().lb) : 0;
    const oracle::Mask ub2 = ok ? oracle::to_mask(s.set().ub) : 0;
    if (ok) {
      CHECK((lb2 & lb) == lb);
      CHECK((ub2 & ub) == ub2);
    }
    const oracle::Mask free = ub & ~lb;
    oracle::Mask sub = free;
    while (true) {
      const oracle::Mask c = lb | sub;
      if (oracle::balanced(c, part_masks, b)) {
        REQUIRE(ok);
        CHECK((c & lb2) == lb2);
        CHECK((c & ~ub2) == 0);
      }
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
}

TEST_CASE("minimize search") {
  SUBCASE("vertex cover on a path") {
    const Graph g = path(3);
    Model model(g, {0, 3});
    post_cardinality(model);
    post_edge_clauses(model);
    const SearchResult r = minimize_search(model);
    REQUIRE(r.best);
    CHECK(r.complete);
    CHECK(r.best->size() == 1);
    CHECK(is_vertex_cover(g, *r.best));
  }
  SUBCASE("balance forces a larger cover, or none") {
    const std::vector<Edge> e{{0, 1}};
    const Graph g(5, e);
    Model model(g, {0, 5});
    post_cardinality(model);
    post_edge_clauses(model);
    post_balance(model,
                 {VertexSet(5, {0, 1}), VertexSet(5, {2}), VertexSet(5, {3}), VertexSet(5, {4})},
                 0);
    // Every part must hold exactly one cover vertex.
    const SearchResult r = minimize_search(model);
    REQUIRE(r.best);
    CHECK(r.best->size() == 4);

    Model tight(g, {0, 5});
    post_cardinality(tight);
    post_edge_clauses(tight);
    post_balance(tight, {VertexSet(5, {0, 1}), VertexSet(5, {2, 3}), VertexSet(5, {4})}, 0);
    // With 4 excluded every part must be empty, but the edge needs 0 or 1.
    tight.root().exclude(4);
    const SearchResult none = minimize_search(tight);
    CHECK(none.complete);
    CHECK_FALSE(none.best);
  }
  SUBCASE("edgeless graph with tight balance") {
    const Graph g(8);
    Model model(g, {0, 8});
    post_cardinality(model);
    post_edge_clauses(model);
    post_balance(model, generate_partition(8, 4, 1), 0);
    const SearchResult r = minimize_search(model);
    REQUIRE(r.best);
    CHECK(r.best->size() == 0);
  }
  SUBCASE("zero time limit") {
    const Graph g = path(5);
    Model model(g, {0, 5});
    post_cardinality(model);
    post_edge_clauses(model);
    SearchConfig cfg;
    cfg.time_limit_s = 0.0;
    const SearchResult r = minimize_search(model, cfg);
    CHECK_FALSE(r.complete);
    CHECK_FALSE(r.best);
  }
}

TEST_CASE("search solutions satisfy every constraint and match enumeration") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const int b = static_cast<int>(seed % 3);
    const Graph g = random_graph_density(n, 0.3, seed + 60);
    const auto parts = generate_partition(n, 4, seed);
    std::vector<oracle::Mask> part_masks;
    for (const auto& p : parts) part_masks.push_back(oracle::to_mask(p));
    Model model(g, {0, n});
    post_cardinality(model);
    post_edge_clauses(model);
    post_balance(model, parts, b);
    const SearchResult r = minimize_search(model);
    CHECK(r.complete);
    const auto expected = oracle::balanced_min_vc(g, part_masks, b);
    REQUIRE(r.best.has_value() == expected.has_value());
    if (!r.best) continue;
    CHECK(r.best->size() == *expected);
    CHECK(is_vertex_cover(g, *r.best));
    CHECK(oracle::balanced(oracle::to_mask(*r.best), part_masks, b));
    CHECK(r.nodes_to_best <= r.nodes);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      CHECK(r.trace[i].size < r.trace[i - 1].size);
    }
  }
}
