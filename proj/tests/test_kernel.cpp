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
#include "vckern/kernel.hpp"

using namespace vckern;

namespace {

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

void check_partition(const LosslessPartition& p, int n) {
  const VertexSet& h = p.residual.selected();
  CHECK((h | p.forced | p.restricted | p.indifferent) == VertexSet::full(n));
  CHECK((h.intersection_size(p.forced) + h.intersection_size(p.restricted) +
         h.intersection_size(p.indifferent)) == 0);
  CHECK(p.forced.intersection_size(p.restricted) == 0);
  CHECK(p.forced.intersection_size(p.indifferent) == 0);
  CHECK(p.restricted.intersection_size(p.indifferent) == 0);
}

void check_crown(const Graph& g, const CrownDecomposition& c) {
  const int n = g.num_vertices();
  CHECK((c.rest | c.head | c.crown) == VertexSet::full(n));
  CHECK(c.rest.intersection_size(c.head) == 0);
  CHECK(c.rest.intersection_size(c.crown) == 0);
  CHECK(c.head.intersection_size(c.crown) == 0);
  for (auto [u, v] : g.edges()) {
    CHECK_FALSE((c.crown.contains(u) && c.crown.contains(v)));
    CHECK_FALSE((c.crown.contains(u) && c.rest.contains(v)));
    CHECK_FALSE((c.rest.contains(u) && c.crown.contains(v)));
  }
  CHECK(static_cast<int>(c.matching.size()) == c.head.size());
  VertexSet heads(n);
  VertexSet tails(n);
  for (auto [w, i] : c.matching) {
    CHECK(g.has_edge(w, i));
    CHECK(c.head.contains(w));
    CHECK(c.crown.contains(i));
    CHECK(heads.insert(w));
    CHECK(tails.insert(i));
  }
}

}  // namespace

TEST_CASE("buss kernel examples") {
  SUBCASE("star with five leaves and budget two") {
    const LosslessPartition p = buss_kernel(star(5), 2);
    CHECK_FALSE(p.infeasible);
    CHECK(p.forced == VertexSet(6, {0}));
    CHECK(p.indifferent == VertexSet(6, {1, 2, 3, 4, 5}));
    CHECK(p.residual.num_vertices() == 0);
    CHECK(p.restricted.empty());
    check_partition(p, 6);
  }
  SUBCASE("C4 with budget two") {
    const LosslessPartition p = buss_kernel(cycle(4), 2);
    CHECK_FALSE(p.infeasible);
    CHECK(p.forced.empty());
    CHECK(p.indifferent.empty());
    CHECK(p.residual.graph() == cycle(4));
  }
  SUBCASE("edgeless") {
    const LosslessPartition p = buss_kernel(Graph(4), 1);
    CHECK(p.forced.empty());
    CHECK(p.indifferent == VertexSet::full(4));
    CHECK(p.residual.num_vertices() == 0);
  }
  SUBCASE("too many edges for the budget") {
    CHECK(buss_kernel(cycle(6), 2).infeasible);
    CHECK(buss_kernel(star(3), 0).infeasible);
  }
}

TEST_CASE("buss kernel keeps every small cover") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph_density(10, 0.1 + 0.4 * (seed % 5) / 4.0, seed);
    const auto covers = oracle::all_covers(g);
    for (int k = 0; k <= 10; ++k) {
      const LosslessPartition p = buss_kernel(g, k);
      check_partition(p, 10);
      const oracle::Mask forced = oracle::to_mask(p.forced);
      bool any = false;
      for (oracle::Mask c : covers) {
        if (oracle::popcount(c) > k) continue;
        any = true;
        CHECK((c & forced) == forced);
      }
      if (p.infeasible) CHECK_FALSE(any);
    }
  }
}

TEST_CASE("crown kernel examples") {
  SUBCASE("star with three leaves") {
    const Graph g = star(3);
    const CrownResult r = crown_kernel(g, 1);
    REQUIRE_FALSE(r.infeasible);
    REQUIRE(r.crown);
    CHECK(r.crown->head == VertexSet(4, {0}));
    CHECK(r.crown->crown == VertexSet(4, {2, 3}));
    CHECK(r.crown->rest == VertexSet(4, {1}));
    check_crown(g, *r.crown);
  }
  SUBCASE("path has no crown") {
    const CrownResult r = crown_kernel(path(3), 1);
    CHECK_FALSE(r.infeasible);
    CHECK_FALSE(r.crown);
  }
  SUBCASE("single edge with budget zero") { CHECK(crown_kernel(path(2), 0).infeasible); }
}

TEST_CASE("crowns are valid and keep the optimum") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = random_graph_density(12, 0.1 + 0.3 * (seed % 4) / 3.0, seed + 500);
    const SubgraphView core(g, non_isolated(g));
    const int opt = oracle::min_vc(g);
    const CrownResult r = crown_kernel(core.graph(), core.num_vertices());
    REQUIRE_FALSE(r.infeasible);
    if (!r.crown) continue;
    check_crown(core.graph(), *r.crown);
    const SubgraphView rest(core.graph(), r.crown->rest);
    CHECK(opt == r.crown->head.size() + oracle::min_vc(rest.graph()));
  }
}

TEST_CASE("exhaustive crown reduction respects the 3k bound") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph_density(14, 0.15, seed + 900);
    const int opt = oracle::min_vc(g);
    for (int k = opt; k <= opt + 2; ++k) {
      const CrownReduction red = reduce_crowns(g, k);
      CHECK_FALSE(red.infeasible);
      CHECK(red.residual.num_vertices() <= 3 * (k - red.head.size()));
      CHECK(opt == red.head.size() + oracle::min_vc(red.residual.graph()));
    }
  }
}

TEST_CASE("double graph") {
  SUBCASE("single edge") {
    const BipartiteGraph b = build_double_graph(path(2));
    CHECK(b.neighbors(0) == std::vector<int>{1});
    CHECK(b.neighbors(1) == std::vector<int>{0});
  }
  SUBCASE("edgeless") {
    const BipartiteGraph b = build_double_graph(Graph(5));
    CHECK(b.left_size() == 5);
    CHECK(b.right_size() == 5);
    CHECK(b.num_edges() == 0);
  }
  SUBCASE("triangle") { CHECK(build_double_graph(cycle(3)).num_edges() == 6); }
}

TEST_CASE("rigid crown examples") {
  SUBCASE("path") {
    const LosslessPartition p = rigid_crown_kernel(path(3));
    CHECK(p.forced == VertexSet(3, {1}));
    CHECK(p.restricted == VertexSet(3, {0, 2}));
    CHECK(p.residual.num_vertices() == 0);
    CHECK(p.indifferent.empty());
  }
  SUBCASE("single edge") {
    const LosslessPartition p = rigid_crown_kernel(path(2));
    CHECK(p.forced.empty());
    CHECK(p.restricted.empty());
    CHECK(p.residual.num_vertices() == 2);
  }
  SUBCASE("C4") {
    const LosslessPartition p = rigid_crown_kernel(cycle(4));
    CHECK(p.forced.empty());
    CHECK(p.restricted.empty());
    CHECK(p.residual.graph() == cycle(4));
  }
}

TEST_CASE("rigid crowns keep every minimum cover") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_graph_density(12, 0.1 + 0.4 * (seed % 5) / 4.0, seed + 77);
    const LosslessPartition p = rigid_crown_kernel(g);
    check_partition(p, 12);
    const oracle::Mask f = oracle::to_mask(p.forced);
    const oracle::Mask r = oracle::to_mask(p.restricted);
    for (oracle::Mask c : oracle::minimum_covers(g)) {
      CHECK((c & f) == f);
      CHECK((c & r) == 0);
    }
    CHECK(p.residual.num_vertices() <= 2 * oracle::min_vc(g));
  }
}

TEST_CASE("rigid crown residual is rigid crown free") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_graph_density(16, 0.15, seed + 4000);
    const LosslessPartition p = rigid_crown_kernel(g);
    const LosslessPartition again = rigid_crown_pass(p.residual.graph());
    CHECK(again.forced.empty());
    CHECK(again.restricted.empty());
  }
}

TEST_CASE("one rigid crown pass already reaches the fixpoint") {
  int graphs = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = random_graph_density(14, 0.05 + 0.3 * (seed % 7) / 6.0, seed + 8000);
    const LosslessPartition once = rigid_crown_pass(g);
    const LosslessPartition fix = rigid_crown_kernel(g);
    CHECK(once.forced == fix.forced);
    CHECK(once.restricted == fix.restricted);
    ++graphs;
  }
  CHECK(graphs == 300);
}
