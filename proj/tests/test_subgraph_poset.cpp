#include "doctest.h"

#include <numeric>
#include <random>

#include "raagcc/error.hpp"
#include "raagcc/subgraph_poset.hpp"

using namespace raagcc;

namespace {

// Edge-subset qualifies for X: connected, rank in [1, n), covers the labels.
// Recomputed here with a separate union-find.
bool in_x_by_hand(LabelledGraph const &gl, EdgeMask mask, int n) {
  auto const &edges = gl.graph.edges();
  int nv = gl.graph.vertex_count();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> used(nv, false);
  int ecount = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (mask >> i & 1) {
      used[edges[i].u] = used[edges[i].v] = true;
      parent[find(edges[i].u)] = find(edges[i].v);
      ++ecount;
    }
  for (int l : gl.labelling) used[l] = true;
  int verts = 0, comps = 0;
  for (int v = 0; v < nv; ++v)
    if (used[v]) {
      ++verts;
      if (find(v) == v) ++comps;
    }
  int r = ecount - verts + comps;
  return comps == 1 && r >= 1 && r < n;
}

} // namespace

TEST_CASE("edge operations") {
  Multigraph two({"p", "q"});
  two.add_edge("p", "q", "e1");
  two.add_edge("p", "q", "e2");
  auto loop = edge_op(EdgeOp::Collapse, two, "e1");
  CHECK(loop.vertex_count() == 1);
  REQUIRE(loop.edge_count() == 1);
  CHECK(loop.edges()[0].is_loop());

  auto r3 = rose(3);
  auto r2 = edge_op(EdgeOp::Delete, r3, "e2");
  CHECK(r2.edge_count() == 2);
  CHECK(r2.rank() == 2);
  CHECK_THROWS_AS(edge_op(EdgeOp::Collapse, r3, "e1"), Error);
  CHECK_THROWS_AS(edge_op(EdgeOp::Delete, r3, "nope"), Error);
}

TEST_CASE("cores") {
  Multigraph g = rose(2);
  int t = g.add_vertex("t");
  g.add_edge(g.vertex("o"), t, "tail");
  auto stripped = core(LabelledGraph{g, {}});
  CHECK(stripped.graph.edge_count() == 2);
  CHECK(stripped.graph.vertex_count() == 1);
  CHECK(is_core_graph(stripped));

  auto kept = core(LabelledGraph{g, {t}});
  CHECK(kept.graph.edge_count() == 3);
  CHECK(is_core_graph(kept));
}

TEST_CASE("rose posets are boundaries of simplices") {
  HomologyOptions ho;
  ho.max_dimension = 12;
  for (int n = 2; n <= 5; ++n) {
    LabelledGraph gl{rose(n), {}};
    auto x = build_poset(gl, SubgraphPosetKind::X);
    CHECK(x.elements.size() == (std::size_t{1} << n) - 2);
    auto h = poset_homology(x.poset, ho);
    for (int d = -1; d <= h.top(); ++d) CHECK(h.betti_at(d) == (d == n - 2 ? 1 : 0));
  }
}

TEST_CASE("theta graph") {
  LabelledGraph gl{theta_graph(3), {}};
  auto x = build_poset(gl, SubgraphPosetKind::X);
  CHECK(x.elements.size() == 3);
  CHECK(poset_homology(x.poset).betti_at(0) == 2);
  CHECK_THROWS_AS(build_poset(LabelledGraph{theta_graph(1), {}}, SubgraphPosetKind::X), Error);
}

TEST_CASE("X membership matches a direct count") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto gl = random_multigraph(n, n + static_cast<int>(rng() % 4), 2, rng());
    auto x = build_poset(gl, SubgraphPosetKind::X);
    std::vector<EdgeMask> expect;
    for (EdgeMask m = 1; m < (EdgeMask{1} << gl.graph.edge_count()); ++m)
      if (in_x_by_hand(gl, m, n)) expect.push_back(m);
    CHECK(x.elements == expect);
    auto c = build_poset(gl, SubgraphPosetKind::C);
    CHECK(c.elements.size() <= x.elements.size());
  }
}

TEST_CASE("sphericity on random labelled graphs") {
  HomologyOptions ho;
  ho.max_dimension = 12;
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto gl = random_multigraph(n, std::min(9, n + 1 + static_cast<int>(rng() % 4)), 2, rng());
    auto rep = verify_sphericity(gl, ho);
    CHECK(rep.rank == n);
    CHECK(rep.retraction);
    CHECK(rep.collapse_invariance);
    CHECK(rep.spherical.ok);
    CHECK(rep.x_homology == rep.c_homology);
  }
}
