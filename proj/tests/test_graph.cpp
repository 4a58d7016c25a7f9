#include "doctest.h"

#include <random>

#include "raagcc/corpus.hpp"
#include "raagcc/error.hpp"
#include "raagcc/graph.hpp"

using namespace raagcc;

namespace {

Graph path_abc(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  Graph g(labels);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// lk(v) inside st(w), straight from the adjacency matrix.
bool leq_by_hand(Graph const &g, int v, int w) {
  for (int x = 0; x < g.order(); ++x)
    if (x != v && g.adjacent(v, x) && x != w && !g.adjacent(w, x)) return false;
  return true;
}

} // namespace

TEST_CASE("links and stars") {
  Graph p = path_abc(3);
  auto nb = neighborhoods(p, p.vertex("b"));
  CHECK(nb.link == p.set_of({"a", "c"}));
  CHECK(nb.star == p.vertices());

  Graph k3 = complete_graph(3);
  for (int v = 0; v < 3; ++v) {
    CHECK(k3.link(v).size() == 2);
    CHECK(k3.star(v) == k3.vertices());
  }

  Graph d = discrete_graph(2);
  CHECK(d.link(0).empty());
  CHECK(d.star(0) == VertexSet::singleton(0));
  CHECK_THROWS_AS(d.link(5), Error);
}

TEST_CASE("components outside a star") {
  Graph p3 = path_abc(3);
  CHECK(components_outside_star(p3, p3.vertex("b")).empty());

  Graph p5 = path_abc(5);
  auto comps = components_outside_star(p5, p5.vertex("c"));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == p5.set_of({"a"}));
  CHECK(comps[1] == p5.set_of({"e"}));

  Graph s = star_graph(3);
  CHECK(components_outside_star(s, s.vertex("z")).empty());
}

TEST_CASE("standard order agrees with the adjacency definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.45, rng());
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        CHECK(standard_leq(g, v, w) == leq_by_hand(g, v, w));
  }
}

TEST_CASE("complement, join and disjoint union") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph a = random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng());
    Graph b = random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng());
    CHECK(complement(complement(a)) == a);
    CHECK(complement(a).edge_count() + a.edge_count() == a.order() * (a.order() - 1) / 2);

    auto j = graph_join(a, b);
    auto u = disjoint_union(a, b);
    CHECK(j.graph.order() == a.order() + b.order());
    CHECK(j.graph.edge_count() == a.edge_count() + b.edge_count() + a.order() * b.order());
    CHECK(u.graph.edge_count() == a.edge_count() + b.edge_count());
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < b.order(); ++y) {
        CHECK(j.graph.adjacent(x, j.second_map[y]));
        CHECK_FALSE(u.graph.adjacent(x, u.second_map[y]));
      }
    // Complement swaps the two constructions.
    CHECK(complement(j.graph) == disjoint_union(complement(a), complement(b)).graph);
  }
}

TEST_CASE("central and isolated vertices") {
  CHECK(central_vertices(complete_graph(4)).size() == 4);
  CHECK(isolated_vertices(discrete_graph(3)).size() == 3);
  Graph s = star_graph(4);
  CHECK(central_vertices(s) == VertexSet::singleton(s.vertex("z")));
  CHECK(isolated_vertices(s).empty());
}

TEST_CASE("diamonds shape") {
  Graph d = diamonds(3);
  CHECK(d.order() == 10);
  CHECK(d.edge_count() == 12);
  CHECK(d.link(d.vertex("a2")) == d.set_of({"c1", "c2"}));
}
