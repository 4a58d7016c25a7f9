#include "doctest.h"

#include <random>

#include "raagcc/corpus.hpp"
#include "raagcc/error.hpp"
#include "raagcc/parabolic.hpp"

using namespace raagcc;

TEST_CASE("rank examples") {
  for (int d = 2; d <= 6; ++d) CHECK(rank(RelOutSpec(diamonds(d))) == d);
  for (int n = 1; n <= 6; ++n) {
    CHECK(rank(RelOutSpec(complete_graph(n))) == n - 1);
    CHECK(rank(RelOutSpec(discrete_graph(n))) == n - 1);
  }
  // Tree: leaves minus leaf-adjacent vertices, counted by hand.
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    Graph t = random_tree(3 + static_cast<int>(rng() % 10), rng());
    VertexSet leaves, hubs;
    for (int v = 0; v < t.order(); ++v)
      if (t.link(v).size() == 1) leaves.insert(v);
    leaves.for_each([&](int l) { hubs = hubs | t.link(l); });
    CHECK(rank(RelOutSpec(t)) == leaves.size() - hubs.size());
  }
}

TEST_CASE("maximal parabolics") {
  CHECK(maximal_parabolics(RelOutSpec(path_graph(4))).empty());
  Graph d = diamonds(3);
  RelOutSpec s(d);
  auto ps = maximal_parabolics(s);
  REQUIRE(ps.size() == 3);
  for (auto const &p : ps) {
    CHECK(p.delta.size() == 1);
    CHECK(rank(p.spec) == 2);
    auto w = properness_witness(p);
    CHECK(contains_generator(s, w));
    CHECK_FALSE(contains_generator(p.spec, w));
  }
}

TEST_CASE("parabolics from picks") {
  Graph d = diamonds(3);
  RelOutSpec s(d);
  CHECK(rank(parabolic_from_picks(s, {{d.vertex("a1"), 1}})) == 2);
  auto same = parabolic_from_picks(s, {});
  CHECK(same.graph == s.graph);
  CHECK(same.stabilized == s.stabilized);
  CHECK_THROWS_AS(parabolic_from_picks(s, {{d.vertex("a1"), 1}, {d.vertex("b1"), 1}}), Error);
  CHECK_THROWS_AS(parabolic_from_picks(s, {{d.vertex("a1"), 2}}), Error);

  // Every pick-set of a rank-4 spec drops the rank by its size.
  Graph d4 = diamonds(4);
  RelOutSpec s4(d4);
  std::vector<Pick> all;
  for (int i = 1; i <= 4; ++i) all.push_back({d4.vertex("a" + std::to_string(i)), 1});
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Pick> picks;
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1) picks.push_back(all[i]);
    if (picks.size() == 4) continue;
    CHECK(rank(parabolic_from_picks(s4, picks)) == 4 - static_cast<int>(picks.size()));
  }
}

TEST_CASE("Coxeter data of the graph automorphisms") {
  for (int n = 2; n <= 5; ++n) {
    auto c = aut0(RelOutSpec(complete_graph(n)));
    CHECK(c.coxeter_rank == n - 1);
    CHECK(c.class_sizes == std::vector<int>{n});
  }
  auto dc = aut0(RelOutSpec(diamonds(4)));
  CHECK(dc.coxeter_rank == 4);
  CHECK(std::count(dc.class_sizes.begin(), dc.class_sizes.end(), 2) == 4);
}
