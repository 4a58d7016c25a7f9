#include "doctest.h"

#include <algorithm>
#include <random>

#include "raagcc/corpus.hpp"
#include "raagcc/decomposition.hpp"
#include "raagcc/error.hpp"
#include "raagcc/parabolic.hpp"
#include "raagcc/verify.hpp"

using namespace raagcc;

TEST_CASE("predicted sphere dimension") {
  for (int d = 2; d <= 5; ++d) CHECK(predicted_sphere_dimension(RelOutSpec(diamonds(d))) == d - 1);
  CHECK(predicted_sphere_dimension(RelOutSpec(path_graph(4))) == -1);
  Graph t = random_tree(11, 3);
  CHECK(predicted_sphere_dimension(RelOutSpec(t)) == rank(RelOutSpec(t)) - 1);
}

TEST_CASE("audit passes on diamonds") {
  RelOutSpec s(diamonds(3));
  auto tree = decompose(s);
  auto rep = verify_tree(s, tree);
  CHECK(rep.ok());
  CHECK(rep.rank == 3);
  CHECK(base_case_signature(tree) == expected_diamond_signature(3));
}

TEST_CASE("join of two edges") {
  Graph j = graph_join(complete_graph(2), complete_graph(2)).graph;
  // Join of cliques is K_4, whose rank is 3 = 1 + 1 + 1.
  RelOutSpec s(j);
  auto tree = decompose(s);
  auto rep = verify_tree(s, tree);
  CHECK(rep.ok());
  CHECK(rep.contribution == 3);
}

TEST_CASE("tree base cases") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 25; ++i) {
    Graph t = random_tree(3 + static_cast<int>(rng() % 10), rng());
    RelOutSpec s(t);
    auto tree = decompose(s);
    CHECK(verify_tree(s, tree).ok());
    CHECK(base_case_signature(tree) == expected_tree_signature(t));
  }
}

TEST_CASE("leaf contributions add up on random graphs") {
  std::mt19937_64 rng(13);
  int audited = 0;
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng());
    RelOutSpec s(g);
    DecompNode tree;
    try {
      tree = decompose(s);
    } catch (Error const &e) {
      // Mixed classes are reported, not guessed.
      CHECK(e.kind() == ErrorKind::MixedClass);
      continue;
    }
    auto rep = verify_tree(s, tree);
    INFO(render_text(tree));
    CHECK(rep.ok());
    int sum = 0;
    for (auto const *leaf : leaves(tree)) sum += leaf->contribution();
    CHECK(sum == rank(s));
    ++audited;
  }
  CHECK(audited > 20);
}

TEST_CASE("text rendering names every leaf") {
  auto tree = decompose(RelOutSpec(diamonds(2)));
  auto text = render_text(tree);
  for (auto const *leaf : leaves(tree)) CHECK(text.find(base_kind_name(leaf->kind)) != std::string::npos);
}
