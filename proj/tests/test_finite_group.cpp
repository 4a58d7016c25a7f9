#include "doctest.h"

#include "raagcc/error.hpp"
#include "raagcc/finite_group.hpp"

using namespace raagcc;

TEST_CASE("orders of standard groups") {
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(dicyclic_group(2).order() == 8);
  CHECK(general_linear_group(3, 2).order() == 168);
  CHECK(general_linear_group(2, 3).order() == 48);
  CHECK(special_linear_group(2, 3).order() == 24);
  CHECK(direct_product(cyclic_group(2), symmetric_group(3)).order() == 12);
}

TEST_CASE("subgroup lattices have the known sizes") {
  CHECK(all_subgroups(cyclic_group(6)).size() == 4);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  CHECK(all_subgroups(alternating_group(4)).size() == 10);
  CHECK(all_subgroups(dicyclic_group(2)).size() == 6);
  CHECK(all_subgroups(dihedral_group(4)).size() == 10);
  CHECK(all_subgroups(special_linear_group(2, 3)).size() == 15);
  CHECK(all_subgroups(general_linear_group(3, 2)).size() == 179);
  CHECK(normal_subgroups(symmetric_group(4)).size() == 4);
  CHECK(normal_subgroups(dicyclic_group(2)).size() == 6);
}

TEST_CASE("group tables") {
  auto s3 = symmetric_group(3);
  CHECK(s3.identity() == 0);
  for (int a = 0; a < 6; ++a) {
    CHECK(s3.mul(a, s3.inv(a)) == 0);
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) CHECK(s3.mul(s3.mul(a, b), c) == s3.mul(a, s3.mul(b, c)));
  }
  auto t = FiniteGroup::from_table(cyclic_group(5).table());
  CHECK(t.order() == 5);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), Error);
}

TEST_CASE("quotients and subgroups as groups") {
  auto s4 = symmetric_group(4);
  ElementSet v4;
  for (auto const &n : normal_subgroups(s4))
    if (n.count() == 4) v4 = n;
  REQUIRE(v4.count() == 4);
  auto q = quotient(s4, v4);
  CHECK(q.group.order() == 6);
  CHECK(all_subgroups(q.group).size() == 6);
  auto e = as_group(s4, v4);
  CHECK(e.group.order() == 4);
  CHECK(all_subgroups(e.group).size() == 5);

  ElementSet h = generated_subgroup(s4, s4.set_of({1}));
  if (!is_normal(s4, h)) CHECK_THROWS_AS(quotient(s4, h), Error);
  CHECK(is_subgroup(s4, h));
  CHECK(left_coset(s4, 0, h) == h);
  CHECK(product_set(s4, v4, h).count() == v4.count() * h.count() / (v4 & h).count());
}

TEST_CASE("named groups") {
  CHECK(named_group("C4xC2").order() == 8);
  CHECK(named_group("D12").order() == 12);
  CHECK(named_group("Dic12").order() == 12);
  CHECK(named_group("Q8").order() == 8);
  CHECK(named_group("GL(2,3)").order() == 48);
  CHECK(named_group("S3xS3").order() == 36);
  CHECK_THROWS_AS(named_group("Z5"), Error);
  auto cat = group_catalogue(24);
  CHECK(cat.size() > 50);
  for (auto const &ng : cat) CHECK(ng.group.order() <= 24);
}
