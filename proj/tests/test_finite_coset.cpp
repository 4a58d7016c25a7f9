#include "doctest.h"

#include <random>

#include "raagcc/error.hpp"
#include "raagcc/finite_coset.hpp"

using namespace raagcc;

namespace {

struct S3Setup {
  FiniteGroup g = symmetric_group(3);
  ElementSet a3, t12, t13;

  S3Setup() {
    a3 = g.empty_set();
    for (int x = 0; x < g.order(); ++x) {
      auto const &p = g.permutations()[x];
      if (g.element_order(x) != 2) a3.set(x);
      if (p == Perm{1, 0, 2}) t12 = generated_subgroup(g, g.set_of({x}));
      if (p == Perm{2, 1, 0}) t13 = generated_subgroup(g, g.set_of({x}));
    }
  }
};

// Divided: the lower members of the closure contain their N-saturations'
// intersections. Direct check of both conditions, independent of the library.
bool divided_by_hand(FiniteGroup const &g, std::vector<ElementSet> const &fam, ElementSet const &n) {
  auto contains = [&](ElementSet const &h) { return std::find(fam.begin(), fam.end(), h) != fam.end(); };
  for (auto const &h : fam) {
    auto hn = product_set(g, h, n);
    if (hn.count() == static_cast<std::size_t>(g.order())) continue;
    // Condition 1: HN in the family (or G).
    if (!contains(hn)) return false;
    // Condition 2: HN cap K in the family for upper K.
    for (auto const &k : fam)
      if (product_set(g, k, n).count() == static_cast<std::size_t>(g.order()) && !contains(hn & k)) return false;
  }
  return true;
}

} // namespace

TEST_CASE("splitting the S3 family") {
  S3Setup s;
  auto fam = make_family(s.g, {s.t12, s.a3});
  auto split = split_family(s.g, fam, s.a3);
  CHECK(split.lower.members == std::vector<ElementSet>{s.a3});
  CHECK(split.upper.members == std::vector<ElementSet>{s.t12});
  CHECK_THROWS_AS(make_family(s.g, {s.g.full_set()}), Error);
  int r = 1;
  while (s.g.element_order(r) != 3) ++r;
  CHECK_THROWS_AS(make_family(s.g, {s.g.set_of({0, r})}), Error);
}

TEST_CASE("strongly divided examples") {
  S3Setup s;
  CHECK(divided_predicates(s.g, make_family(s.g, {s.t12, s.a3}), s.a3).strongly_divided);
  CHECK_FALSE(divided_predicates(s.g, make_family(s.g, {s.t12, s.t13}), s.a3).strongly_divided);
  auto z4 = cyclic_group(4);
  auto two = generated_subgroup(z4, z4.set_of({2}));
  CHECK(divided_predicates(z4, make_family(z4, {two}), two).strongly_divided);
  CHECK_THROWS_AS(verify_ses_join(s.g, make_family(s.g, {s.t12, s.t13}), s.a3), Error);
}

TEST_CASE("strongly divided does not force divided") {
  S3Setup s;
  auto fam = make_family(s.g, {s.t12, s.a3});
  auto v = divided_predicates(s.g, fam, s.a3);
  CHECK(v.strongly_divided);
  CHECK_FALSE(v.divided);
  CHECK_FALSE(divided_by_hand(s.g, fam.members, s.a3));
  // The intersection closure is divided.
  auto closed = intersection_closure(s.g, fam);
  CHECK(divided_predicates(s.g, closed, s.a3).divided);
}

TEST_CASE("strongly divided families have divided closures") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = random_strongly_divided(seed, 24);
    auto closed = intersection_closure(inst.group, inst.family);
    INFO(inst.group_name);
    CHECK(divided_predicates(inst.group, closed, inst.n).divided);
    CHECK(divided_by_hand(inst.group, closed.members, inst.n));
  }
}

TEST_CASE("S3 over A3 coset complexes") {
  S3Setup s;
  auto fam = make_family(s.g, {s.t12, s.a3});
  auto cs = coset_structures(s.g, fam);
  CHECK(cs.complex.f_vector() == std::vector<std::size_t>{5, 6});
  auto rep = verify_ses_join(s.g, fam, s.a3);
  CHECK(rep.ok());
  CHECK(rep.left.betti_at(1) == 2);
  CHECK(rep.right.betti_at(1) == 2);
  CHECK(rep.quotient_members == 1);
  CHECK(rep.kernel_members == 1);
}

TEST_CASE("random short exact sequence instances") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto inst = random_strongly_divided(seed, 48);
    INFO(inst.group_name);
    CHECK(verify_ses_join(inst.group, inst.family, inst.n).ok());
  }
}

TEST_CASE("generation examples") {
  auto z6 = cyclic_group(6);
  auto r6 = generation_check(z6, make_family(z6, {z6.set_of({0, 2, 4}), z6.set_of({0, 3})}));
  CHECK(r6.connected);
  CHECK(r6.generates);
  auto cs = coset_structures(z6, make_family(z6, {z6.set_of({0, 2, 4}), z6.set_of({0, 3})}));
  CHECK(reduced_homology(cs.complex).betti_at(1) == 2);

  auto z4 = cyclic_group(4);
  auto r4 = generation_check(z4, make_family(z4, {z4.set_of({0, 2})}));
  CHECK_FALSE(r4.connected);
  CHECK_FALSE(r4.generates);
}

TEST_CASE("closure lemmas") {
  std::mt19937_64 rng(7);
  auto cat = group_catalogue(24);
  for (int i = 0; i < 20; ++i) {
    auto const &ng = cat[1 + rng() % (cat.size() - 1)];
    auto fam = random_family(ng.group, rng(), 3);
    INFO(ng.name);
    CHECK(closure_check(ng.group, fam).ok());
  }
  auto s4 = symmetric_group(4);
  auto m = check_multiplied_by_n(s4);
  CHECK(m.checked > 0);
  CHECK(m.failures == 0);
  CHECK(check_distinct_in_quotient(s4).failures == 0);
}

TEST_CASE("subspace lattices") {
  auto l = subspace_poset(2, 3);
  CHECK(l.subspaces.size() == 4);
  CHECK(reduced_homology(order_complex(l.poset)).betti_at(0) == 3);
  auto l4 = subspace_poset(3, 3);
  CHECK(l4.subspaces.size() == 26);
  CHECK(reduced_homology(order_complex(l4.poset)).betti_at(1) == 27);
  CHECK_THROWS_AS(subspace_poset(3, 5), Error);
  CHECK_THROWS_AS(subspace_poset(6, 2), Error);
}

TEST_CASE("detecting coset complexes") {
  for (auto inst : {flag_complex_instance(3, 2), coxeter_complex_instance(4), trivial_simplex_instance(3)}) {
    INFO(inst.name);
    auto rep = detect_coset_complex(inst.group, inst.complex, inst.action, inst.facet);
    CHECK(rep.ok());
    // Stabiliser orders times orbit sizes give |G|.
    CHECK(rep.stabilizer_orders.size() == inst.facet.size());
  }
  auto cox = coxeter_complex_instance(4);
  CHECK(cox.complex.f_vector() == std::vector<std::size_t>{14, 36, 24});
  CHECK(reduced_homology(cox.complex).betti_at(2) == 1);

  // A facet that is not maximal breaks the hypothesis.
  auto bad = coxeter_complex_instance(3);
  bad.facet.pop_back();
  CHECK_THROWS_AS(detect_coset_complex(bad.group, bad.complex, bad.action, bad.facet), Error);
}
