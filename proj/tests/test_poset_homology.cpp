#include "doctest.h"

#include <random>

#include "raagcc/error.hpp"
#include "raagcc/finite_coset.hpp"
#include "raagcc/homology.hpp"
#include "raagcc/poset.hpp"

using namespace raagcc;

namespace {

// Reduced Euler characteristic straight from the f-vector.
long long reduced_euler(SimplicialComplex const &k) {
  long long chi = -1, sign = 1;
  for (auto f : k.f_vector()) {
    chi += sign * static_cast<long long>(f);
    sign = -sign;
  }
  return chi;
}

long long reduced_euler(HomologyResult const &h) {
  long long chi = 0;
  for (int d = -1; d <= h.top(); ++d) chi += (d % 2 == 0 ? 1 : -1) * h.betti_at(d);
  return chi;
}

FinitePoset triangle_faces() {
  // Proper nonempty faces of a triangle: 3 vertices, 3 edges.
  std::vector<unsigned> masks{1, 2, 4, 3, 5, 6};
  return FinitePoset(6, [&](int i, int j) { return (masks[i] & ~masks[j]) == 0; });
}

FinitePoset random_poset(std::mt19937_64 &rng, int n) {
  // Random DAG on 0..n-1 closed transitively.
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    r[i][i] = true;
    for (int j = i + 1; j < n; ++j) r[i][j] = rng() % 4 == 0;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return FinitePoset(n, [&](int i, int j) { return static_cast<bool>(r[i][j]); });
}

} // namespace

TEST_CASE("order complexes of chains and antichains") {
  auto c = order_complex(chain(4));
  CHECK(c.dimension() == 3);
  CHECK(c.maximal_faces().size() == 1);
  CHECK(reduced_homology(c).acyclic());

  auto a = order_complex(antichain(5));
  CHECK(a.dimension() == 0);
  auto h = reduced_homology(a);
  CHECK(h.betti_at(0) == 4);
}

TEST_CASE("face poset of a triangle boundary") {
  auto k = order_complex(triangle_faces());
  CHECK(k.f_vector() == std::vector<std::size_t>{6, 6});
  auto h = reduced_homology(k);
  CHECK(h.betti_at(1) == 1);
  CHECK(h.betti_at(0) == 0);
}

TEST_CASE("reduced homology of small complexes") {
  auto b = simplex_boundary(3);
  auto h = reduced_homology(b);
  CHECK(h.betti_at(1) == 1);
  CHECK(h.betti_at(0) == 0);
  CHECK(reduced_homology(full_simplex(1)).acyclic());

  // Six-vertex projective plane: H1 = Z/2, nothing free.
  std::vector<Face> rp2{{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                        {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
  auto p = reduced_homology(SimplicialComplex(6, rp2));
  CHECK(p.acyclic() == false);
  CHECK(p.betti_at(1) == 0);
  CHECK(p.betti_at(2) == 0);
  CHECK(p.torsion_at(1) == std::vector<std::int64_t>{2});
}

TEST_CASE("Smith invariants") {
  // diag(2, 3) has invariant factors 1, 6.
  auto s = smith_invariants(2, {{{0, 2}}, {{1, 3}}});
  CHECK(s.rank == 2);
  CHECK(s.torsion == std::vector<std::int64_t>{6});
  auto z = smith_invariants(2, {{{0, 1}, {1, -1}}, {{0, -1}, {1, 1}}});
  CHECK(z.rank == 1);
  CHECK(z.torsion.empty());
}

TEST_CASE("homology matches the Euler characteristic") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_poset(rng, 4 + static_cast<int>(rng() % 6));
    auto k = order_complex(p);
    auto h = reduced_homology(k);
    CHECK(reduced_euler(h) == reduced_euler(k));
    CHECK(k.euler_characteristic() == reduced_euler(k) + 1);
    // The beat-point core has the same homology.
    CHECK(poset_homology(p) == h);
    CHECK(beat_core(p).size() <= p.size());
  }
}

TEST_CASE("poset operations") {
  auto j = poset_join(antichain(2), antichain(3));
  auto k = order_complex(j);
  CHECK(k.f_vector() == std::vector<std::size_t>{5, 6});
  CHECK(reduced_homology(k).betti_at(1) == 2);
  CHECK(certify_spherical(k, 1).ok);

  auto prod = poset_product(chain(2), chain(2));
  CHECK(prod.size() == 4);
  CHECK(reduced_homology(order_complex(prod)).acyclic());
  CHECK(poset_combine(PosetOp::Opposite, chain(3)).leq(2, 0));
  CHECK_THROWS(FinitePoset(2, [](int, int) { return true; }));
}

TEST_CASE("joins of complexes") {
  auto a = SimplicialComplex(2, {{0}, {1}});
  auto s1 = simplicial_join(a, simplex_boundary(3));
  CHECK(reduced_homology(s1).betti_at(2) == 1);
  CHECK(s1.euler_characteristic() == 2);
}

TEST_CASE("sphericity and Cohen-Macaulay certificates") {
  CHECK(certify_spherical(simplex_boundary(4), 2).ok);
  CHECK_FALSE(certify_spherical(simplex_boundary(4), 1).ok);
  auto lat = subspace_poset(3, 2);
  auto k = order_complex(lat.poset);
  CHECK(lat.subspaces.size() == 14);
  CHECK(k.f_vector() == std::vector<std::size_t>{14, 21});
  // Connected with reduced Euler characteristic -8, so H1 = Z^8.
  CHECK(reduced_euler(k) == -8);
  CHECK(reduced_homology(k).betti_at(1) == 8);
  CHECK(certify_cm(k).ok);

  // A triangle with a dangling edge is 1-dimensional but not pure.
  SimplicialComplex bad(4, {{0, 1}, {1, 2}, {0, 2}, {3}});
  CHECK_FALSE(certify_cm(bad).ok);
}

TEST_CASE("links") {
  auto b = simplex_boundary(4);
  auto l = link(b, {0});
  CHECK(l.f_vector() == std::vector<std::size_t>{3, 3});
}
