#include "doctest.h"

#include <algorithm>
#include <random>

#include "raagcc/corpus.hpp"
#include "raagcc/error.hpp"
#include "raagcc/relgroup.hpp"

using namespace raagcc;

namespace {

Graph labelled_path(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  Graph g(labels);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Words in A_Γ: letter +(v+1) is v, -(v+1) its inverse.
using Word = std::vector<int>;

int gen_of(int letter) { return std::abs(letter) - 1; }

// Cancels x ... x^-1 pairs whose middle commutes with x. A word is trivial
// in A_Γ iff this reaches the empty word.
Word reduce(Graph const &g, Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      int x = gen_of(w[i]);
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        int y = gen_of(w[j]);
        if (y == x) {
          if (w[j] == -w[i]) {
            w.erase(w.begin() + static_cast<long>(j));
            w.erase(w.begin() + static_cast<long>(i));
            changed = true;
          }
          break;
        }
        if (!g.adjacent(x, y)) break;
      }
    }
  }
  return w;
}

Word inverse(Word w) {
  std::reverse(w.begin(), w.end());
  for (auto &l : w) l = -l;
  return w;
}

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (auto const &p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool equal(Graph const &g, Word const &a, Word const &b) { return reduce(g, cat({a, inverse(b)})).empty(); }

Word image(LaurenceGenerator const &gen, int x) {
  Word w{x + 1};
  switch (gen.kind) {
  case GeneratorKind::Inversion:
    return x == gen.v ? Word{-(x + 1)} : w;
  case GeneratorKind::Transvection:
    return x == gen.v ? Word{x + 1, gen.w + 1} : w;
  case GeneratorKind::PartialConjugation:
    return gen.K.contains(x) ? Word{gen.v + 1, x + 1, -(gen.v + 1)} : w;
  }
  return w;
}

// Classifies the action on A_Δ by brute force over candidate conjugators.
Action word_action(Graph const &g, LaurenceGenerator const &gen, VertexSet delta) {
  std::vector<Word> conj{{}, {gen.v + 1}, {-(gen.v + 1)}};
  if (gen.w >= 0) {
    conj.push_back({gen.w + 1});
    conj.push_back({-(gen.w + 1)});
  }
  auto members = delta.members();
  for (auto const &c : conj) {
    bool all = std::all_of(members.begin(), members.end(), [&](int x) {
      return equal(g, cat({inverse(c), image(gen, x), c}), Word{x + 1});
    });
    if (all) return Action::Trivial;
  }
  for (auto const &c : conj) {
    bool inside = std::all_of(members.begin(), members.end(), [&](int x) {
      for (int l : reduce(g, cat({inverse(c), image(gen, x), c})))
        if (!delta.contains(gen_of(l))) return false;
      return true;
    });
    if (inside) return Action::Stabilizes;
  }
  return Action::Moves;
}

// Abelianised image of x has support outside Δ.
bool abelian_escape(LaurenceGenerator const &gen, VertexSet delta) {
  if (gen.kind != GeneratorKind::Transvection) return false;
  return delta.contains(gen.v) && !delta.contains(gen.w);
}

std::vector<LaurenceGenerator> all_generators(Graph const &g) {
  std::vector<LaurenceGenerator> out;
  for (int v = 0; v < g.order(); ++v) {
    out.push_back(LaurenceGenerator::inversion(v));
    for (int w = 0; w < g.order(); ++w)
      if (v != w && standard_leq(g, v, w)) out.push_back(LaurenceGenerator::transvection(v, w));
    auto comps = components_outside_star(g, v);
    for (std::uint32_t mask = 1; mask < (1u << comps.size()); ++mask) {
      VertexSet K;
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (mask >> i & 1) K = K | comps[i];
      out.push_back(LaurenceGenerator::partial_conjugation(v, K));
    }
  }
  return out;
}

} // namespace

TEST_CASE("relative order examples") {
  Graph p = labelled_path(3);
  int a = p.vertex("a"), b = p.vertex("b");
  CHECK(g_leq(RelOutSpec(p), a, b));
  CHECK_FALSE(g_leq(RelOutSpec(p, {p.set_of({"a"})}), a, b));

  Graph d = discrete_graph(2);
  RelOutSpec s(d, {}, {VertexSet::singleton(0)});
  CHECK_FALSE(g_leq(s, 0, 1));
  CHECK(g_leq(s, 1, 0));
  CHECK_THROWS_AS(g_leq(s, 0, 9), Error);
}

TEST_CASE("relative order without families is the standard order") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng());
    RelOutSpec s(g);
    for (int v = 0; v < g.order(); ++v)
      for (int w = 0; w < g.order(); ++w)
        CHECK(g_leq(s, v, w) == standard_leq(g, v, w));
  }
}

TEST_CASE("equivalence classes") {
  Graph d = diamonds(3);
  auto cls = equiv_classes(RelOutSpec(d));
  CHECK(cls.size() == 7);
  for (int i = 1; i <= 3; ++i) {
    auto c = class_of(RelOutSpec(d), d.vertex("a" + std::to_string(i)));
    CHECK(c.members == d.set_of({"a" + std::to_string(i), "b" + std::to_string(i)}));
    CHECK(c.kind == ClassKind::Free);
  }
  auto k = equiv_classes(RelOutSpec(complete_graph(4)));
  REQUIRE(k.size() == 1);
  CHECK(k[0].kind == ClassKind::Abelian);
  CHECK(k[0].members.size() == 4);

  Graph t = star_graph(3);
  auto leaves = class_of(RelOutSpec(t), t.vertex("l1"));
  CHECK(leaves.members == t.set_of({"l1", "l2", "l3"}));
}

TEST_CASE("containment examples") {
  Graph d = diamonds(2);
  RelOutSpec s(d);
  CHECK(contains_generator(s, LaurenceGenerator::transvection(d.vertex("a1"), d.vertex("b1"))));
  for (int v = 0; v < d.order(); ++v) CHECK(contains_generator(s, LaurenceGenerator::inversion(v)));

  Graph p = labelled_path(5);
  RelOutSpec ps(p, {p.set_of({"a", "e"})});
  auto K = p.set_of({"a", "e"});
  CHECK(contains_generator(ps, LaurenceGenerator::partial_conjugation(p.vertex("c"), K)));
  CHECK_FALSE(contains_generator(ps, LaurenceGenerator::partial_conjugation(p.vertex("c"), p.set_of({"a"}))));
  CHECK_THROWS_AS(contains_generator(ps, LaurenceGenerator::partial_conjugation(p.vertex("c"), p.set_of({"b"}))), Error);
}

TEST_CASE("action examples") {
  Graph p = labelled_path(5);
  int a = p.vertex("a"), c = p.vertex("c"), e = p.vertex("e");
  VertexSet ae = p.set_of({"a", "e"});
  CHECK(generator_action(p, LaurenceGenerator::inversion(c), ae) == Action::Trivial);
  CHECK(generator_action(p, LaurenceGenerator::partial_conjugation(c, p.set_of({"a"})), ae) == Action::Moves);
  Graph d = discrete_graph(3);
  CHECK(generator_action(d, LaurenceGenerator::transvection(0, 1), d.set_of({"v0", "v1"})) == Action::Stabilizes);
  (void)a;
  (void)e;
}

TEST_CASE("action classification matches a word-level computation") {
  std::vector<Graph> graphs{labelled_path(5), diamonds(2), cycle_graph(5), star_graph(3), discrete_graph(3)};
  std::mt19937_64 rng(17);
  for (int i = 0; i < 6; ++i) graphs.push_back(random_graph(3 + static_cast<int>(rng() % 3), 0.4, rng()));
  int compared = 0;
  for (auto const &g : graphs) {
    auto gens = all_generators(g);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits) {
      VertexSet delta(bits);
      for (auto const &gen : gens) {
        Action lemma = generator_action(g, gen, delta);
        Action words = word_action(g, gen, delta);
        INFO(describe(g, gen), " on ", delta.bits());
        CHECK(lemma == words);
        if (abelian_escape(gen, delta)) CHECK(lemma == Action::Moves);
        ++compared;
      }
    }
  }
  CHECK(compared > 5000);
}

TEST_CASE("generator enumeration") {
  auto k2 = enumerate_generators(RelOutSpec(complete_graph(2)));
  CHECK(k2.size() == 4);
  auto d2 = enumerate_generators(RelOutSpec(discrete_graph(2)));
  CHECK(d2.size() == 4);
  CHECK(std::none_of(d2.begin(), d2.end(), [](auto const &g) { return g.kind == GeneratorKind::PartialConjugation; }));

  Graph p = labelled_path(5);
  auto gens = enumerate_generators(RelOutSpec(p));
  int c = p.vertex("c");
  std::vector<VertexSet> supports;
  for (auto const &g : gens)
    if (g.kind == GeneratorKind::PartialConjugation && g.v == c) supports.push_back(g.K);
  CHECK(supports == std::vector<VertexSet>{p.set_of({"a"}), p.set_of({"e"})});
}

TEST_CASE("stabilisation") {
  Graph k2 = complete_graph(2);
  CHECK_FALSE(group_stabilizes(RelOutSpec(k2), VertexSet::singleton(0)));
  Graph d = diamonds(3);
  CHECK_FALSE(group_stabilizes(RelOutSpec(d), VertexSet::singleton(d.vertex("a1"))));

  std::vector<Graph> corpus{diamonds(3), labelled_path(5), star_graph(4), cycle_graph(6), random_tree(9, 4)};
  for (auto const &g : corpus) {
    RelOutSpec s(g);
    for (int v = 0; v < g.order(); ++v) {
      auto cone = conical(s, v).geq;
      if (cone != g.vertices()) CHECK(group_stabilizes(s, cone));
      // Cones are upward closed.
      cone.for_each([&](int w) {
        for (int x = 0; x < g.order(); ++x)
          if (g_leq(s, w, x)) CHECK(cone.contains(x));
      });
    }
  }
}

TEST_CASE("saturation") {
  Graph p = labelled_path(3);
  auto sat = saturate(RelOutSpec(p));
  CHECK(sat.saturated);
  CHECK(std::find(sat.stabilized.begin(), sat.stabilized.end(), p.set_of({"b"})) != sat.stabilized.end());

  for (auto const &g : {diamonds(2), labelled_path(5), random_tree(8, 2), cycle_graph(5)}) {
    RelOutSpec s(g);
    auto once = saturate(s);
    auto twice = saturate(RelOutSpec(g, once.stabilized));
    CHECK(twice.stabilized == once.stabilized);
    CHECK(enumerate_generators(once) == enumerate_generators(s));
  }
}

TEST_CASE("cones") {
  Graph d = diamonds(3);
  RelOutSpec s(d);
  CHECK(conical(s, d.vertex("a2")).geq == d.set_of({"a2", "b2"}));
  CHECK(conical(s, d.vertex("a2")).gt.empty());

  Graph t = random_tree(10, 8);
  RelOutSpec ts(t);
  for (int l = 0; l < t.order(); ++l)
    if (t.link(l).size() == 1 && t.order() > 2) CHECK(conical(ts, l).geq == t.star(t.link(l).least()));
}

TEST_CASE("restriction image and kernel") {
  Graph d = diamonds(2);
  auto sat = saturate(RelOutSpec(d));
  int c0 = d.vertex("c0");
  VertexSet delta = conical(sat, c0).geq;
  auto r = restrict(sat, delta);
  CHECK(r.image.graph.order() == delta.size());
  CHECK(std::find(r.kernel.trivial.begin(), r.kernel.trivial.end(), delta) != r.kernel.trivial.end());
  // Kernel transvections are exactly those with v outside delta and v below w.
  for (int x = 0; x < d.order(); ++x)
    for (int y = 0; y < d.order(); ++y) {
      if (x == y || !standard_leq(d, x, y)) continue;
      bool in_kernel = contains_generator(r.kernel, LaurenceGenerator::transvection(x, y));
      CHECK(in_kernel == (!delta.contains(x) && g_leq(sat, x, y)));
    }
  CHECK_THROWS_AS(restrict(RelOutSpec(d), delta), Error);
}

TEST_CASE("projection") {
  Graph s = star_graph(3);
  VertexSet z = VertexSet::singleton(s.vertex("z"));
  CHECK_THROWS_AS(project_center(saturate(RelOutSpec(s)), s.vertex("l1")), Error);
  auto sat = saturate(RelOutSpec(s, {}, {z}));
  auto pr = project_center(sat, s.vertex("l1"));
  CHECK(pr.twist_rank == 3);
  CHECK(pr.Z == z);

  auto k = saturate(RelOutSpec(complete_graph(3)));
  auto same = project_center(k, 0);
  CHECK(same.twist_rank == 0);
  CHECK(same.image.graph.order() == 3);
}
