#include "raagcc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "raagcc/corpus.hpp"
#include "raagcc/error.hpp"
#include "raagcc/parabolic.hpp"

namespace raagcc {

bool CriterionResult::pass() const {
  if (verdicts.empty()) return false;
  return std::all_of(verdicts.begin(), verdicts.end(), [](Verdict const &v) { return v.pass; });
}

namespace {

struct Collector {
  std::vector<Verdict> &out;

  void add(std::string check, std::string lemma, bool pass, std::string details = {}) {
    out.push_back({std::move(check), std::move(lemma), pass, std::move(details)});
  }

  // Runs f; an exception turns into a failing verdict under the same name.
  void guard(std::string const &check, std::string const &lemma, std::function<void()> const &f) {
    try {
      f();
    } catch (std::exception const &e) {
      add(check, lemma, false, std::string("error: ") + e.what());
    }
  }
};

std::uint64_t mix(std::uint64_t seed, int criterion, int i) {
  return seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(criterion) * 100003ull + static_cast<std::uint64_t>(i);
}

template <class T>
std::string join_tokens(std::vector<T> const &xs) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < xs.size(); ++i) ss << (i ? " " : "") << xs[i];
  return ss.str();
}

struct TreeShape {
  VertexSet leaves;
  VertexSet hubs;  // Z: vertices adjacent to a leaf
};

TreeShape tree_shape(Graph const &t) {
  TreeShape s;
  for (int v = 0; v < t.order(); ++v)
    if (t.link(v).size() == 1) s.leaves.insert(v);
  s.leaves.for_each([&](int l) { s.hubs = s.hubs | t.link(l); });
  return s;
}

std::string label_set(Graph const &g, VertexSet s) { return "{" + join_tokens(g.labels_of(s)) + "}"; }

std::string delta_list(Graph const &g, std::vector<VertexSet> ds) {
  std::sort(ds.begin(), ds.end());
  std::string out;
  for (auto d : ds) out += label_set(g, d);
  return out;
}

std::vector<VertexSet> parabolic_deltas(RelOutSpec const &spec) {
  std::vector<VertexSet> out;
  for (auto const &p : maximal_parabolics(spec)) out.push_back(p.delta);
  std::sort(out.begin(), out.end());
  return out;
}

// Stab<l_1..l_i, non-leaf neighbours of z, z> for 1 <= i < n_z.
std::vector<VertexSet> expected_tree_parabolics(Graph const &t) {
  auto shape = tree_shape(t);
  std::vector<VertexSet> out;
  shape.hubs.for_each([&](int z) {
    auto ls = (t.link(z) & shape.leaves).members();
    VertexSet base = (t.link(z) - shape.leaves) | VertexSet::singleton(z);
    for (std::size_t i = 1; i < ls.size(); ++i) {
      VertexSet d = base;
      for (std::size_t k = 0; k < i; ++k) d.insert(ls[k]);
      out.push_back(d);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

Graph with_universal(Graph const &g) {
  auto labels = g.labels();
  labels.push_back("u*");
  Graph h(labels);
  for (auto [a, b] : g.edges()) h.add_edge(a, b);
  for (int v = 0; v < g.order(); ++v) h.add_edge(v, g.order());
  return h;
}

Graph with_isolated(Graph const &g) {
  auto labels = g.labels();
  labels.push_back("i*");
  Graph h(labels);
  for (auto [a, b] : g.edges()) h.add_edge(a, b);
  return h;
}

bool order_reversed(Graph const &g) {
  Graph c = complement(g);
  for (int v = 0; v < g.order(); ++v)
    for (int w = 0; w < g.order(); ++w)
      if (v != w && standard_leq(g, v, w) != standard_leq(c, w, v)) return false;
  return true;
}

int graph_rank(Graph const &g) { return rank(RelOutSpec(g)); }

// Random trees with at least three vertices.
Graph suite_tree(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = std::uniform_int_distribution<int>(3, 12)(rng);
  return random_tree(n, rng());
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_ranks(Collector &c, SuiteOptions const &opts) {
  std::string const diamonds_lemma = "Example: string of diamonds (rk(O) = d, P(O) = {Stab<a_i>})";
  for (int d = 2; d <= 6; ++d) {
    c.guard("diamonds d=" + std::to_string(d), diamonds_lemma, [&] {
      Graph g = diamonds(d);
      RelOutSpec spec(g);
      int r = rank(spec);
      std::vector<VertexSet> expect;
      for (int i = 1; i <= d; ++i) expect.push_back(VertexSet::singleton(g.vertex("a" + std::to_string(i))));
      std::sort(expect.begin(), expect.end());
      auto got = parabolic_deltas(spec);
      c.add("diamonds d=" + std::to_string(d), diamonds_lemma, r == d && got == expect,
            "rank " + std::to_string(r) + ", parabolics " + delta_list(g, got));
    });
  }
  std::string const tree_lemma = "Example: trees (rk(O) = |L| - |Z|)";
  int good = 0;
  std::string bad;
  for (int i = 0; i < 30; ++i) {
    try {
      Graph t = suite_tree(mix(opts.seed, 1, i));
      auto shape = tree_shape(t);
      RelOutSpec spec(t);
      int r = rank(spec);
      int expect = shape.leaves.size() - shape.hubs.size();
      bool ok = r == expect && parabolic_deltas(spec) == expected_tree_parabolics(t);
      if (ok) ++good;
      else if (bad.empty()) bad = "tree " + std::to_string(i) + ": rank " + std::to_string(r) + " expected " + std::to_string(expect);
    } catch (std::exception const &e) {
      if (bad.empty()) bad = std::string("error: ") + e.what();
    }
  }
  c.add("30 random trees", tree_lemma, good == 30, std::to_string(good) + "/30 match" + (bad.empty() ? "" : "; " + bad));
}

void criterion_constructions(Collector &c, SuiteOptions const &opts) {
  std::string const join_lemma = "Constructions: direct product (join) rank formula";
  std::string const union_lemma = "Constructions: free product (disjoint union) rank formula";
  std::string const comp_lemma = "Constructions: complement preserves rank and reverses the standard order";
  int join_ok = 0, union_ok = 0, comp_ok = 0, plus_join = 0, plus_union = 0;
  std::string first_bad;
  for (int i = 0; i < 20; ++i) {
    try {
      std::mt19937_64 rng(mix(opts.seed, 2, i));
      auto make = [&](int bits) {
        int n = std::uniform_int_distribution<int>(1, 7)(rng);
        double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
        Graph g = random_graph(n, p, rng());
        if (bits & 1) g = with_universal(g);
        else if (bits & 2) g = with_isolated(g);
        return g;
      };
      // Cycle through universal / isolated / plain so both branches of each formula occur.
      Graph a = make(i % 4 == 0 ? 1 : i % 4 == 1 ? 2 : 0);
      Graph b = make(i % 4 == 0 ? 1 : i % 4 == 1 ? 2 : i % 4 == 2 ? 1 : 0);
      int ra = graph_rank(a), rb = graph_rank(b);
      Graph j = graph_join(a, b).graph;
      Graph u = disjoint_union(a, b).graph;
      bool zj = !central_vertices(a).empty() && !central_vertices(b).empty();
      bool du = !isolated_vertices(a).empty() && !isolated_vertices(b).empty();
      plus_join += zj;
      plus_union += du;
      int rj = graph_rank(j), ru = graph_rank(u);
      bool jok = rj == ra + rb + (zj ? 1 : 0);
      bool uok = ru == ra + rb + (du ? 1 : 0);
      bool cok = true;
      for (Graph const *g : {&a, &b, &j, &u})
        cok = cok && graph_rank(complement(*g)) == graph_rank(*g) && order_reversed(*g);
      join_ok += jok;
      union_ok += uok;
      comp_ok += cok;
      if ((!jok || !uok || !cok) && first_bad.empty())
        first_bad = "pair " + std::to_string(i) + ": ranks " + std::to_string(ra) + "," + std::to_string(rb) + " join " +
                    std::to_string(rj) + " union " + std::to_string(ru);
    } catch (std::exception const &e) {
      if (first_bad.empty()) first_bad = std::string("error: ") + e.what();
    }
  }
  std::string tail = first_bad.empty() ? "" : "; " + first_bad;
  c.add("join rank on 20 pairs", join_lemma, join_ok == 20 && plus_join > 0 && plus_join < 20,
        std::to_string(join_ok) + "/20 match, " + std::to_string(plus_join) + " with both centers nonempty" + tail);
  c.add("disjoint union rank on 20 pairs", union_lemma, union_ok == 20 && plus_union > 0 && plus_union < 20,
        std::to_string(union_ok) + "/20 match, " + std::to_string(plus_union) + " with both isolated sets nonempty" + tail);
  c.add("complement duality on 80 graphs", comp_lemma, comp_ok == 20, std::to_string(comp_ok) + "/20 pairs" + tail);
}

void criterion_audit(Collector &c, SuiteOptions const &opts) {
  std::string const audit_lemma = "Decomposition: rank-additivity, class leaves and action dichotomy";
  auto audit = [&](std::string const &name, Graph const &g, std::vector<std::string> const *expect,
                   std::string const &sig_lemma) {
    c.guard(name, audit_lemma, [&] {
      RelOutSpec spec(g);
      auto tree = decompose(spec);
      auto rep = verify_tree(spec, tree);
      c.add(name + " audit", audit_lemma, rep.ok(),
            "rank " + std::to_string(rep.rank) + ", restrictions " + std::to_string(rep.restrict_steps) +
                (rep.failures.empty() ? "" : ", " + rep.failures.front()));
      if (expect) {
        auto sig = base_case_signature(tree);
        c.add(name + " base cases", sig_lemma, sig == *expect, join_tokens(sig));
      }
    });
  };
  for (int d = 2; d <= 5; ++d) {
    auto e = expected_diamond_signature(d);
    audit("diamonds d=" + std::to_string(d), diamonds(d), &e, "Example: string of diamonds, base cases");
  }
  for (int i = 0; i < 10; ++i) {
    Graph t = suite_tree(mix(opts.seed, 3, i));
    auto e = expected_tree_signature(t);
    audit("tree " + std::to_string(i) + " (" + std::to_string(t.order()) + " vertices)", t, &e,
          "Example: trees, base cases");
  }
  for (int n = 1; n <= 5; ++n) audit("K_" + std::to_string(n), complete_graph(n), nullptr, "");
  for (int n = 1; n <= 5; ++n) audit("discrete " + std::to_string(n), discrete_graph(n), nullptr, "");
  audit("join(path 3, discrete 2)", graph_join(path_graph(3), discrete_graph(2)).graph, nullptr, "");
  audit("join(cycle 4, discrete 2)", graph_join(cycle_graph(4), discrete_graph(2)).graph, nullptr, "");
  audit("union(K_3, path 3)", disjoint_union(complete_graph(3), path_graph(3)).graph, nullptr, "");
  audit("union(star 3, K_2)", disjoint_union(star_graph(3), complete_graph(2)).graph, nullptr, "");
}

void criterion_sphericity(Collector &c, SuiteOptions const &opts) {
  HomologyOptions ho;
  ho.max_dimension = 12;
  std::string const rose_lemma = "Prop.: X(G,l) is (n-2)-spherical (rose: proper faces of a simplex)";
  for (int n = 2; n <= 5; ++n) {
    c.guard("rose_" + std::to_string(n), rose_lemma, [&] {
      LabelledGraph gl{rose(n), {}};
      auto x = build_poset(gl, SubgraphPosetKind::X);
      std::vector<EdgeMask> faces;
      for (EdgeMask m = 1; m + 1 < (EdgeMask{1} << n); ++m) faces.push_back(m);
      auto h = poset_homology(x.poset, ho);
      bool only = h.betti_at(n - 2) == 1;
      for (int d = -1; d <= h.top(); ++d)
        if (d != n - 2 && !h.vanishes_at(d)) only = false;
      c.add("rose_" + std::to_string(n), rose_lemma, x.elements == faces && only && h.torsion_at(n - 2).empty(),
            std::to_string(x.elements.size()) + " elements, " + h.summary());
    });
  }
  int pass = 0, rank2 = 0, rank2_ok = 0;
  std::string bad;
  for (int i = 0; i < 40; ++i) {
    try {
      std::mt19937_64 rng(mix(opts.seed, 4, i));
      int n = std::uniform_int_distribution<int>(2, 4)(rng);
      int e = std::uniform_int_distribution<int>(n, 9)(rng);
      auto gl = random_multigraph(n, e, 2, rng());
      auto rep = verify_sphericity(gl, ho);
      if (rep.ok()) ++pass;
      else if (bad.empty())
        bad = "graph " + std::to_string(i) + ": retraction " + std::to_string(rep.retraction) + ", collapse " +
              std::to_string(rep.collapse_invariance) + ", " + rep.spherical.report;
      if (n == 2) {
        ++rank2;
        auto cpos = build_poset(gl, SubgraphPosetKind::C);
        if (order_complex(cpos.poset).dimension() <= 0) ++rank2_ok;
      }
    } catch (std::exception const &ex) {
      if (bad.empty()) bad = std::string("error: ") + ex.what();
    }
  }
  c.add("40 random multigraphs", "Lemmas: X retracts to C; valence-one collapse; Prop.: X is (n-2)-spherical", pass == 40,
        std::to_string(pass) + "/40 pass all three checks" + (bad.empty() ? "" : "; " + bad));
  c.add("rank-2 core posets are discrete", "Prop.: base case n = 2, no simplex of dimension > 0",
        rank2 > 0 && rank2 == rank2_ok, std::to_string(rank2_ok) + "/" + std::to_string(rank2));
}

void criterion_buildings(Collector &c, SuiteOptions const &) {
  std::string const lemma = "Solomon-Tits: the building is a wedge of (n-2)-spheres";
  c.guard("F_2^3 building", lemma, [&] {
    auto lat = subspace_poset(3, 2);
    auto k = order_complex(lat.poset);
    auto h = reduced_homology(k);
    auto cm = certify_cm(k);
    c.add("F_2^3 building", lemma,
          lat.subspaces.size() == 14 && h.betti_at(1) == 8 && certify_spherical(k, 1).ok && k.euler_characteristic() == -7,
          std::to_string(lat.subspaces.size()) + " subspaces, " + h.summary());
    c.add("F_2^3 building is Cohen-Macaulay", lemma, cm.ok, cm.ok ? "all links spherical" : cm.report);
  });
  c.guard("F_2^4 building", lemma, [&] {
    auto lat = subspace_poset(4, 2);
    auto k = order_complex(lat.poset);
    auto h = reduced_homology(k);
    c.add("F_2^4 building", lemma, certify_spherical(k, 2).ok && h.betti_at(2) == 64,
          std::to_string(lat.subspaces.size()) + " subspaces, " + h.summary());
  });
}

void criterion_ses(Collector &c, SuiteOptions const &opts) {
  std::string const lemma = "Thm.: coset complexes and short exact sequences; Lemma: intersection with kernel";
  c.guard("S3 / A3 instance", lemma, [&] {
    auto s3 = symmetric_group(3);
    int t12 = -1;
    for (int x = 0; x < s3.order(); ++x) {
      auto const &p = s3.permutations()[x];
      if (p[0] == 1 && p[1] == 0 && p[2] == 2) t12 = x;
    }
    ElementSet a3(s3.order());
    for (int x = 0; x < s3.order(); ++x)
      if (s3.element_order(x) != 2) a3.set(x);
    auto fam = make_family(s3, {s3.set_of({s3.identity(), t12}), a3});
    auto left = coset_structures(s3, fam).complex;
    auto rep = verify_ses_join(s3, fam, a3);
    auto fv = left.f_vector();
    bool k32 = fv.size() == 2 && fv[0] == 5 && fv[1] == 6;
    c.add("S3 / A3 instance", lemma, k32 && rep.ok() && rep.left.betti_at(1) == 2 && rep.right.betti_at(1) == 2,
          "left " + rep.left.summary() + ", right " + rep.right.summary() + ", " + rep.detail);
  });
  int pass = 0, iso = 0;
  std::string bad;
  for (int i = 0; i < 50; ++i) {
    try {
      auto inst = random_strongly_divided(mix(opts.seed, 6, i));
      auto rep = verify_ses_join(inst.group, inst.family, inst.n);
      pass += rep.homology_equal;
      iso += rep.kernel_isomorphism;
      if (!rep.ok() && bad.empty()) bad = inst.group_name + ": " + rep.detail;
    } catch (std::exception const &e) {
      if (bad.empty()) bad = std::string("error: ") + e.what();
    }
  }
  c.add("50 random strongly divided instances", lemma, pass == 50,
        std::to_string(pass) + "/50 homology equal" + (bad.empty() ? "" : "; " + bad));
  c.add("kernel isomorphism nK -> n(K cap N)", "Lemma: intersection with kernel", iso == 50, std::to_string(iso) + "/50");
}

void criterion_small_lemmas(Collector &c, SuiteOptions const &opts) {
  c.guard("lemmas over the group table", "Lemma: subgroups multiplied by N", [&] {
    LemmaCount mul, dist;
    std::size_t groups = 0;
    for (auto const &ng : group_catalogue(24)) {
      auto a = check_multiplied_by_n(ng.group);
      auto b = check_distinct_in_quotient(ng.group);
      mul.checked += a.checked;
      mul.failures += a.failures;
      dist.checked += b.checked;
      dist.failures += b.failures;
      ++groups;
    }
    c.add("(HN cap K)N = HN", "Lemma: subgroups multiplied by N", mul.failures == 0 && mul.checked > 0,
          std::to_string(mul.checked) + " cases over " + std::to_string(groups) + " groups, " +
              std::to_string(mul.failures) + " failures");
    c.add("K1 cap N != K2 cap N", "Lemma: subgroups distinct in quotient", dist.failures == 0 && dist.checked > 0,
          std::to_string(dist.checked) + " cases, " + std::to_string(dist.failures) + " failures");
  });

  auto const &small = group_catalogue(24);
  int holz = 0;
  std::string bad;
  for (int i = 0; i < 30; ++i) {
    try {
      std::mt19937_64 rng(mix(opts.seed, 7, i));
      auto const &ng = small[std::uniform_int_distribution<std::size_t>(1, small.size() - 1)(rng)];
      if (ng.group.order() < 2) continue;
      auto fam = random_family(ng.group, rng(), 4);
      auto rep = closure_check(ng.group, fam);
      if (rep.ok()) ++holz;
      else if (bad.empty()) bad = ng.name + ": " + rep.family.summary() + " / " + rep.closure.summary();
    } catch (std::exception const &e) {
      if (bad.empty()) bad = std::string("error: ") + e.what();
    }
  }
  c.add("closure homology on 30 families", "Lemmas: CC(G,H) ~ CC(G,H~) ~ CP(G,H~) (Holz)", holz == 30,
        std::to_string(holz) + "/30" + (bad.empty() ? "" : "; " + bad));

  std::string const gen_lemma = "Thm.: H is 1-generating iff the union of H generates G";
  c.guard("generation examples", gen_lemma, [&] {
    auto z6 = cyclic_group(6);
    auto g6 = generation_check(z6, make_family(z6, {z6.set_of({0, 2, 4}), z6.set_of({0, 3})}));
    auto z4 = cyclic_group(4);
    auto g4 = generation_check(z4, make_family(z4, {z4.set_of({0, 2})}));
    auto s4 = symmetric_group(4);
    ElementSet y31(24), y22(24);
    for (int x = 0; x < 24; ++x) {
      auto const &p = s4.permutations()[x];
      if (p[3] == 3) y31.set(x);
      if ((p[0] < 2) == (p[1] < 2) && p[0] < 2) y22.set(x);
    }
    auto gs4 = generation_check(s4, make_family(s4, {y31, y22}));
    bool ok = g6.connected && g6.generates && !g4.connected && !g4.generates && gs4.connected && gs4.generates;
    c.add("Z/6, Z/4 and S4 examples", gen_lemma, ok,
          "Z/6 " + std::to_string(g6.connected) + std::to_string(g6.generates) + ", Z/4 " + std::to_string(g4.connected) +
              std::to_string(g4.generates) + ", S4 " + std::to_string(gs4.connected) + std::to_string(gs4.generates));
  });
  int agree = 0, yes = 0;
  bad.clear();
  for (int i = 0; i < 27; ++i) {
    try {
      std::mt19937_64 rng(mix(opts.seed, 71, i));
      auto const &ng = small[std::uniform_int_distribution<std::size_t>(1, small.size() - 1)(rng)];
      auto fam = random_family(ng.group, rng(), 3);
      auto rep = generation_check(ng.group, fam);
      agree += rep.agree();
      yes += rep.generates;
      if (!rep.agree() && bad.empty()) bad = ng.name;
    } catch (std::exception const &e) {
      if (bad.empty()) bad = std::string("error: ") + e.what();
    }
  }
  c.add("generation equivalence on 27 random families", gen_lemma, agree == 27,
        std::to_string(agree) + "/27 agree, " + std::to_string(yes) + " generating" + (bad.empty() ? "" : "; " + bad));
}

// CC(G, H') has vanishing reduced homology below |H'| - 1 for every subfamily.
bool cm_subfamilies(FiniteGroup const &g, std::vector<ElementSet> const &stabs, std::string &detail) {
  int k = static_cast<int>(stabs.size());
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<ElementSet> sub;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) sub.push_back(stabs[i]);
    auto h = reduced_homology(coset_nerve(g, sub).complex);
    for (int d = -1; d < static_cast<int>(sub.size()) - 1; ++d)
      if (!h.vanishes_at(d)) {
        detail = "subfamily " + std::to_string(mask) + ": " + h.summary();
        return false;
      }
  }
  return true;
}

void criterion_detect(Collector &c, SuiteOptions const &) {
  std::string const lemma = "Prop.: detecting CC (strict fundamental domain)";
  for (auto make : std::vector<std::function<ActionInstance()>>{[] { return flag_complex_instance(3, 2); },
                                                               [] { return coxeter_complex_instance(4); },
                                                               [] { return trivial_simplex_instance(3); }}) {
    c.guard("detect", lemma, [&] {
      auto inst = make();
      auto rep = detect_coset_complex(inst.group, inst.complex, inst.action, inst.facet);
      c.add(inst.name, lemma, rep.ok(), rep.detail);
      if (inst.group.order() > 1) {
        std::vector<ElementSet> stabs;
        for (int v : inst.facet) {
          ElementSet s(inst.group.order());
          for (int a = 0; a < inst.group.order(); ++a)
            if (inst.action.images[a][v] == v) s.set(a);
          stabs.push_back(s);
        }
        std::string detail;
        bool cm = certify_cm(inst.complex).ok;
        c.add(inst.name + ": subfamilies", "Thm.: characterisation of Cohen-Macaulay coset complexes",
              cm && cm_subfamilies(inst.group, stabs, detail), cm ? (detail.empty() ? "all subfamilies highly connected" : detail)
                                                                  : "complex is not Cohen-Macaulay");
      }
    });
  }
  c.guard("S4 Coxeter complex", lemma, [&] {
    auto inst = coxeter_complex_instance(4);
    auto fv = inst.complex.f_vector();
    auto h = reduced_homology(inst.complex);
    bool ok = fv.size() == 3 && fv[0] == 14 && fv[1] == 36 && fv[2] == 24 && inst.complex.euler_characteristic() == 2 &&
              h.betti_at(2) == 1 && certify_spherical(inst.complex, 2).ok;
    c.add("S4 Coxeter complex homology", "Prop.: building and coset complex (finite analog)", ok,
          "f = (" + join_tokens(fv) + "), chi " + std::to_string(inst.complex.euler_characteristic()) + ", " + h.summary());
  });
}

std::vector<std::pair<std::string, Graph>> corpus(SuiteOptions const &opts) {
  std::vector<std::pair<std::string, Graph>> out;
  for (int d = 1; d <= 6; ++d) out.push_back({"diamonds:" + std::to_string(d), diamonds(d)});
  for (int n = 1; n <= 6; ++n) out.push_back({"complete:" + std::to_string(n), complete_graph(n)});
  for (int n = 1; n <= 6; ++n) out.push_back({"discrete:" + std::to_string(n), discrete_graph(n)});
  for (int n = 2; n <= 7; ++n) out.push_back({"path:" + std::to_string(n), path_graph(n)});
  for (int n = 3; n <= 7; ++n) out.push_back({"cycle:" + std::to_string(n), cycle_graph(n)});
  for (int n = 2; n <= 6; ++n) out.push_back({"star:" + std::to_string(n), star_graph(n)});
  for (int i = 0; i < 10; ++i) out.push_back({"tree " + std::to_string(i), suite_tree(mix(opts.seed, 9, i))});
  for (int i = 0; i < 10; ++i) {
    std::mt19937_64 rng(mix(opts.seed, 90, i));
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    out.push_back({"random graph " + std::to_string(i), random_graph(n, 0.5, rng())});
  }
  return out;
}

void criterion_coxeter(Collector &c, SuiteOptions const &opts) {
  int match = 0, total = 0;
  std::size_t swaps = 0;
  bool sym = true;
  std::string bad;
  for (auto const &[name, g] : corpus(opts)) {
    ++total;
    try {
      RelOutSpec spec(g);
      auto d = aut0(spec);
      if (d.coxeter_rank == rank(spec)) ++match;
      else if (bad.empty()) bad = name;
      for (auto const &cls : equiv_classes(spec)) {
        auto m = cls.members.members();
        for (std::size_t a = 0; a < m.size(); ++a)
          for (std::size_t b = a + 1; b < m.size(); ++b) {
            std::vector<int> perm(g.order());
            for (int v = 0; v < g.order(); ++v) perm[v] = v;
            std::swap(perm[m[a]], perm[m[b]]);
            for (auto [x, y] : g.edges())
              if (!g.adjacent(perm[x], perm[y])) sym = false;
            ++swaps;
          }
      }
    } catch (std::exception const &e) {
      if (bad.empty()) bad = name + ": " + e.what();
    }
  }
  c.add("aut0 rank on the corpus", "Prop.: rank via Coxeter system", match == total,
        std::to_string(match) + "/" + std::to_string(total) + " graphs" + (bad.empty() ? "" : "; " + bad));
  c.add("within-class transpositions", "Lemma: algebraic graph automorphisms", sym && bad.empty(),
        std::to_string(swaps) + " transpositions checked edge by edge");
}

void criterion_parabolic_ranks(Collector &c, SuiteOptions const &opts) {
  std::string const lemma = "Prop.: rank of parabolic subgroups (rk(P) = m)";
  std::vector<std::pair<std::string, Graph>> cases{{"diamonds d=4", diamonds(4)}};
  for (int i = 0; cases.size() < 3 && i < 1000; ++i) {
    std::mt19937_64 rng(mix(opts.seed, 10, i));
    Graph t = random_tree(std::uniform_int_distribution<int>(9, 12)(rng), rng());
    if (graph_rank(t) >= 3) cases.push_back({"tree " + std::to_string(i), t});
  }
  for (auto const &[name, g] : cases) {
    c.guard(name, lemma, [&] {
      RelOutSpec spec(g);
      int r = rank(spec);
      auto ps = maximal_parabolics(spec);
      int checked = 0, good = 0;
      std::string bad;
      for (std::uint32_t mask = 1; mask + 1 < (1u << ps.size()); ++mask) {
        std::vector<Pick> picks;
        for (std::size_t i = 0; i < ps.size(); ++i)
          if (mask >> i & 1) picks.push_back({ps[i].class_rep, ps[i].j});
        int m = r - static_cast<int>(picks.size());
        int got = rank(parabolic_from_picks(spec, picks));
        ++checked;
        if (got == m) ++good;
        else if (bad.empty()) bad = "m=" + std::to_string(m) + " got " + std::to_string(got);
      }
      c.add(name + " (rank " + std::to_string(r) + ")", lemma, checked > 0 && good == checked,
            std::to_string(good) + "/" + std::to_string(checked) + " pick-sets" + (bad.empty() ? "" : "; " + bad));
    });
  }
}

struct CriterionDef {
  char const *title;
  double limit;
  void (*run)(Collector &, SuiteOptions const &);
};

CriterionDef const kCriteria[kCriterionCount] = {
    {"rank examples: diamonds and trees", 5, criterion_ranks},
    {"construction formulas: join, disjoint union, complement", 10, criterion_constructions},
    {"decomposition audit", 30, criterion_audit},
    {"sphericity of subgraph posets", 120, criterion_sphericity},
    {"finite buildings", 120, criterion_buildings},
    {"short exact sequences of coset complexes", 180, criterion_ses},
    {"small coset lemmas, closure and generation", 120, criterion_small_lemmas},
    {"detecting coset complexes", 60, criterion_detect},
    {"Coxeter rank", 5, criterion_coxeter},
    {"parabolic rank law", 10, criterion_parabolic_ranks},
};

} // namespace

std::vector<std::string> expected_tree_signature(Graph const &tree) {
  auto shape = tree_shape(tree);
  std::vector<std::string> out;
  // A star has a class with cone V, so no leftmost kernel is split off.
  if ((tree.vertices() - shape.leaves).size() > 1) out.push_back("LeftmostKernel");
  for (int i = 0; i < (tree.vertices() - shape.leaves).size(); ++i) out.push_back("CyclicOrderTwo");
  shape.hubs.for_each([&](int z) {
    int nz = (tree.link(z) & shape.leaves).size();
    int kz = (tree.link(z) - shape.leaves).size();
    out.push_back("TwistGroup(" + std::to_string(nz) + ")");
    out.push_back("FouxeRabinovitch(" + std::to_string(nz) + ";" + std::to_string(kz) + ")");
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> expected_diamond_signature(int d) {
  std::vector<std::string> out{"LeftmostKernel", "FouxeRabinovitch(1;1)", "FouxeRabinovitch(1;1)"};
  for (int i = 1; i < d; ++i) out.push_back("CyclicOrderTwo");
  for (int i = 0; i < d; ++i) out.push_back("FouxeRabinovitch(2;0)");
  std::sort(out.begin(), out.end());
  return out;
}

CriterionResult run_criterion(int id, SuiteOptions const &opts) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::Usage, "criterion must be 1.." + std::to_string(kCriterionCount));
  auto const &def = kCriteria[id - 1];
  CriterionResult res;
  res.id = id;
  res.title = def.title;
  res.limit_seconds = def.limit;
  Collector c{res.verdicts};
  auto t0 = std::chrono::steady_clock::now();
  try {
    def.run(c, opts);
  } catch (std::exception const &e) {
    c.add("criterion", def.title, false, std::string("error: ") + e.what());
  }
  res.seconds = elapsed(t0);
  // Seconds stay out of the details so reports are reproducible.
  char buf[64];
  std::snprintf(buf, sizeof buf, "under %.0f s", res.limit_seconds);
  c.add("runtime", "time budget", res.seconds < res.limit_seconds, buf);
  return res;
}

std::vector<CriterionResult> run_suite(SuiteOptions const &opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

Json to_json(Verdict const &v) {
  return {{"check", v.check}, {"lemma", v.lemma}, {"pass", v.pass}, {"details", v.details}};
}

Json to_json(CriterionResult const &c) {
  Json vs = Json::array();
  for (auto const &v : c.verdicts) vs.push_back(to_json(v));
  return {{"criterion", c.id}, {"title", c.title}, {"pass", c.pass()}, {"verdicts", vs}};
}

std::string summary_line(CriterionResult const &c) {
  std::string line = "criterion " + std::to_string(c.id) + ": " + (c.pass() ? "PASS" : "FAIL") + "  " + c.title;
  for (auto const &v : c.verdicts)
    if (!v.pass) {
      line += "  [failed: " + v.check + " - " + v.details + "]";
      break;
    }
  return line;
}

} // namespace raagcc
