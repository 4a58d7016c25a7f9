#include "raagcc/relgroup.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "raagcc/error.hpp"

namespace raagcc {

namespace {

// Packs the members of s that lie in delta into consecutive positions.
VertexSet compress(VertexSet s, VertexSet delta) {
  VertexSet out;
  int pos = 0;
  delta.for_each([&](int v) {
    if (s.contains(v))
      out.insert(pos);
    ++pos;
  });
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

bool is_union_of(VertexSet K, std::vector<VertexSet> const &parts) {
  for (auto p : parts)
    if (p.intersects(K) && !p.subset_of(K))
      return false;
  return true;
}

bool stabilizes_all(std::vector<LaurenceGenerator> const &gens, Graph const &g, VertexSet delta) {
  for (auto const &gen : gens)
    if (generator_action(g, gen, delta) == Action::Moves)
      return false;
  return true;
}

} // namespace

RelOutSpec::RelOutSpec(Graph g, std::vector<VertexSet> stab, std::vector<VertexSet> triv)
  : graph(std::move(g)), stabilized(std::move(stab)), trivial(std::move(triv)) {
  normalize();
}

void RelOutSpec::normalize() {
  VertexSet all = graph.vertices();
  for (auto *fam : {&stabilized, &trivial}) {
    for (auto s : *fam)
      if (s.empty() || s == all || !s.subset_of(all))
        throw Error(ErrorKind::InvalidInput, "family members must be nonempty proper vertex subsets");
    std::sort(fam->begin(), fam->end());
    fam->erase(std::unique(fam->begin(), fam->end()), fam->end());
  }
}

bool operator<(LaurenceGenerator const &a, LaurenceGenerator const &b) {
  auto key = [](LaurenceGenerator const &g) { return std::make_tuple(static_cast<int>(g.kind), g.v, g.w); };
  if (key(a) != key(b))
    return key(a) < key(b);
  return a.K < b.K;
}

std::string describe(Graph const &g, LaurenceGenerator const &gen) {
  switch (gen.kind) {
  case GeneratorKind::Inversion:
    return "inv(" + g.label(gen.v) + ")";
  case GeneratorKind::Transvection:
    return "tr(" + g.label(gen.v) + "->" + g.label(gen.w) + ")";
  case GeneratorKind::PartialConjugation: {
    std::string s = "pc(" + g.label(gen.v) + ";{";
    bool first = true;
    for (auto const &l : g.labels_of(gen.K)) {
      s += (first ? "" : ",") + l;
      first = false;
    }
    return s + "})";
  }
  }
  return "?";
}

char const *class_kind_name(ClassKind k) {
  switch (k) {
  case ClassKind::Abelian: return "abelian";
  case ClassKind::Free: return "free";
  case ClassKind::Singleton: return "singleton";
  }
  return "?";
}

char const *action_name(Action a) {
  switch (a) {
  case Action::Trivial: return "trivial";
  case Action::Stabilizes: return "stabilizes";
  case Action::Moves: return "moves";
  }
  return "?";
}

bool g_leq(RelOutSpec const &spec, int v, int w) {
  if (!standard_leq(spec.graph, v, w))
    return false;
  for (auto d : spec.stabilized)
    if (d.contains(v) && !d.contains(w))
      return false;
  if (v == w)
    return true;
  for (auto t : spec.trivial)
    if (t.contains(v))
      return false;
  return true;
}

std::vector<EquivClass> equiv_classes(RelOutSpec const &spec) {
  int n = spec.graph.order();
  std::vector<EquivClass> out;
  VertexSet done;
  for (int v = 0; v < n; ++v) {
    if (done.contains(v))
      continue;
    VertexSet cls = VertexSet::singleton(v);
    for (int w = v + 1; w < n; ++w)
      if (g_leq(spec, v, w) && g_leq(spec, w, v))
        cls.insert(w);
    done = done | cls;
    ClassKind kind = ClassKind::Singleton;
    if (cls.size() > 1) {
      if (spec.graph.is_complete(cls))
        kind = ClassKind::Abelian;
      else if (spec.graph.is_discrete(cls))
        kind = ClassKind::Free;
      else
        throw Error(ErrorKind::MixedClass, "equivalence class of '" + spec.graph.label(v) +
                                                "' is neither complete nor discrete");
    }
    out.push_back({cls, kind});
  }
  return out;
}

EquivClass class_of(RelOutSpec const &spec, int v) {
  spec.graph.check_vertex(v);
  for (auto const &c : equiv_classes(spec))
    if (c.members.contains(v))
      return c;
  throw Error(ErrorKind::InvalidVertex, "vertex not covered by classes");
}

std::vector<VertexSet> relative_components(RelOutSpec const &spec, int v) {
  Graph const &g = spec.graph;
  VertexSet outside = g.vertices() - g.star(v);
  UnionFind uf(g.order());
  outside.for_each([&](int x) {
    (g.link(x) & outside).for_each([&](int y) { uf.unite(x, y); });
  });
  auto merge = [&](VertexSet s) {
    s = s & outside;
    int first = s.least();
    s.for_each([&](int y) { uf.unite(first, y); });
  };
  for (auto d : spec.stabilized)
    if (!d.contains(v))
      merge(d);
  for (auto t : spec.trivial)
    merge(t);
  std::vector<VertexSet> comps;
  outside.for_each([&](int x) {
    int r = uf.find(x);
    for (auto &c : comps)
      if (uf.find(c.least()) == r) {
        c.insert(x);
        return;
      }
    comps.push_back(VertexSet::singleton(x));
  });
  return comps;
}

void check_generator(Graph const &g, LaurenceGenerator const &gen) {
  g.check_vertex(gen.v);
  switch (gen.kind) {
  case GeneratorKind::Inversion:
    return;
  case GeneratorKind::Transvection:
    g.check_vertex(gen.w);
    if (gen.v == gen.w)
      throw Error(ErrorKind::MalformedGenerator, "transvection with v = w");
    if (!standard_leq(g, gen.v, gen.w))
      throw Error(ErrorKind::MalformedGenerator,
                  "transvection " + describe(g, gen) + " needs lk(v) inside st(w)");
    return;
  case GeneratorKind::PartialConjugation: {
    VertexSet outside = g.vertices() - g.star(gen.v);
    if (gen.K.empty() || !gen.K.subset_of(outside) || !is_union_of(gen.K, g.components(outside)))
      throw Error(ErrorKind::MalformedGenerator,
                  "partial conjugation support must be a nonempty union of components of the complement of st(v)");
    return;
  }
  }
}

bool contains_generator(RelOutSpec const &spec, LaurenceGenerator const &gen) {
  check_generator(spec.graph, gen);
  switch (gen.kind) {
  case GeneratorKind::Inversion:
    for (auto t : spec.trivial)
      if (t.contains(gen.v))
        return false;
    return true;
  case GeneratorKind::Transvection:
    return g_leq(spec, gen.v, gen.w);
  case GeneratorKind::PartialConjugation:
    return is_union_of(gen.K, relative_components(spec, gen.v));
  }
  return false;
}

Action generator_action(Graph const &g, LaurenceGenerator const &gen, VertexSet delta) {
  check_generator(g, gen);
  switch (gen.kind) {
  case GeneratorKind::Inversion:
    return delta.contains(gen.v) ? Action::Stabilizes : Action::Trivial;
  case GeneratorKind::Transvection:
    if (!delta.contains(gen.v))
      return Action::Trivial;
    return delta.contains(gen.w) ? Action::Stabilizes : Action::Moves;
  case GeneratorKind::PartialConjugation: {
    VertexSet outside = delta - g.star(gen.v);
    if (!gen.K.intersects(delta) || outside.subset_of(gen.K))
      return Action::Trivial;
    return delta.contains(gen.v) ? Action::Stabilizes : Action::Moves;
  }
  }
  return Action::Moves;
}

std::vector<LaurenceGenerator> enumerate_generators(RelOutSpec const &spec) {
  Graph const &g = spec.graph;
  std::vector<LaurenceGenerator> out;
  for (int v = 0; v < g.order(); ++v) {
    auto inv = LaurenceGenerator::inversion(v);
    if (contains_generator(spec, inv))
      out.push_back(inv);
  }
  for (int v = 0; v < g.order(); ++v)
    for (int w = 0; w < g.order(); ++w)
      if (v != w && g_leq(spec, v, w))
        out.push_back(LaurenceGenerator::transvection(v, w));
  for (int v = 0; v < g.order(); ++v) {
    auto comps = relative_components(spec, v);
    if (comps.size() < 2)
      continue;
    for (auto K : comps)
      out.push_back(LaurenceGenerator::partial_conjugation(v, K));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool group_stabilizes(RelOutSpec const &spec, VertexSet delta) {
  return stabilizes_all(enumerate_generators(spec), spec.graph, delta);
}

bool acts_nontrivially(RelOutSpec const &spec, VertexSet delta) {
  for (auto const &gen : enumerate_generators(spec))
    if (generator_action(spec.graph, gen, delta) != Action::Trivial)
      return true;
  return false;
}

RelOutSpec saturate(RelOutSpec const &spec, SaturateOptions const &opts) {
  if (spec.saturated)
    return spec;
  Graph const &g = spec.graph;
  if (g.order() > opts.max_vertices)
    throw Error(ErrorKind::SizeLimit, "saturation limited to " + std::to_string(opts.max_vertices) + " vertices");
  auto classes = equiv_classes(spec);
  int k = static_cast<int>(classes.size());
  // above[i]: classes strictly above class i.
  std::vector<std::vector<int>> above(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && g_leq(spec, classes[i].members.least(), classes[j].members.least()))
        above[i].push_back(j);
  // Process classes so that every class comes after all classes above it.
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return above[a].size() < above[b].size(); });

  auto gens = enumerate_generators(spec);
  std::vector<VertexSet> found;
  long visited = 0;
  VertexSet all = g.vertices();
  std::vector<char> in(k, 0);
  auto rec = [&](auto &&self, int idx, VertexSet acc) -> void {
    if (idx == k) {
      if (++visited > opts.max_candidates)
        throw Error(ErrorKind::SizeLimit, "too many upward-closed vertex sets to saturate");
      if (!acc.empty() && acc != all && stabilizes_all(gens, g, acc))
        found.push_back(acc);
      return;
    }
    int c = order[idx];
    self(self, idx + 1, acc);
    bool ok = true;
    for (int a : above[c])
      if (!in[a])
        ok = false;
    if (ok) {
      in[c] = 1;
      self(self, idx + 1, acc | classes[c].members);
      in[c] = 0;
    }
  };
  rec(rec, 0, VertexSet());

  RelOutSpec out = spec;
  out.stabilized = std::move(found);
  out.normalize();
  for (auto d : spec.stabilized)
    if (!std::binary_search(out.stabilized.begin(), out.stabilized.end(), d))
      throw Error(ErrorKind::TheoremViolation, "saturation lost a stabilised family member");
  out.saturated = true;
  return out;
}

Cone conical(RelOutSpec const &spec, int v) {
  spec.graph.check_vertex(v);
  Cone c;
  for (int w = 0; w < spec.graph.order(); ++w)
    if (g_leq(spec, v, w)) {
      c.geq.insert(w);
      if (!g_leq(spec, w, v))
        c.gt.insert(w);
    }
  return c;
}

std::vector<VertexSet> trace_family(std::vector<VertexSet> const &family, VertexSet delta) {
  std::vector<VertexSet> out;
  for (auto t : family) {
    VertexSet s = t & delta;
    if (!s.empty() && s != delta)
      out.push_back(compress(s, delta));
  }
  return out;
}

RelOutSpec restrict_to_image(RelOutSpec const &spec, VertexSet delta) {
  RelOutSpec img(spec.graph.induced(delta), trace_family(spec.stabilized, delta),
                 trace_family(spec.trivial, delta));
  return img;
}

Restriction restrict(RelOutSpec const &spec, VertexSet delta) {
  if (!spec.saturated)
    throw Error(ErrorKind::NotSaturated, "restriction needs a saturated stabilised family");
  if (!std::binary_search(spec.stabilized.begin(), spec.stabilized.end(), delta))
    throw Error(ErrorKind::NotStabilized, "restriction target is not stabilised by the group");
  Restriction r;
  r.image = restrict_to_image(spec, delta);
  r.kernel = spec;
  r.kernel.trivial.push_back(delta);
  r.kernel.saturated = false;
  r.kernel.normalize();
  return r;
}

Projection project_center(RelOutSpec const &spec, int v) {
  Graph const &g = spec.graph;
  Cone cone = conical(spec, v);
  if (cone.geq != g.vertices())
    throw Error(ErrorKind::PreconditionViolated,
                "projection needs the whole graph to be the cone of '" + g.label(v) + "'");
  auto gens = enumerate_generators(spec);
  cone.gt.for_each([&](int w) {
    for (auto const &gen : gens)
      if (generator_action(g, gen, VertexSet::singleton(w)) != Action::Trivial)
        throw Error(ErrorKind::PreconditionViolated, "generator " + describe(g, gen) +
                                                         " acts non-trivially on the vertex '" + g.label(w) +
                                                         "' above '" + g.label(v) + "'");
  });
  Projection p;
  p.Z = cone.gt & g.link(v);
  p.delta = g.vertices() - p.Z;
  p.twist_rank = class_of(spec, v).members.size() * p.Z.size();
  if (p.Z.empty()) {
    p.image = spec;
  } else {
    p.image = restrict_to_image(spec, p.delta);
  }
  return p;
}

} // namespace raagcc
