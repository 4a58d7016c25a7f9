#include "raagcc/finite_coset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "raagcc/error.hpp"

namespace raagcc {

bool SubgroupFamily::contains(ElementSet const &h) const {
  return std::find(members.begin(), members.end(), h) != members.end();
}

SubgroupFamily make_family(FiniteGroup const &g, std::vector<ElementSet> members) {
  for (auto const &h : members) {
    if (!is_subgroup(g, h)) throw Error(ErrorKind::ImproperSubgroup, "family member is not a subgroup");
    if (static_cast<int>(h.count()) == g.order()) throw Error(ErrorKind::ImproperSubgroup, "family member equals the whole group");
  }
  std::sort(members.begin(), members.end(), subset_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {std::move(members)};
}

namespace {

// Faces of a nerve are bounded by |G| * 2^|H|.
HomologyOptions nerve_options(FiniteGroup const &g, std::size_t members, HomologyOptions opts) {
  if (members > 20 || static_cast<double>(g.order()) * std::ldexp(1.0, static_cast<int>(members)) > 4e6)
    throw Error(ErrorKind::SizeLimit, "coset nerve too large");
  opts.max_dimension = std::max(opts.max_dimension, static_cast<int>(members));
  return opts;
}

} // namespace

CosetNerve coset_nerve(FiniteGroup const &g, std::vector<ElementSet> const &subgroups) {
  CosetNerve out;
  if (subgroups.empty()) return out;
  std::vector<std::vector<int>> vertex_of(subgroups.size(), std::vector<int>(g.order(), -1));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    for (int x = 0; x < g.order(); ++x) {
      if (vertex_of[i][x] >= 0) continue;
      int id = static_cast<int>(out.cosets.size());
      auto c = left_coset(g, x, subgroups[i]);
      for (int y : members(c)) vertex_of[i][y] = id;
      out.cosets.push_back({static_cast<int>(i), std::move(c)});
      labels.push_back(std::to_string(x) + "H" + std::to_string(i));
    }
  std::vector<Face> gens;
  for (int x = 0; x < g.order(); ++x) {
    Face f;
    for (std::size_t i = 0; i < subgroups.size(); ++i) f.push_back(vertex_of[i][x]);
    std::sort(f.begin(), f.end());
    gens.push_back(std::move(f));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  out.complex = SimplicialComplex(static_cast<int>(out.cosets.size()), gens, std::move(labels));
  return out;
}

CosetStructures coset_structures(FiniteGroup const &g, SubgroupFamily const &family) {
  if (family.empty()) throw Error(ErrorKind::PreconditionViolated, "empty subgroup family");
  auto checked = make_family(g, family.members);
  auto nerve = coset_nerve(g, checked.members);
  CosetStructures out;
  out.cosets = std::move(nerve.cosets);
  out.complex = std::move(nerve.complex);
  auto const &cs = out.cosets;
  out.poset = FinitePoset(
      static_cast<int>(cs.size()), [&](int a, int b) { return cs[a].elements.is_subset_of(cs[b].elements); },
      out.complex.labels());
  return out;
}

SubgroupFamily intersection_closure(FiniteGroup const &g, SubgroupFamily const &family) {
  std::set<ElementSet> seen(family.members.begin(), family.members.end());
  std::vector<ElementSet> all(family.members.begin(), family.members.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto x = all[i] & all[j];
      if (seen.insert(x).second) all.push_back(std::move(x));
    }
  return make_family(g, std::move(all));
}

namespace {

void require_normal(FiniteGroup const &g, ElementSet const &n) {
  if (static_cast<int>(n.size()) != g.order() || !is_normal(g, n))
    throw Error(ErrorKind::NotNormal, "N is not a normal subgroup");
}

bool is_full(FiniteGroup const &g, ElementSet const &s) { return static_cast<int>(s.count()) == g.order(); }

} // namespace

FamilySplit split_family(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n) {
  require_normal(g, n);
  FamilySplit out;
  for (auto const &h : family.members)
    (is_full(g, product_set(g, h, n)) ? out.upper : out.lower).members.push_back(h);
  return out;
}

QuotientFamily quotient_family(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n) {
  auto split = split_family(g, family, n);
  QuotientFamily out{quotient(g, n), {}};
  std::vector<ElementSet> imgs;
  for (auto const &h : split.lower.members) imgs.push_back(image(out.q, h));
  out.family = make_family(out.q.group, std::move(imgs));
  return out;
}

namespace {

std::vector<ElementSet> kernel_list(Embedded const &e, FiniteGroup const &g, SubgroupFamily const &upper,
                                    ElementSet const &n) {
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < e.embedding.size(); ++i) local[e.embedding[i]] = static_cast<int>(i);
  std::vector<ElementSet> out;
  for (auto const &k : upper.members) {
    ElementSet s(e.group.order());
    for (int x : members(k & n)) s.set(local[x]);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace

KernelFamily intersect_family(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n) {
  auto split = split_family(g, family, n);
  KernelFamily out{as_group(g, n), {}};
  out.family = make_family(out.n.group, kernel_list(out.n, g, split.upper, n));
  return out;
}

DividedVerdict divided_predicates(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n) {
  auto split = split_family(g, family, n);
  DividedVerdict v;
  v.divided = true;
  for (auto const &h : split.lower.members) {
    auto hn = product_set(g, h, n);
    if (!family.contains(hn)) v.divided = false;
    for (auto const &k : split.upper.members)
      if (!family.contains(hn & k)) v.divided = false;
  }
  v.strongly_divided = true;
  for (auto const &h : split.lower.members)
    if (!n.is_subset_of(h)) v.strongly_divided = false;
  if (!split.upper.empty()) {
    auto closure = intersection_closure(g, split.upper);
    for (auto const &k : closure.members)
      if (!is_full(g, product_set(g, k, n))) v.strongly_divided = false;
  }
  return v;
}

namespace {

std::set<Face> all_faces(SimplicialComplex const &k) {
  std::set<Face> out;
  for (int d = 0; d <= k.dimension(); ++d)
    for (auto const &f : k.faces(d)) out.insert(f);
  return out;
}

HomologyResult nerve_homology(FiniteGroup const &g, std::vector<ElementSet> const &subgroups,
                              HomologyOptions const &opts) {
  auto o = nerve_options(g, subgroups.size(), opts);
  return reduced_homology(coset_nerve(g, subgroups).complex, o);
}

} // namespace

SesReport verify_ses_join(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n,
                          HomologyOptions const &opts) {
  auto verdict = divided_predicates(g, family, n);
  if (!verdict.strongly_divided) throw Error(ErrorKind::NotStronglyDivided, "family is not strongly divided by N");
  SesReport rep;
  auto o = nerve_options(g, family.size(), opts);
  rep.left = reduced_homology(coset_nerve(g, family.members).complex, o);

  auto qf = quotient_family(g, family, n);
  auto kf = intersect_family(g, family, n);
  rep.quotient_members = qf.family.size();
  rep.kernel_members = kf.family.size();
  auto qc = coset_nerve(qf.q.group, qf.family.members).complex;
  auto kc = coset_nerve(kf.n.group, kf.family.members).complex;
  rep.right = reduced_homology(simplicial_join(qc, kc), o);
  rep.homology_equal = rep.left == rep.right;

  // Explicit vertex map nK -> n(K cap N).
  auto split = split_family(g, family, n);
  auto klist = kernel_list(kf.n, g, split.upper, n);
  auto left = coset_nerve(g, split.upper.members);
  auto right = coset_nerve(kf.n.group, klist);
  std::set<ElementSet> distinct(klist.begin(), klist.end());
  rep.kernel_isomorphism = distinct.size() == klist.size();
  if (!rep.kernel_isomorphism) rep.detail = "two members of H^N meet N in the same subgroup";

  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < kf.n.embedding.size(); ++i) local[kf.n.embedding[i]] = static_cast<int>(i);
  std::map<std::pair<int, ElementSet>, int> right_index;
  for (std::size_t v = 0; v < right.cosets.size(); ++v)
    right_index[{right.cosets[v].member, right.cosets[v].elements}] = static_cast<int>(v);
  std::vector<int> psi(left.cosets.size(), -1);
  for (std::size_t v = 0; v < left.cosets.size() && rep.kernel_isomorphism; ++v) {
    auto const &c = left.cosets[v];
    auto meet = c.elements & n;
    if (meet.none()) {
      rep.kernel_isomorphism = false;
      rep.detail = "a coset of H^N misses N";
      break;
    }
    int rep_elem = local[static_cast<int>(meet.find_first())];
    auto target = left_coset(kf.n.group, rep_elem, klist[c.member]);
    auto it = right_index.find({c.member, target});
    if (it == right_index.end()) {
      rep.kernel_isomorphism = false;
      rep.detail = "image coset not found";
      break;
    }
    psi[v] = it->second;
  }
  if (rep.kernel_isomorphism) {
    std::set<int> hit(psi.begin(), psi.end());
    if (hit.size() != right.cosets.size() || psi.size() != right.cosets.size()) {
      rep.kernel_isomorphism = false;
      rep.detail = "vertex map is not a bijection";
    }
  }
  if (rep.kernel_isomorphism) {
    std::set<Face> mapped;
    auto lf = all_faces(left.complex);
    for (auto const &f : lf) {
      Face m;
      for (int v : f) m.push_back(psi[v]);
      std::sort(m.begin(), m.end());
      mapped.insert(std::move(m));
    }
    if (mapped.size() != lf.size() || mapped != all_faces(right.complex)) {
      rep.kernel_isomorphism = false;
      rep.detail = "face sets differ under the vertex map";
    }
  }
  if (rep.ok()) rep.detail = "homology equal and kernel map is a simplicial isomorphism";
  else if (!rep.homology_equal && rep.detail.empty()) rep.detail = "homology differs: " + rep.left.summary() + " vs " + rep.right.summary();
  return rep;
}

GenerationReport generation_check(FiniteGroup const &g, SubgroupFamily const &family) {
  GenerationReport rep;
  ElementSet all(g.order());
  for (auto const &h : family.members) all |= h;
  rep.generates = is_full(g, generated_subgroup(g, all));
  if (family.empty()) return rep;
  auto nerve = coset_nerve(g, family.members);
  int nv = static_cast<int>(nerve.cosets.size());
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = nv;
  for (auto const &e : nerve.complex.faces(1)) {
    int a = find(e[0]), b = find(e[1]);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  rep.connected = comps == 1;
  return rep;
}

LemmaCount check_multiplied_by_n(FiniteGroup const &g) {
  LemmaCount c;
  auto subs = all_subgroups(g);
  for (auto const &n : subs) {
    if (!is_normal(g, n)) continue;
    for (auto const &k : subs) {
      if (!is_full(g, product_set(g, k, n))) continue;
      for (auto const &h : subs) {
        auto hn = product_set(g, h, n);
        ++c.checked;
        if (product_set(g, hn & k, n) != hn) ++c.failures;
      }
    }
  }
  return c;
}

LemmaCount check_distinct_in_quotient(FiniteGroup const &g) {
  LemmaCount c;
  auto subs = all_subgroups(g);
  for (auto const &n : subs) {
    if (!is_normal(g, n)) continue;
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j) {
        if (!is_full(g, product_set(g, subs[i] & subs[j], n))) continue;
        ++c.checked;
        if ((subs[i] & n) == (subs[j] & n)) ++c.failures;
      }
  }
  return c;
}

ClosureReport closure_check(FiniteGroup const &g, SubgroupFamily const &family, HomologyOptions const &opts) {
  ClosureReport rep;
  auto closed = intersection_closure(g, family);
  rep.family = nerve_homology(g, family.members, opts);
  rep.closure = nerve_homology(g, closed.members, opts);
  rep.closure_poset = poset_homology(coset_structures(g, closed).poset, nerve_options(g, closed.size(), opts));
  return rep;
}

namespace {

std::vector<NamedGroup> const &cached_catalogue(int max_order) {
  static std::map<int, std::vector<NamedGroup>> cache;
  auto it = cache.find(max_order);
  if (it == cache.end()) it = cache.emplace(max_order, group_catalogue(max_order)).first;
  return it->second;
}

template <class T>
std::vector<T> sample(std::vector<T> pool, std::size_t k, std::mt19937_64 &rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(k, pool.size()));
  return pool;
}

} // namespace

SubgroupFamily random_family(FiniteGroup const &g, std::uint64_t seed, int max_members) {
  std::mt19937_64 rng(seed);
  auto subs = all_subgroups(g);
  subs.pop_back();  // the whole group sorts last
  if (subs.empty()) throw Error(ErrorKind::PreconditionViolated, "trivial group has no proper subgroups");
  int k = std::uniform_int_distribution<int>(1, max_members)(rng);
  return make_family(g, sample(subs, k, rng));
}

SesInstance random_strongly_divided(std::uint64_t seed, int max_order) {
  std::mt19937_64 rng(seed);
  auto const &cat = cached_catalogue(max_order);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto const &ng = cat[std::uniform_int_distribution<std::size_t>(0, cat.size() - 1)(rng)];
    auto const &g = ng.group;
    if (g.order() < 2) continue;
    auto subs = all_subgroups(g);
    std::vector<ElementSet> normals;
    for (auto const &s : subs)
      if (s.count() > 1 && !is_full(g, s) && is_normal(g, s)) normals.push_back(s);
    if (normals.empty()) continue;
    auto n = normals[std::uniform_int_distribution<std::size_t>(0, normals.size() - 1)(rng)];
    std::vector<ElementSet> uppers, comps;
    for (auto const &s : subs) {
      if (is_full(g, s)) continue;
      if (n.is_subset_of(s)) uppers.push_back(s);
      else if (is_full(g, product_set(g, s, n))) comps.push_back(s);
    }
    if (comps.empty()) continue;
    auto a = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(2, uppers.size()))(rng);
    auto b = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, comps.size()))(rng);
    auto chosen = sample(uppers, a, rng);
    for (auto &k : sample(comps, b, rng)) chosen.push_back(std::move(k));
    auto fam = make_family(g, chosen);
    if (!divided_predicates(g, fam, n).strongly_divided) continue;
    return {ng.name, g, n, fam};
  }
  throw Error(ErrorKind::PreconditionViolated, "no strongly divided instance found");
}

SubspaceLattice subspace_poset(int n, int q) {
  if (q != 2 && q != 3) throw Error(ErrorKind::InvalidInput, "field size must be 2 or 3");
  if (n < 2) throw Error(ErrorKind::InvalidInput, "dimension must be at least 2");
  if (n > 4) throw Error(ErrorKind::SizeLimit, "dimension above 4");
  int size = 1;
  for (int i = 0; i < n; ++i) size *= q;
  auto combine = [&](int a, int b, int s) {  // a + s * b
    int out = 0;
    for (int place = 1; place < size; place *= q) {
      int da = a / place % q, db = b / place % q;
      out += (da + s * db) % q * place;
    }
    return out;
  };
  using Bits = boost::dynamic_bitset<>;
  auto extend = [&](Bits const &span, int v) {
    Bits out = span;
    for (auto x = span.find_first(); x != Bits::npos; x = span.find_next(x))
      for (int s = 1; s < q; ++s) out.set(combine(static_cast<int>(x), v, s));
    return out;
  };
  SubspaceLattice lat;
  lat.n = n;
  lat.q = q;
  Bits zero(size);
  zero.set(0);
  std::set<Bits> seen;
  std::vector<Bits> frontier{zero};
  std::vector<std::pair<int, Bits>> found;
  for (int d = 1; d < n; ++d) {
    std::vector<Bits> next;
    for (auto const &s : frontier)
      for (int v = 1; v < size; ++v)
        if (!s[v]) {
          auto t = extend(s, v);
          if (seen.insert(t).second) {
            next.push_back(t);
            found.push_back({d, t});
          }
        }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](auto const &a, auto const &b) {
    if (a.first != b.first) return a.first < b.first;
    return subset_less(a.second, b.second);
  });
  std::vector<std::string> labels;
  for (auto &[d, s] : found) {
    lat.dims.push_back(d);
    std::string name = "<";
    for (auto x = s.find_next(0); x != Bits::npos; x = s.find_next(x)) name += (name.size() > 1 ? "," : "") + std::to_string(x);
    labels.push_back(name + ">");
    lat.subspaces.push_back(std::move(s));
  }
  auto const &ss = lat.subspaces;
  lat.poset = FinitePoset(
      static_cast<int>(ss.size()), [&](int a, int b) { return ss[a].is_subset_of(ss[b]); }, std::move(labels));
  return lat;
}

ActionInstance flag_complex_instance(int n, int q) {
  auto lat = subspace_poset(n, q);
  ActionInstance inst;
  inst.name = "GL(" + std::to_string(n) + "," + std::to_string(q) + ") on its flag complex";
  inst.group = general_linear_group(n, q);
  inst.complex = order_complex(lat.poset);
  std::map<boost::dynamic_bitset<>, int> index;
  for (std::size_t i = 0; i < lat.subspaces.size(); ++i) index[lat.subspaces[i]] = static_cast<int>(i);
  for (auto const &p : inst.group.permutations()) {
    std::vector<int> img;
    for (auto const &s : lat.subspaces) {
      boost::dynamic_bitset<> t(s.size());
      t.set(0);
      for (auto x = s.find_next(0); x != boost::dynamic_bitset<>::npos; x = s.find_next(x)) t.set(p[x - 1] + 1);
      img.push_back(index.at(t));
    }
    inst.action.images.push_back(std::move(img));
  }
  // span(e_1, ..., e_k) is the set of codes below q^k
  int bound = 1;
  for (int k = 1; k < n; ++k) {
    bound *= q;
    boost::dynamic_bitset<> s(lat.subspaces[0].size());
    for (int x = 0; x < bound; ++x) s.set(x);
    inst.facet.push_back(index.at(s));
  }
  std::sort(inst.facet.begin(), inst.facet.end());
  return inst;
}

ActionInstance coxeter_complex_instance(int n) {
  if (n < 2 || n > 6) throw Error(ErrorKind::SizeLimit, "Coxeter complex instance needs 2 <= n <= 6");
  std::vector<unsigned> subsets;
  for (unsigned m = 1; m + 1 < (1u << n); ++m) subsets.push_back(m);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  std::map<unsigned, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    index[subsets[i]] = static_cast<int>(i);
    std::string name = "{";
    for (int b = 0; b < n; ++b)
      if (subsets[i] >> b & 1) name += (name.size() > 1 ? "," : "") + std::to_string(b);
    labels.push_back(name + "}");
  }
  FinitePoset p(
      static_cast<int>(subsets.size()), [&](int a, int b) { return (subsets[a] & ~subsets[b]) == 0; }, labels);
  ActionInstance inst;
  inst.name = "S" + std::to_string(n) + " on its Coxeter complex";
  inst.group = symmetric_group(n);
  inst.complex = order_complex(p);
  for (auto const &perm : inst.group.permutations()) {
    std::vector<int> img;
    for (unsigned m : subsets) {
      unsigned t = 0;
      for (int b = 0; b < n; ++b)
        if (m >> b & 1) t |= 1u << perm[b];
      img.push_back(index.at(t));
    }
    inst.action.images.push_back(std::move(img));
  }
  for (int k = 1; k < n; ++k) inst.facet.push_back(index.at((1u << k) - 1));
  std::sort(inst.facet.begin(), inst.facet.end());
  return inst;
}

ActionInstance trivial_simplex_instance(int k) {
  ActionInstance inst;
  inst.name = "trivial group on a simplex";
  inst.group = cyclic_group(1);
  inst.complex = full_simplex(k);
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  inst.action.images.push_back(id);
  inst.facet = id;
  return inst;
}

DetectReport detect_coset_complex(FiniteGroup const &g, SimplicialComplex const &k, GroupAction const &action,
                                  Face const &facet) {
  DetectReport rep;
  int nv = k.vertex_count();
  auto const &im = action.images;
  if (static_cast<int>(im.size()) != g.order())
    throw Error(ErrorKind::HypothesisViolated, "action needs one vertex map per group element");
  for (auto const &p : im) {
    std::vector<bool> seen(nv, false);
    if (static_cast<int>(p.size()) != nv) throw Error(ErrorKind::HypothesisViolated, "vertex map has the wrong size");
    for (int x : p) {
      if (x < 0 || x >= nv || seen[x]) throw Error(ErrorKind::HypothesisViolated, "vertex map is not a bijection");
      seen[x] = true;
    }
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int v = 0; v < nv; ++v)
        if (im[g.mul(a, b)][v] != im[a][im[b][v]]) throw Error(ErrorKind::HypothesisViolated, "vertex maps do not form an action");
  auto apply = [&](int a, Face const &f) {
    Face out;
    for (int v : f) out.push_back(im[a][v]);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto maximal = k.maximal_faces();
  for (int a = 0; a < g.order(); ++a)
    for (auto const &f : maximal)
      if (!k.contains(apply(a, f))) throw Error(ErrorKind::HypothesisViolated, "action is not simplicial");
  rep.action_valid = true;
  Face c = facet;
  std::sort(c.begin(), c.end());
  if (std::find(maximal.begin(), maximal.end(), c) == maximal.end())
    throw Error(ErrorKind::HypothesisViolated, "facet is not a maximal face");

  // Every simplex is a translate of exactly one face of the facet.
  rep.fundamental_domain = true;
  for (int d = 0; d <= k.dimension() && rep.fundamental_domain; ++d)
    for (auto const &f : k.faces(d)) {
      std::set<Face> hits;
      for (int a = 0; a < g.order(); ++a) {
        auto t = apply(a, f);
        if (std::includes(c.begin(), c.end(), t.begin(), t.end())) hits.insert(std::move(t));
      }
      if (hits.size() != 1) {
        rep.fundamental_domain = false;
        rep.detail = "a simplex meets the facet in " + std::to_string(hits.size()) + " orbit representatives";
        break;
      }
    }

  std::vector<ElementSet> stabs;
  for (int v : c) {
    ElementSet s(g.order());
    for (int a = 0; a < g.order(); ++a)
      if (im[a][v] == v) s.set(a);
    rep.stabilizer_orders.push_back(static_cast<int>(s.count()));
    stabs.push_back(std::move(s));
  }
  auto nerve = coset_nerve(g, stabs);
  std::vector<int> psi;
  rep.isomorphism = true;
  for (auto const &cs : nerve.cosets) {
    auto ms = members(cs.elements);
    int target = im[ms[0]][c[cs.member]];
    for (int a : ms)
      if (im[a][c[cs.member]] != target) rep.isomorphism = false;
    psi.push_back(target);
  }
  std::set<int> hit(psi.begin(), psi.end());
  if (static_cast<int>(hit.size()) != nv || static_cast<int>(psi.size()) != nv) rep.isomorphism = false;
  if (rep.isomorphism) {
    auto nf = all_faces(nerve.complex);
    std::set<Face> mapped;
    for (auto const &f : nf) {
      Face m;
      for (int v : f) m.push_back(psi[v]);
      std::sort(m.begin(), m.end());
      mapped.insert(std::move(m));
    }
    rep.isomorphism = mapped.size() == nf.size() && mapped == all_faces(k);
  }
  if (rep.detail.empty())
    rep.detail = rep.isomorphism ? "g Stab(v) -> g.v is a simplicial isomorphism" : "coset map is not an isomorphism";
  return rep;
}

} // namespace raagcc
