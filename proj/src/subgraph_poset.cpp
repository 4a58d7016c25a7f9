#include "raagcc/subgraph_poset.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "raagcc/error.hpp"

namespace raagcc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::string fresh_label(std::vector<std::string> const &taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += '\'';
  return base;
}

} // namespace

Multigraph::Multigraph(std::vector<std::string> vertices) {
  for (auto &v : vertices) add_vertex(std::move(v));
}

int Multigraph::add_vertex(std::string label) {
  if (std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end())
    throw Error(ErrorKind::InvalidInput, "duplicate vertex label " + label);
  vertices_.push_back(std::move(label));
  return vertex_count() - 1;
}

void Multigraph::add_edge(int u, int v, std::string id) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorKind::InvalidVertex, "edge " + id + " has an endpoint outside the graph");
  for (auto const &e : edges_)
    if (e.id == id) throw Error(ErrorKind::InvalidInput, "duplicate edge id " + id);
  edges_.push_back({u, v, std::move(id)});
}

void Multigraph::add_edge(std::string const &u, std::string const &v, std::string id) {
  add_edge(vertex(u), vertex(v), std::move(id));
}

std::string const &Multigraph::label(int v) const {
  if (v < 0 || v >= vertex_count()) throw Error(ErrorKind::InvalidVertex, "vertex index out of range");
  return vertices_[v];
}

int Multigraph::vertex(std::string const &label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) throw Error(ErrorKind::InvalidVertex, "unknown vertex " + label);
  return static_cast<int>(it - vertices_.begin());
}

int Multigraph::edge_index(std::string const &id) const {
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[i].id == id) return i;
  throw Error(ErrorKind::UnknownEdge, "unknown edge " + id);
}

int Multigraph::component_count() const {
  UnionFind uf(vertex_count());
  int c = vertex_count();
  for (auto const &e : edges_)
    if (uf.unite(e.u, e.v)) --c;
  return c;
}

int Multigraph::rank() const { return edge_count() - vertex_count() + component_count(); }

std::vector<int> Multigraph::valences() const {
  std::vector<int> val(vertex_count(), 0);
  for (auto const &e : edges_) {
    ++val[e.u];
    ++val[e.v];
  }
  return val;
}

bool LabelledGraph::is_labelled(int v) const {
  return std::find(labelling.begin(), labelling.end(), v) != labelling.end();
}

void LabelledGraph::validate() const {
  for (int v : labelling)
    if (v < 0 || v >= graph.vertex_count())
      throw Error(ErrorKind::InvalidVertex, "label target outside the graph");
}

namespace {

// Vertex map for G/e: endpoints of e go to the new vertex, which takes the
// slot of the smaller endpoint.
std::pair<Multigraph, std::vector<int>> collapse(Multigraph const &g, int ei) {
  auto const &e = g.edges()[ei];
  if (e.is_loop()) throw Error(ErrorKind::CollapseOfLoop, "cannot collapse loop " + e.id);
  int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
  std::vector<int> map(g.vertex_count());
  std::vector<std::string> names;
  for (int v = 0, next = 0; v < g.vertex_count(); ++v) {
    if (v == gone) continue;
    map[v] = next++;
    if (v != keep) names.push_back(g.label(v));
    else names.push_back("");
  }
  map[gone] = map[keep];
  names[map[keep]] = fresh_label(names, "v_" + e.id);
  Multigraph out(names);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == ei) continue;
    auto const &f = g.edges()[i];
    out.add_edge(map[f.u], map[f.v], f.id);
  }
  return {std::move(out), std::move(map)};
}

Multigraph remove_edge(Multigraph const &g, int ei) {
  Multigraph out(g.vertices());
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != ei) out.add_edge(g.edges()[i].u, g.edges()[i].v, g.edges()[i].id);
  return out;
}

} // namespace

Multigraph edge_op(EdgeOp op, Multigraph const &g, std::string const &edge) {
  int ei = g.edge_index(edge);
  if (op == EdgeOp::Delete) return remove_edge(g, ei);
  return collapse(g, ei).first;
}

LabelledGraph edge_op(EdgeOp op, LabelledGraph const &gl, std::string const &edge) {
  gl.validate();
  int ei = gl.graph.edge_index(edge);
  if (op == EdgeOp::Delete) return {remove_edge(gl.graph, ei), gl.labelling};
  auto [g, map] = collapse(gl.graph, ei);
  LabelledGraph out{std::move(g), {}};
  for (int v : gl.labelling) out.labelling.push_back(map[v]);
  return out;
}

namespace {

// Restriction of gl to an edge subset, keeping spanned and labelled vertices.
LabelledGraph sub_labelled(LabelledGraph const &gl, std::vector<bool> const &keep_edge) {
  auto const &g = gl.graph;
  std::vector<bool> keep_vertex(g.vertex_count(), false);
  for (int i = 0; i < g.edge_count(); ++i)
    if (keep_edge[i]) keep_vertex[g.edges()[i].u] = keep_vertex[g.edges()[i].v] = true;
  for (int v : gl.labelling) keep_vertex[v] = true;
  std::vector<int> map(g.vertex_count(), -1);
  Multigraph out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep_vertex[v]) map[v] = out.add_vertex(g.label(v));
  for (int i = 0; i < g.edge_count(); ++i)
    if (keep_edge[i]) out.add_edge(map[g.edges()[i].u], map[g.edges()[i].v], g.edges()[i].id);
  LabelledGraph res{std::move(out), {}};
  for (int v : gl.labelling) res.labelling.push_back(map[v]);
  return res;
}

} // namespace

LabelledGraph core(LabelledGraph const &gl) {
  gl.validate();
  auto const &g = gl.graph;
  // Components with nontrivial fundamental group.
  UnionFind uf(g.vertex_count());
  for (auto const &e : g.edges()) uf.unite(e.u, e.v);
  std::vector<int> edges_in(g.vertex_count(), 0), verts_in(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++verts_in[uf.find(v)];
  for (auto const &e : g.edges()) ++edges_in[uf.find(e.u)];
  int big = -1, count = 0;
  for (int r = 0; r < g.vertex_count(); ++r)
    if (uf.find(r) == r && edges_in[r] - verts_in[r] + 1 > 0) {
      big = r;
      ++count;
    }
  if (count != 1)
    throw Error(ErrorKind::PreconditionViolated, "core needs exactly one component with nontrivial fundamental group");
  for (int v : gl.labelling)
    if (uf.find(v) != big)
      throw Error(ErrorKind::PreconditionViolated, "labelled vertex outside the non-tree component");

  std::vector<bool> keep(g.edge_count(), true);
  for (int i = 0; i < g.edge_count(); ++i)
    if (uf.find(g.edges()[i].u) != big) keep[i] = false;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> val(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i)
      if (keep[i]) {
        ++val[g.edges()[i].u];
        ++val[g.edges()[i].v];
      }
    for (int i = 0; i < g.edge_count(); ++i) {
      if (!keep[i]) continue;
      auto const &e = g.edges()[i];
      bool leaf_u = val[e.u] == 1 && !gl.is_labelled(e.u);
      bool leaf_v = val[e.v] == 1 && !gl.is_labelled(e.v);
      if (leaf_u || leaf_v) {
        keep[i] = false;
        --val[e.u];
        --val[e.v];
        changed = true;
      }
    }
  }
  return sub_labelled(gl, keep);
}

bool is_core_graph(LabelledGraph const &gl) {
  auto const &g = gl.graph;
  if (!g.connected() || g.rank() < 1) return false;
  auto val = g.valences();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (val[v] == 1 && !gl.is_labelled(v)) return false;
  return true;
}

SubgraphStats subgraph_stats(LabelledGraph const &gl, EdgeMask mask) {
  auto const &g = gl.graph;
  SubgraphStats s;
  std::vector<int> val(g.vertex_count(), 0);
  UnionFind uf(g.vertex_count());
  int edges = 0, merges = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(mask >> i & 1)) continue;
    auto const &e = g.edges()[i];
    ++edges;
    ++val[e.u];
    ++val[e.v];
    if (uf.unite(e.u, e.v)) ++merges;
  }
  for (int v : val)
    if (v > 0) ++s.vertices;
  int components = s.vertices - merges;
  s.connected = components == 1;
  s.rank = edges - s.vertices + components;
  s.covers_labels = true;
  for (int v : gl.labelling)
    if (val[v] == 0) s.covers_labels = false;
  s.core = s.connected && s.rank >= 1;
  for (int v = 0; v < g.vertex_count() && s.core; ++v)
    if (val[v] == 1 && !gl.is_labelled(v)) s.core = false;
  return s;
}

SubgraphPoset build_poset(LabelledGraph const &gl, SubgraphPosetKind which, SubgraphLimits const &limits) {
  gl.validate();
  auto const &g = gl.graph;
  if (!g.connected()) throw Error(ErrorKind::DisconnectedInput, "subgraph posets need a connected graph");
  int n = g.rank();
  if (n < 1) throw Error(ErrorKind::PreconditionViolated, "graph is a tree");
  int m = g.edge_count();
  if (m > limits.max_edges || m > 62)
    throw Error(ErrorKind::SizeLimit, "too many edges for subset enumeration: " + std::to_string(m));

  SubgraphPoset out;
  EdgeMask full = (EdgeMask{1} << m) - 1;
  for (EdgeMask mask = 1; mask < full; ++mask) {
    auto s = subgraph_stats(gl, mask);
    if (!s.connected || s.rank < 1 || s.rank >= n || !s.covers_labels) continue;
    if (which == SubgraphPosetKind::C && !s.core) continue;
    out.elements.push_back(mask);
  }
  std::vector<std::string> names;
  for (EdgeMask mask : out.elements) {
    std::string name;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) name += (name.empty() ? "" : ",") + g.edges()[i].id;
    names.push_back("{" + name + "}");
  }
  auto const &el = out.elements;
  out.poset = FinitePoset(
      static_cast<int>(el.size()), [&](int i, int j) { return (el[i] & ~el[j]) == 0; }, std::move(names));
  return out;
}

SphericityReport verify_sphericity(LabelledGraph const &gl, HomologyOptions const &opts) {
  SphericityReport rep;
  rep.rank = gl.graph.rank();
  if (!gl.graph.connected()) throw Error(ErrorKind::DisconnectedInput, "graph is disconnected");
  if (rep.rank < 2) throw Error(ErrorKind::PreconditionViolated, "needs rank at least 2");

  auto x = build_poset(gl, SubgraphPosetKind::X);
  auto c = build_poset(gl, SubgraphPosetKind::C);
  rep.x_size = x.elements.size();
  rep.c_size = c.elements.size();
  rep.x_homology = poset_homology(x.poset, opts);
  rep.c_homology = poset_homology(c.poset, opts);
  rep.retraction = rep.x_homology == rep.c_homology;

  auto val = gl.graph.valences();
  for (auto const &e : gl.graph.edges()) {
    if (e.is_loop() || (val[e.u] != 1 && val[e.v] != 1)) continue;
    auto collapsed = edge_op(EdgeOp::Collapse, gl, e.id);
    auto h = poset_homology(build_poset(collapsed, SubgraphPosetKind::X).poset, opts);
    rep.collapsed.push_back(e.id);
    if (!(h == rep.x_homology)) rep.collapse_invariance = false;
  }
  // Homology only depends on the homotopy type, so the beat core stands in for X.
  rep.spherical = certify_spherical(order_complex(beat_core(x.poset)), rep.rank - 2, opts);
  return rep;
}

Multigraph rose(int n) {
  Multigraph g({"o"});
  for (int i = 1; i <= n; ++i) g.add_edge(0, 0, "e" + std::to_string(i));
  return g;
}

Multigraph theta_graph(int k) {
  Multigraph g({"p", "q"});
  for (int i = 1; i <= k; ++i) g.add_edge(0, 1, "e" + std::to_string(i));
  return g;
}

LabelledGraph random_multigraph(int n, int edges, int max_labels, std::uint64_t seed) {
  int verts = edges - n + 1;
  if (n < 0 || verts < 1) throw Error(ErrorKind::InvalidInput, "edge count too small for the requested rank");
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (int i = 0; i < verts; ++i) names.push_back("v" + std::to_string(i));
  Multigraph g(names);
  int id = 0;
  for (int v = 1; v < verts; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    g.add_edge(parent(rng), v, "e" + std::to_string(++id));
  }
  std::uniform_int_distribution<int> any(0, verts - 1);
  for (int i = 0; i < n; ++i) {
    int a = any(rng), b = any(rng);
    g.add_edge(a, b, "e" + std::to_string(++id));
  }
  LabelledGraph gl{std::move(g), {}};
  int k = std::uniform_int_distribution<int>(0, std::min(max_labels, verts))(rng);
  std::vector<int> pool(verts);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  gl.labelling.assign(pool.begin(), pool.begin() + k);
  return gl;
}

} // namespace raagcc
