#include "raagcc/graph.hpp"

#include <algorithm>
#include <set>

#include "raagcc/error.hpp"

namespace raagcc {

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members)
    insert(v);
}

VertexSet VertexSet::range(int n) {
  if (n >= 64)
    return VertexSet(~std::uint64_t{0});
  return VertexSet((std::uint64_t{1} << n) - 1);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool operator<(VertexSet a, VertexSet b) {
  // Lexicographic on sorted members: the first differing vertex decides,
  // and a proper prefix sorts first.
  std::uint64_t diff = a.bits_ ^ b.bits_;
  if (!diff)
    return false;
  int first = __builtin_ctzll(diff);
  std::uint64_t above = first == 63 ? 0 : ~std::uint64_t{0} << (first + 1);
  if (a.contains(first))
    return (b.bits_ & above) != 0;
  return (a.bits_ & above) == 0;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxGraphVertices)
    throw Error(ErrorKind::SizeLimit, "graph order must be in 0.." + std::to_string(kMaxGraphVertices));
  labels_.reserve(n);
  for (int i = 0; i < n; ++i)
    labels_.push_back(std::to_string(i));
  adj_.assign(n, 0);
}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxGraphVertices))
    throw Error(ErrorKind::SizeLimit, "graph order exceeds " + std::to_string(kMaxGraphVertices));
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size())
    throw Error(ErrorKind::InvalidInput, "duplicate vertex label");
  adj_.assign(labels_.size(), 0);
}

std::string const &Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

int Graph::vertex(std::string const &label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw Error(ErrorKind::InvalidVertex, "unknown vertex '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

std::vector<std::string> Graph::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  s.for_each([&](int v) { out.push_back(label(v)); });
  return out;
}

VertexSet Graph::set_of(std::vector<std::string> const &labels) const {
  VertexSet s;
  for (auto const &l : labels)
    s.insert(vertex(l));
  return s;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order())
    throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw Error(ErrorKind::InvalidInput, "loop at vertex '" + labels_[u] + "'");
  if (adjacent(u, v))
    throw Error(ErrorKind::InvalidInput, "duplicate edge '" + labels_[u] + "'-'" + labels_[v] + "'");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1u;
}

VertexSet Graph::link(int v) const {
  check_vertex(v);
  return VertexSet(adj_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v)
      if ((adj_[u] >> v) & 1u)
        out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto a : adj_)
    twice += __builtin_popcountll(a);
  return twice / 2;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> keep = s.members();
  std::vector<std::string> labels;
  for (int v : keep) {
    check_vertex(v);
    labels.push_back(labels_[v]);
  }
  Graph out(std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::vector<VertexSet> Graph::components(VertexSet s) const {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp = VertexSet::singleton(left.least());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next = next | (VertexSet(adj_[v]) & s); });
      frontier = next - comp;
      comp = comp | frontier;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

bool Graph::is_complete(VertexSet s) const {
  bool ok = true;
  s.for_each([&](int v) {
    if (!(s - VertexSet::singleton(v)).subset_of(VertexSet(adj_[v])))
      ok = false;
  });
  return ok;
}

bool Graph::is_discrete(VertexSet s) const {
  bool ok = true;
  s.for_each([&](int v) {
    if (VertexSet(adj_[v]).intersects(s))
      ok = false;
  });
  return ok;
}

Neighborhood neighborhoods(Graph const &g, int v) {
  return {g.link(v), g.star(v)};
}

bool standard_leq(Graph const &g, int v, int w) {
  return g.link(v).subset_of(g.star(w));
}

std::vector<VertexSet> components_outside_star(Graph const &g, int v) {
  return g.components(g.vertices() - g.star(v));
}

Graph complement(Graph const &g) {
  Graph out(g.labels());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v))
        out.add_edge(u, v);
  return out;
}

namespace {

Construction combine(Graph const &a, Graph const &b, bool cross) {
  std::vector<std::string> labels = a.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (auto l : b.labels()) {
    while (used.count(l))
      l += "'";
    used.insert(l);
    labels.push_back(l);
  }
  Construction c{Graph(std::move(labels)), {}};
  int off = a.order();
  for (int v = 0; v < b.order(); ++v)
    c.second_map.push_back(off + v);
  for (auto [u, v] : a.edges())
    c.graph.add_edge(u, v);
  for (auto [u, v] : b.edges())
    c.graph.add_edge(off + u, off + v);
  if (cross)
    for (int u = 0; u < a.order(); ++u)
      for (int v = 0; v < b.order(); ++v)
        c.graph.add_edge(u, off + v);
  return c;
}

} // namespace

Construction graph_join(Graph const &a, Graph const &b) { return combine(a, b, true); }

Construction disjoint_union(Graph const &a, Graph const &b) { return combine(a, b, false); }

Construction construct(ConstructOp op, Graph const &a, Graph const *b) {
  if (op == ConstructOp::Complement)
    return {complement(a), {}};
  if (!b)
    throw Error(ErrorKind::Usage, "binary construction needs a second graph");
  return op == ConstructOp::Join ? graph_join(a, *b) : disjoint_union(a, *b);
}

VertexSet central_vertices(Graph const &g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.star(v) == g.vertices())
      out.insert(v);
  return out;
}

VertexSet isolated_vertices(Graph const &g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.link(v).empty())
      out.insert(v);
  return out;
}

} // namespace raagcc
