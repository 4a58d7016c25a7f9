#include "raagcc/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "raagcc/error.hpp"

namespace raagcc {

namespace {

[[noreturn]] void bad(std::string const &what) { throw Error(ErrorKind::InvalidInput, what); }

std::string name_of(Json const &x) {
  if (x.is_string()) return x.get<std::string>();
  if (x.is_number_integer()) return std::to_string(x.get<long long>());
  bad("vertex names must be strings or integers");
}

Json const &field(Json const &j, char const *key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

VertexSet set_from_json(Graph const &g, Json const &arr) {
  if (!arr.is_array()) bad("vertex set must be an array");
  VertexSet s;
  for (auto const &x : arr) s.insert(g.vertex(name_of(x)));
  return s;
}

std::vector<VertexSet> family_of(Graph const &g, Json const &j, char const *key) {
  std::vector<VertexSet> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) bad(std::string(key) + " must be an array of vertex sets");
  for (auto const &m : j.at(key)) out.push_back(set_from_json(g, m));
  return out;
}

} // namespace

Json load_json(std::string const &path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (nlohmann::json::parse_error const &e) {
    bad(path + ": " + e.what());
  }
}

Graph graph_from_json(Json const &j) {
  auto const &verts = field(j, "vertices");
  if (!verts.is_array()) bad("\"vertices\" must be an array");
  std::vector<std::string> names;
  for (auto const &v : verts) names.push_back(name_of(v));
  if (static_cast<int>(names.size()) > kMaxGraphVertices) throw Error(ErrorKind::SizeLimit, "graph has too many vertices");
  Graph g(names);
  if (j.contains("edges")) {
    for (auto const &e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) bad("edges must be pairs of vertex names");
      g.add_edge(g.vertex(name_of(e[0])), g.vertex(name_of(e[1])));
    }
  }
  return g;
}

Json to_json(Graph const &g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  return {{"vertices", g.labels()}, {"edges", edges}};
}

RelOutSpec spec_from_json(Json const &j) {
  if (j.is_object() && j.contains("graph")) {
    Graph g = graph_from_json(j.at("graph"));
    auto stab = family_of(g, j, "stabilized");
    auto triv = family_of(g, j, "trivial");
    return RelOutSpec(std::move(g), std::move(stab), std::move(triv));
  }
  return RelOutSpec(graph_from_json(j));
}

Json vertex_set_json(Graph const &g, VertexSet s) { return g.labels_of(s); }

Json to_json(RelOutSpec const &spec) {
  Json stab = Json::array(), triv = Json::array();
  for (auto s : spec.stabilized) stab.push_back(vertex_set_json(spec.graph, s));
  for (auto s : spec.trivial) triv.push_back(vertex_set_json(spec.graph, s));
  return {{"graph", to_json(spec.graph)}, {"stabilized", stab}, {"trivial", triv}};
}

LaurenceGenerator generator_from_json(Graph const &g, Json const &j) {
  auto kind = field(j, "kind").get<std::string>();
  int v = g.vertex(name_of(field(j, "v")));
  LaurenceGenerator gen;
  if (kind == "inversion") gen = LaurenceGenerator::inversion(v);
  else if (kind == "transvection") gen = LaurenceGenerator::transvection(v, g.vertex(name_of(field(j, "w"))));
  else if (kind == "partial_conjugation") gen = LaurenceGenerator::partial_conjugation(v, set_from_json(g, field(j, "K")));
  else throw Error(ErrorKind::MalformedGenerator, "unknown generator kind " + kind);
  check_generator(g, gen);
  return gen;
}

Json to_json(Graph const &g, LaurenceGenerator const &gen) {
  switch (gen.kind) {
  case GeneratorKind::Inversion:
    return {{"kind", "inversion"}, {"v", g.label(gen.v)}};
  case GeneratorKind::Transvection:
    return {{"kind", "transvection"}, {"v", g.label(gen.v)}, {"w", g.label(gen.w)}};
  case GeneratorKind::PartialConjugation:
    return {{"kind", "partial_conjugation"}, {"v", g.label(gen.v)}, {"K", vertex_set_json(g, gen.K)}};
  }
  return {};
}

LabelledGraph multigraph_from_json(Json const &j) {
  std::vector<std::string> names;
  for (auto const &v : field(j, "vertices")) names.push_back(name_of(v));
  LabelledGraph gl{Multigraph(names), {}};
  if (j.contains("edges")) {
    int auto_id = 0;
    for (auto const &e : j.at("edges")) {
      if (!e.is_array() || (e.size() != 2 && e.size() != 3)) bad("multigraph edges are [u, v] or [u, v, id]");
      std::string id = e.size() == 3 ? name_of(e[2]) : "e" + std::to_string(++auto_id);
      gl.graph.add_edge(name_of(e[0]), name_of(e[1]), id);
    }
  }
  if (j.contains("labels")) {
    auto const &labels = j.at("labels");
    std::map<int, int> by_index;
    if (labels.is_object()) {
      for (auto const &[key, val] : labels.items()) {
        int idx = 0;
        try {
          idx = std::stoi(key);
        } catch (std::exception const &) {
          bad("label keys must be 1..k");
        }
        by_index[idx] = gl.graph.vertex(name_of(val));
      }
    } else if (labels.is_array()) {
      int idx = 0;
      for (auto const &val : labels) by_index[++idx] = gl.graph.vertex(name_of(val));
    } else {
      bad("\"labels\" must be an object or array");
    }
    int expect = 1;
    for (auto const &[idx, v] : by_index) {
      if (idx != expect++) bad("label keys must be exactly 1..k");
      gl.labelling.push_back(v);
    }
  }
  return gl;
}

Json to_json(LabelledGraph const &gl) {
  Json edges = Json::array();
  for (auto const &e : gl.graph.edges()) edges.push_back({gl.graph.label(e.u), gl.graph.label(e.v), e.id});
  Json labels = Json::object();
  for (std::size_t i = 0; i < gl.labelling.size(); ++i)
    labels[std::to_string(i + 1)] = gl.graph.label(gl.labelling[i]);
  return {{"vertices", gl.graph.vertices()}, {"edges", edges}, {"labels", labels}};
}

FiniteGroup group_from_json(Json const &j) {
  if (j.is_object() && j.contains("permutations")) {
    std::vector<Perm> gens;
    for (auto const &p : j.at("permutations")) gens.push_back(p.get<Perm>());
    return FiniteGroup::from_permutations(gens);
  }
  if (j.is_object() && j.contains("name")) return named_group(j.at("name").get<std::string>());
  auto table = field(j, "table").get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) bad("\"order\" does not match the table");
  return FiniteGroup::from_table(std::move(table));
}

namespace {

int element_from_json(FiniteGroup const &g, Json const &x) {
  if (x.is_number_integer()) {
    int e = x.get<int>();
    if (e < 0 || e >= g.order()) bad("element index " + std::to_string(e) + " out of range");
    return e;
  }
  if (x.is_array() && !g.permutations().empty()) {
    auto p = x.get<Perm>();
    auto const &ps = g.permutations();
    auto it = std::find(ps.begin(), ps.end(), p);
    if (it == ps.end()) bad("permutation " + x.dump() + " is not in the group");
    return static_cast<int>(it - ps.begin());
  }
  bad("group elements are indices, or permutations for permutation groups");
}

// [0, 2, 4] lists a subgroup; {"generators": [...]} generates one.
ElementSet subgroup_from_json(FiniteGroup const &g, Json const &m) {
  if (m.is_object()) {
    ElementSet gens = g.empty_set();
    for (auto const &x : field(m, "generators")) gens.set(element_from_json(g, x));
    return generated_subgroup(g, gens);
  }
  if (!m.is_array()) bad("subgroup must be an element list or {\"generators\": [...]}");
  std::vector<int> elems;
  for (auto const &x : m) elems.push_back(element_from_json(g, x));
  return g.set_of(elems);
}

} // namespace

SubgroupFamily family_from_json(FiniteGroup const &g, Json const &j) {
  Json const &arr = j.is_object() ? field(j, "members") : j;
  if (!arr.is_array()) bad("family must be an array of subgroups");
  if (g.order() > 1000) throw Error(ErrorKind::SizeLimit, "user families need group order <= 1000");
  std::vector<ElementSet> members;
  for (auto const &m : arr) members.push_back(subgroup_from_json(g, m));
  return make_family(g, std::move(members));
}

ElementSet normal_from_json(FiniteGroup const &g, Json const &j) { return subgroup_from_json(g, field(j, "normal")); }

SimplicialComplex complex_from_json(Json const &j) {
  std::map<std::string, int> index;
  std::vector<std::string> labels;
  std::vector<Face> faces;
  bool numeric = true;
  for (auto const &f : field(j, "faces"))
    for (auto const &x : f) numeric = numeric && x.is_number_integer();
  for (auto const &f : field(j, "faces")) {
    Face face;
    for (auto const &x : f) {
      auto key = name_of(x);
      auto [it, fresh] = index.emplace(key, static_cast<int>(labels.size()));
      if (fresh) labels.push_back(key);
      face.push_back(it->second);
    }
    std::sort(face.begin(), face.end());
    faces.push_back(std::move(face));
  }
  if (numeric) {
    // Keep integer vertex ids in numeric order.
    std::vector<std::pair<long long, int>> order;
    for (auto const &[k, v] : index) order.push_back({std::stoll(k), v});
    std::sort(order.begin(), order.end());
    std::vector<int> remap(labels.size());
    std::vector<std::string> sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
      remap[order[i].second] = static_cast<int>(i);
      sorted.push_back(std::to_string(order[i].first));
    }
    for (auto &f : faces) {
      for (int &v : f) v = remap[v];
      std::sort(f.begin(), f.end());
    }
    labels = std::move(sorted);
  }
  return SimplicialComplex(static_cast<int>(labels.size()), faces, labels);
}

Json to_json(HomologyResult const &h) {
  Json out = Json::object();
  for (int d = -1; d <= h.top(); ++d)
    out[std::to_string(d)] = {{"betti", h.betti_at(d)}, {"torsion", h.torsion_at(d)}};
  return out;
}

Json to_json(AuditReport const &a) {
  return {{"rank_sum", a.rank_sum},           {"class_leaves", a.class_leaves},
          {"dichotomy", a.dichotomy},         {"rank", a.rank},
          {"contribution", a.contribution},   {"restrict_steps", a.restrict_steps},
          {"failures", a.failures},           {"ok", a.ok()}};
}

namespace {

char const *node_kind_name(NodeKind k) {
  switch (k) {
  case NodeKind::Restrict: return "restrict";
  case NodeKind::Project: return "project";
  case NodeKind::Base: return "base";
  }
  return "?";
}

} // namespace

Json to_json(DecompNode const &node) {
  auto const &g = node.spec.graph;
  Json out = {{"kind", node_kind_name(node.kind)}, {"vertices", g.labels()}};
  if (node.current >= 0) out["current"] = g.label(node.current);
  switch (node.kind) {
  case NodeKind::Restrict:
    out["delta"] = vertex_set_json(g, node.delta);
    break;
  case NodeKind::Project:
    out["image"] = vertex_set_json(g, node.delta);
    out["Z"] = vertex_set_json(g, node.Z);
    out["twist_rank"] = node.twist_rank;
    break;
  case NodeKind::Base: {
    auto const &b = node.base;
    auto const &bg = b.spec.graph;
    out["base"] = base_kind_name(b.kind);
    out["n"] = b.n;
    out["class"] = vertex_set_json(bg, b.klass);
    Json factors = Json::array();
    for (auto f : b.factors) factors.push_back(vertex_set_json(bg, f));
    out["factors"] = factors;
    out["contribution"] = b.contribution();
    // A twist leaf is free abelian on its n transvections.
    out["generators"] = b.kind == BaseKind::TwistGroup ? static_cast<std::size_t>(b.n) : enumerate_generators(b.spec).size();
    if (!b.note.empty()) out["note"] = b.note;
    break;
  }
  }
  if (!node.children.empty()) {
    Json kids = Json::array();
    for (auto const &c : node.children) kids.push_back(to_json(c));
    out["children"] = kids;
  }
  return out;
}

} // namespace raagcc
