#include "raagcc/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "raagcc/corpus.hpp"
#include "raagcc/error.hpp"
#include "raagcc/io.hpp"
#include "raagcc/parabolic.hpp"
#include "raagcc/verify.hpp"

namespace raagcc {

namespace {

struct Flags {
  std::string graph, group, family, example, out;
  std::string format = "json";
  std::uint64_t seed = 0;
  int max_vertices = kMaxGraphVertices;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Verdict> verdicts;
  Json artifacts = Json::object();
  // Preformatted text for --format text; falls back to a generic dump.
  std::string text;
};

std::string fnv_digest(std::string const &s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(std::string const &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Records a file input and returns its parsed JSON.
Json file_input(Report &r, char const *key, std::string const &path) {
  std::string body = read_file(path);
  r.inputs[key] = {{"path", path}, {"digest", fnv_digest(body)}};
  try {
    return Json::parse(body);
  } catch (Json::parse_error const &e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

void check_size(int n, Flags const &f, char const *what) {
  if (n > f.max_vertices)
    throw Error(ErrorKind::SizeLimit, std::string(what) + " has " + std::to_string(n) + " vertices, limit " +
                                          std::to_string(f.max_vertices));
}

RelOutSpec spec_input(Report &r, Flags const &f) {
  if (!f.graph.empty() && !f.example.empty()) throw Error(ErrorKind::Usage, "give either --graph or --example");
  RelOutSpec spec;
  if (!f.graph.empty()) {
    spec = spec_from_json(file_input(r, "graph", f.graph));
  } else if (!f.example.empty()) {
    spec = RelOutSpec(example_graph(f.example, f.seed));
    r.inputs["example"] = f.example;
    r.inputs["seed"] = f.seed;
  } else {
    throw Error(ErrorKind::Usage, "need --graph FILE or --example NAME");
  }
  check_size(spec.graph.order(), f, "graph");
  return spec;
}

Json labels_json(Graph const &g, VertexSet s) { return Json(g.labels_of(s)); }

std::string join_labels_text(Graph const &g, VertexSet s) {
  std::string out;
  for (auto const &l : g.labels_of(s)) out += (out.empty() ? "" : ",") + l;
  return out;
}

void cmd_analyze(Report &r, Flags const &f) {
  RelOutSpec spec = spec_input(r, f);
  Graph const &g = spec.graph;
  Json standard = Json::array(), relative = Json::array();
  for (int v = 0; v < g.order(); ++v)
    for (int w = 0; w < g.order(); ++w) {
      if (v == w) continue;
      if (standard_leq(g, v, w)) standard.push_back({g.label(v), g.label(w)});
      if (g_leq(spec, v, w)) relative.push_back({g.label(v), g.label(w)});
    }
  Json classes = Json::array(), cones = Json::array();
  for (auto const &c : equiv_classes(spec)) {
    classes.push_back({{"members", labels_json(g, c.members)}, {"kind", class_kind_name(c.kind)}});
    int rep = c.members.least();
    Cone cone = conical(spec, rep);
    cones.push_back({{"vertex", g.label(rep)}, {"geq", labels_json(g, cone.geq)}, {"gt", labels_json(g, cone.gt)}});
  }
  r.artifacts["spec"] = to_json(spec);
  r.artifacts["standard_order"] = standard;
  r.artifacts["relative_order"] = relative;
  r.artifacts["classes"] = classes;
  r.artifacts["cones"] = cones;

  std::string text = "vertices " + std::to_string(g.order()) + ", edges " + std::to_string(g.edge_count()) + "\n";
  text += "classes:\n";
  for (auto const &c : classes)
    text += "  " + c["kind"].get<std::string>() + " {" + join_labels_text(g, g.set_of(c["members"])) + "}\n";
  text += "cones:\n";
  for (auto const &c : cones)
    text += "  " + c["vertex"].get<std::string>() + ": >= {" + join_labels_text(g, g.set_of(c["geq"])) + "}, > {" +
            join_labels_text(g, g.set_of(c["gt"])) + "}\n";
  text += "relative order (v <= w):";
  for (auto const &p : relative) text += " " + p[0].get<std::string>() + "<=" + p[1].get<std::string>();
  r.text = text + "\n";
}

void cmd_rank(Report &r, Flags const &f) {
  RelOutSpec spec = spec_input(r, f);
  int k = rank(spec);
  auto cox = aut0(spec);
  r.artifacts["rank"] = k;
  r.artifacts["coxeter_rank"] = cox.coxeter_rank;
  r.artifacts["class_sizes"] = cox.class_sizes;
  r.verdicts.push_back({"rank equals Coxeter rank", "Prop.: rank via Coxeter system", k == cox.coxeter_rank,
                        std::to_string(k) + " vs " + std::to_string(cox.coxeter_rank)});
  r.text = "rank " + std::to_string(k) + "\n";
}

void cmd_parabolics(Report &r, Flags const &f) {
  RelOutSpec spec = spec_input(r, f);
  Graph const &g = spec.graph;
  Json list = Json::array();
  std::ostringstream text;
  for (auto const &p : maximal_parabolics(spec)) {
    auto witness = properness_witness(p);
    bool proper = contains_generator(spec, witness) && !contains_generator(p.spec, witness);
    std::vector<std::string> order;
    for (int v : p.class_order) order.push_back(g.label(v));
    list.push_back({{"class", order},
                    {"j", p.j},
                    {"delta", labels_json(g, p.delta)},
                    {"rank", rank(p.spec)},
                    {"witness", describe(g, witness)}});
    r.verdicts.push_back({"Stab<" + join_labels_text(g, p.delta) + "> is proper", "Lemma: maximal parabolics are proper",
                          proper, describe(g, witness)});
    text << "Stab<" << join_labels_text(g, p.delta) << ">  j=" << p.j << "  rank " << rank(p.spec) << "\n";
  }
  r.artifacts["rank"] = rank(spec);
  r.artifacts["parabolics"] = list;
  r.text = text.str();
}

void cmd_decompose(Report &r, Flags const &f) {
  RelOutSpec spec = spec_input(r, f);
  auto tree = decompose(spec);
  auto audit = verify_tree(spec, tree);
  std::string fail = audit.failures.empty() ? "" : audit.failures.front();
  r.verdicts.push_back({"rank sum", "Decomposition: leaf contributions add up to the rank", audit.rank_sum,
                        std::to_string(audit.contribution) + " of " + std::to_string(audit.rank)});
  r.verdicts.push_back({"class leaves", "Decomposition: one class leaf per equivalence class", audit.class_leaves, fail});
  r.verdicts.push_back({"action dichotomy", "Decomposition: each restriction is stabilised or moved", audit.dichotomy,
                        std::to_string(audit.restrict_steps) + " restrictions"});
  auto sig = base_case_signature(tree);
  r.artifacts["rank"] = audit.rank;
  r.artifacts["base_cases"] = sig;
  r.artifacts["tree"] = to_json(tree);
  std::string text = render_text(tree) + "base cases:";
  for (auto const &s : sig) text += " " + s;
  r.text = text + "\n";
}

LabelledGraph multigraph_example(std::string const &name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  int n = 0;
  try {
    n = colon == std::string::npos ? -1 : std::stoi(name.substr(colon + 1));
  } catch (std::exception const &) {
    n = -1;
  }
  if (n < 1) throw Error(ErrorKind::Usage, "expected rose:N or theta:N, got '" + name + "'");
  if (n > 12) throw Error(ErrorKind::SizeLimit, "multigraph examples stop at 12 edges");
  if (kind == "rose") return {rose(n), {}};
  if (kind == "theta") return {theta_graph(n), {}};
  throw Error(ErrorKind::Usage, "unknown multigraph example '" + name + "'");
}

void cmd_homology(Report &r, Flags const &f) {
  HomologyOptions ho;
  ho.max_dimension = 12;
  Json in;
  bool have_file = !f.graph.empty();
  if (have_file) in = file_input(r, "graph", f.graph);
  if (have_file && in.contains("faces")) {
    auto k = complex_from_json(in);
    check_size(k.vertex_count(), f, "complex");
    auto h = reduced_homology(k, ho);
    r.artifacts["f_vector"] = k.f_vector();
    r.artifacts["homology"] = to_json(h);
    r.text = "f-vector " + Json(k.f_vector()).dump() + "\n" + h.summary() + "\n";
    return;
  }
  LabelledGraph gl;
  if (have_file) {
    gl = multigraph_from_json(in);
  } else if (!f.example.empty()) {
    gl = multigraph_example(f.example);
    r.inputs["example"] = f.example;
  } else {
    throw Error(ErrorKind::Usage, "need --graph FILE or --example rose:N|theta:N");
  }
  check_size(gl.graph.vertex_count(), f, "multigraph");
  auto rep = verify_sphericity(gl, ho);
  r.artifacts["graph"] = to_json(gl);
  r.artifacts["rank"] = rep.rank;
  r.artifacts["x_size"] = rep.x_size;
  r.artifacts["c_size"] = rep.c_size;
  r.artifacts["x_homology"] = to_json(rep.x_homology);
  r.artifacts["c_homology"] = to_json(rep.c_homology);
  r.artifacts["collapsed"] = rep.collapsed;
  r.verdicts.push_back({"X retracts to C", "Lemma: X(G,l) deformation retracts onto C(G,l)", rep.retraction,
                        rep.x_homology.summary() + " vs " + rep.c_homology.summary()});
  r.verdicts.push_back({"valence-one collapse", "Lemma: collapsing a valence-one edge", rep.collapse_invariance,
                        std::to_string(rep.collapsed.size()) + " collapses"});
  r.verdicts.push_back({"X is (n-2)-spherical", "Prop.: X(G,l) is (n-2)-spherical", rep.spherical.ok, rep.spherical.report});
  r.text = "rank " + std::to_string(rep.rank) + ", |X| = " + std::to_string(rep.x_size) + ", |C| = " +
           std::to_string(rep.c_size) + "\nX: " + rep.x_homology.summary() + "\nC: " + rep.c_homology.summary() + "\n";
}

void cmd_verify(Report &r, Flags const &f) {
  SuiteOptions opts;
  opts.seed = f.seed;
  r.inputs["seed"] = f.seed;
  std::string text;
  Json criteria = Json::array();
  for (auto const &res : run_suite(opts)) {
    for (auto const &v : res.verdicts)
      r.verdicts.push_back({"criterion " + std::to_string(res.id) + ": " + v.check, v.lemma, v.pass, v.details});
    Json c = {{"criterion", res.id}, {"title", res.title}, {"pass", res.pass()}};
    criteria.push_back(c);
    text += summary_line(res) + "\n";
  }
  r.artifacts["criteria"] = criteria;
  r.text = text;
}

ElementSet conjugate(FiniteGroup const &g, ElementSet const &h, int x) {
  ElementSet out = g.empty_set();
  for (int y : members(h)) out.set(g.mul(g.mul(x, y), g.inv(x)));
  return out;
}

// One maximal subgroup per conjugacy class, in subset_less order.
std::vector<ElementSet> maximal_subgroup_classes(FiniteGroup const &g) {
  auto subs = all_subgroups(g);
  std::vector<ElementSet> out;
  for (auto const &h : subs) {
    if (h == g.full_set()) continue;
    bool maximal = std::none_of(subs.begin(), subs.end(), [&](ElementSet const &k) {
      return k != h && k != g.full_set() && h.is_subset_of(k);
    });
    if (!maximal) continue;
    bool seen = false;
    for (int x = 0; x < g.order() && !seen; ++x)
      seen = std::find(out.begin(), out.end(), conjugate(g, h, x)) != out.end();
    if (!seen) out.push_back(h);
  }
  return out;
}

Json element_lists(std::vector<ElementSet> const &sets) {
  Json out = Json::array();
  for (auto const &s : sets) out.push_back(members(s));
  return out;
}

void cmd_coset(Report &r, Flags const &f) {
  FiniteGroup g;
  if (!f.group.empty() && !f.example.empty()) throw Error(ErrorKind::Usage, "give either --group or --example");
  if (!f.group.empty()) {
    g = group_from_json(file_input(r, "group", f.group));
  } else if (!f.example.empty()) {
    g = named_group(f.example);
    r.inputs["example"] = f.example;
  } else {
    throw Error(ErrorKind::Usage, "need --group FILE or --example GROUP");
  }
  SubgroupFamily family;
  ElementSet normal;
  bool have_normal = false;
  if (!f.family.empty()) {
    Json fj = file_input(r, "family", f.family);
    family = family_from_json(g, fj);
    if (fj.is_object() && fj.contains("normal")) {
      normal = normal_from_json(g, fj);
      have_normal = true;
    }
  } else if (!f.group.empty()) {
    throw Error(ErrorKind::Usage, "--group needs --family");
  } else {
    family = make_family(g, maximal_subgroup_classes(g));
    r.inputs["family"] = "maximal subgroups up to conjugacy";
  }
  auto cs = coset_structures(g, family);
  HomologyOptions ho;
  ho.max_dimension = std::max(ho.max_dimension, static_cast<int>(family.size()));
  auto h = reduced_homology(cs.complex, ho);
  r.artifacts["order"] = g.order();
  r.artifacts["family"] = element_lists(family.members);
  r.artifacts["f_vector"] = cs.complex.f_vector();
  r.artifacts["homology"] = to_json(h);
  std::string text = "|G| = " + std::to_string(g.order()) + ", " + std::to_string(family.size()) +
                     " subgroups\nCC f-vector " + Json(cs.complex.f_vector()).dump() + "\nCC: " + h.summary() + "\n";

  auto gen = generation_check(g, family);
  r.artifacts["generation"] = {{"connected", gen.connected}, {"generates", gen.generates}};
  r.verdicts.push_back({"connected iff generating", "Thm.: H is 1-generating iff the union of H generates G", gen.agree(),
                        std::string("connected ") + (gen.connected ? "yes" : "no") + ", generates " +
                            (gen.generates ? "yes" : "no")});
  auto cl = closure_check(g, family);
  r.verdicts.push_back({"closure invariance", "Lemmas: CC(G,H) ~ CC(G,H~) ~ CP(G,H~) (Holz)", cl.ok(),
                        cl.family.summary() + " / " + cl.closure.summary() + " / " + cl.closure_poset.summary()});
  if (have_normal) {
    auto dv = divided_predicates(g, family, normal);
    r.artifacts["divided"] = dv.divided;
    r.artifacts["strongly_divided"] = dv.strongly_divided;
    text += std::string("divided ") + (dv.divided ? "yes" : "no") + ", strongly divided " +
            (dv.strongly_divided ? "yes" : "no") + "\n";
    if (dv.strongly_divided) {
      auto ses = verify_ses_join(g, family, normal);
      r.artifacts["ses"] = {{"left", to_json(ses.left)}, {"right", to_json(ses.right)}};
      r.verdicts.push_back({"CC(G,H) ~ CC(G/N,H bar) * CC(N,H cap N)", "Thm.: coset complexes and short exact sequences",
                            ses.homology_equal, ses.left.summary() + " vs " + ses.right.summary()});
      r.verdicts.push_back({"nK -> n(K cap N) isomorphism", "Lemma: intersection with kernel", ses.kernel_isomorphism,
                            ses.detail});
      text += "join side: " + ses.right.summary() + "\n";
    } else {
      text += "family is not strongly divided by N\n";
    }
  }
  r.text = text;
}

void cmd_building(Report &r, Flags const &f) {
  std::string name = f.example.empty() ? "gl:3:2" : f.example;
  r.inputs["example"] = name;
  auto parts = std::vector<std::string>{};
  std::stringstream ss(name);
  for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(tok);
  auto num = [&](std::size_t i) {
    try {
      return std::stoi(parts.at(i));
    } catch (std::exception const &) {
      throw Error(ErrorKind::Usage, "expected gl:N:Q or coxeter:N, got '" + name + "'");
    }
  };
  HomologyOptions ho;
  ho.max_dimension = 8;
  ActionInstance inst;
  bool have_action = false;
  SimplicialComplex k;
  int sphere = 0;
  if (parts.size() == 3 && parts[0] == "gl") {
    int n = num(1), q = num(2);
    auto lat = subspace_poset(n, q);
    k = order_complex(lat.poset);
    sphere = n - 2;
    r.artifacts["subspaces"] = lat.subspaces.size();
    if (n == 3) {
      inst = flag_complex_instance(n, q);
      have_action = true;
    }
  } else if (parts.size() == 2 && parts[0] == "coxeter") {
    int n = num(1);
    inst = coxeter_complex_instance(n);
    have_action = true;
    k = inst.complex;
    sphere = n - 2;
  } else {
    throw Error(ErrorKind::Usage, "expected gl:N:Q or coxeter:N, got '" + name + "'");
  }
  auto h = reduced_homology(k, ho);
  r.artifacts["f_vector"] = k.f_vector();
  r.artifacts["homology"] = to_json(h);
  auto sph = certify_spherical(k, sphere, ho);
  r.verdicts.push_back({"spherical of dimension " + std::to_string(sphere), "Solomon-Tits: the building is a wedge of spheres",
                        sph.ok, h.summary()});
  if (k.face_count() <= 2000) {
    auto cm = certify_cm(k, ho);
    r.verdicts.push_back({"Cohen-Macaulay", "Solomon-Tits: links are spherical too", cm.ok, cm.ok ? "all links" : cm.report});
  }
  if (have_action) {
    auto det = detect_coset_complex(inst.group, inst.complex, inst.action, inst.facet);
    r.artifacts["stabilizer_orders"] = det.stabilizer_orders;
    r.verdicts.push_back({inst.name, "Prop.: detecting CC (strict fundamental domain)", det.ok(), det.detail});
  }
  r.text = "f-vector " + Json(k.f_vector()).dump() + "\n" + h.summary() + "\n";
}

Json verdicts_json(std::vector<Verdict> const &vs) {
  Json out = Json::array();
  for (auto const &v : vs) out.push_back(to_json(v));
  return out;
}

std::string render(Report const &r, std::string const &format) {
  if (format == "text") {
    std::string s = r.command + "\n";
    s += r.text.empty() ? r.artifacts.dump(2) + "\n" : r.text;
    for (auto const &v : r.verdicts)
      s += std::string(v.pass ? "  ok    " : "  FAIL  ") + v.check + "  [" + v.lemma + "]" +
           (v.details.empty() ? "" : "  " + v.details) + "\n";
    return s;
  }
  Json j = {{"command", r.command}, {"inputs", r.inputs}, {"verdicts", verdicts_json(r.verdicts)}};
  for (auto it = r.artifacts.begin(); it != r.artifacts.end(); ++it) j[it.key()] = it.value();
  return j.dump(2) + "\n";
}

int exit_for(ErrorKind k) {
  switch (k) {
  case ErrorKind::SizeLimit:
    return kExitSizeLimit;
  case ErrorKind::TheoremViolation:
    return kExitViolation;
  default:
    return kExitUsage;
  }
}

} // namespace

CliOutcome run_cli(std::vector<std::string> const &args) {
  CliOutcome res;
  CLI::App app{"Relative automorphism groups of RAAGs and finite coset complexes", "raagcc"};
  app.require_subcommand(1);
  Flags f;

  using Handler = void (*)(Report &, Flags const &);
  struct Sub {
    char const *name;
    char const *help;
    Handler run;
  };
  Sub const subs[] = {
      {"analyze", "orderings, equivalence classes and cones", cmd_analyze},
      {"rank", "rank of the relative group", cmd_rank},
      {"parabolics", "maximal parabolic subgroups", cmd_parabolics},
      {"decompose", "restriction and projection tree with base cases", cmd_decompose},
      {"homology", "subgraph-poset homology of a labelled multigraph, or of a complex", cmd_homology},
      {"verify-paper", "run the acceptance suite", cmd_verify},
      {"coset", "coset complex of a finite group and subgroup family", cmd_coset},
      {"building", "finite building (gl:N:Q) or Coxeter complex (coxeter:N)", cmd_building},
  };
  std::vector<std::pair<CLI::App *, Handler>> commands;
  for (auto const &s : subs) {
    auto *sc = app.add_subcommand(s.name, s.help);
    sc->add_option("--graph", f.graph, "graph, spec, multigraph or complex JSON file");
    sc->add_option("--group", f.group, "group JSON file");
    sc->add_option("--family", f.family, "subgroup family JSON file");
    sc->add_option("--example", f.example, "built-in input, e.g. diamonds:3, tree:random:12:7, rose:4, S4, gl:3:2");
    sc->add_option("--seed", f.seed, "seed for random examples");
    sc->add_option("--max-vertices", f.max_vertices, "reject larger graphs with exit code 3")->check(CLI::PositiveNumber);
    sc->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sc->add_option("--out", f.out, "write the report here instead of stdout");
    commands.push_back({sc, s.run});
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::CallForHelp const &) {
    res.out = app.help();
    return res;
  } catch (CLI::ParseError const &e) {
    res.err = std::string(e.what()) + "\n" + app.help();
    res.exit_code = kExitUsage;
    return res;
  }

  for (auto const &[sc, handler] : commands) {
    if (!sc->parsed()) continue;
    Report r;
    r.command = sc->get_name();
    try {
      handler(r, f);
    } catch (Error const &e) {
      res.err = std::string(error_kind_name(e.kind())) + ": " + e.what() + "\n";
      res.exit_code = exit_for(e.kind());
      return res;
    } catch (std::exception const &e) {
      res.err = std::string("error: ") + e.what() + "\n";
      res.exit_code = kExitUsage;
      return res;
    }
    bool all = std::all_of(r.verdicts.begin(), r.verdicts.end(), [](Verdict const &v) { return v.pass; });
    res.exit_code = all ? kExitOk : kExitViolation;
    std::string body = render(r, f.format);
    if (f.out.empty()) {
      res.out = body;
    } else {
      std::ofstream o(f.out, std::ios::binary);
      if (!o) {
        res.err = "cannot write '" + f.out + "'\n";
        res.exit_code = kExitUsage;
        return res;
      }
      o << body;
    }
  }
  return res;
}

} // namespace raagcc
