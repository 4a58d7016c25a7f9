#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "raagcc/cli.hpp"
#include "raagcc/corpus.hpp"
#include "raagcc/error.hpp"
#include "raagcc/io.hpp"
#include "raagcc/parabolic.hpp"
#include "raagcc/verify.hpp"

namespace py = pybind11;
using namespace raagcc;

namespace {

// JSON crosses the boundary as text; the Python layer does json.loads.
Json parse(std::string const &s) { return Json::parse(s); }

std::string example(std::string const &name, std::uint64_t seed) { return to_json(example_graph(name, seed)).dump(); }

int spec_rank(std::string const &spec) { return rank(spec_from_json(parse(spec))); }

std::string parabolics(std::string const &spec_text) {
  RelOutSpec spec = spec_from_json(parse(spec_text));
  Json out = Json::array();
  for (auto const &p : maximal_parabolics(spec))
    out.push_back({{"delta", vertex_set_json(spec.graph, p.delta)}, {"j", p.j}, {"rank", rank(p.spec)}});
  return out.dump();
}

std::string decomposition(std::string const &spec_text) {
  RelOutSpec spec = spec_from_json(parse(spec_text));
  auto tree = decompose(spec);
  Json out = {{"tree", to_json(tree)},
              {"base_cases", base_case_signature(tree)},
              {"audit", to_json(verify_tree(spec, tree))},
              {"text", render_text(tree)}};
  return out.dump();
}

std::string subgraph_homology(std::string const &graph_text) {
  HomologyOptions ho;
  ho.max_dimension = 12;
  auto rep = verify_sphericity(multigraph_from_json(parse(graph_text)), ho);
  Json out = {{"rank", rep.rank},
              {"x_size", rep.x_size},
              {"c_size", rep.c_size},
              {"x_homology", to_json(rep.x_homology)},
              {"c_homology", to_json(rep.c_homology)},
              {"retraction", rep.retraction},
              {"collapse_invariance", rep.collapse_invariance},
              {"spherical", rep.spherical.ok}};
  return out.dump();
}

std::string complex_homology(std::string const &complex_text) {
  auto k = complex_from_json(parse(complex_text));
  return Json{{"f_vector", k.f_vector()}, {"homology", to_json(reduced_homology(k))}}.dump();
}

std::string coset_complex(std::string const &group_text, std::string const &family_text) {
  auto g = group_from_json(parse(group_text));
  Json fj = parse(family_text);
  auto family = family_from_json(g, fj);
  auto cs = coset_structures(g, family);
  HomologyOptions ho;
  ho.max_dimension = std::max(ho.max_dimension, static_cast<int>(family.size()));
  Json out = {{"order", g.order()},
              {"f_vector", cs.complex.f_vector()},
              {"homology", to_json(reduced_homology(cs.complex, ho))}};
  if (fj.is_object() && fj.contains("normal")) {
    auto n = normal_from_json(g, fj);
    auto dv = divided_predicates(g, family, n);
    out["divided"] = dv.divided;
    out["strongly_divided"] = dv.strongly_divided;
    if (dv.strongly_divided) {
      auto ses = verify_ses_join(g, family, n);
      out["ses"] = {{"left", to_json(ses.left)}, {"right", to_json(ses.right)}, {"ok", ses.ok()}};
    }
  }
  return out.dump();
}

std::string criterion(int id, std::uint64_t seed) {
  SuiteOptions opts;
  opts.seed = seed;
  return to_json(run_criterion(id, opts)).dump();
}

py::tuple cli(std::vector<std::string> const &args) {
  auto res = run_cli(args);
  return py::make_tuple(res.exit_code, res.out, res.err);
}

} // namespace

PYBIND11_MODULE(_raagcc, m) {
  m.doc() = "Bindings for the raagcc core. Arguments and results are JSON text.";

  static py::exception<Error> error(m, "RaagccError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (Error const &e) {
      py::set_error(error, (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
    } catch (nlohmann::json::exception const &e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("example_graph", &example, py::arg("name"), py::arg("seed") = 0);
  m.def("rank", &spec_rank, py::arg("spec"));
  m.def("maximal_parabolics", &parabolics, py::arg("spec"));
  m.def("decompose", &decomposition, py::arg("spec"));
  m.def("subgraph_homology", &subgraph_homology, py::arg("graph"));
  m.def("complex_homology", &complex_homology, py::arg("complex"));
  m.def("coset_complex", &coset_complex, py::arg("group"), py::arg("family"));
  m.def("run_criterion", &criterion, py::arg("id"), py::arg("seed") = 0);
  m.def("cli", &cli, py::arg("args"));
  m.attr("criterion_count") = kCriterionCount;
}
