#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "raagcc/cli.hpp"
#include "raagcc/corpus.hpp"
#include "raagcc/error.hpp"
#include "raagcc/io.hpp"

using namespace raagcc;

namespace {

std::string data(char const *name) { return std::string(RAAGCC_DATA_DIR) + "/" + name; }

Json run_json(std::vector<std::string> const &args) {
  auto res = run_cli(args);
  INFO(res.err);
  REQUIRE(res.exit_code == kExitOk);
  return Json::parse(res.out);
}

} // namespace

TEST_CASE("graph and spec round trips") {
  Graph d = diamonds(3);
  CHECK(graph_from_json(to_json(d)) == d);

  RelOutSpec s(d, {d.set_of({"a1", "b1"})}, {d.set_of({"c0"})});
  auto back = spec_from_json(to_json(s));
  CHECK(back.graph == d);
  CHECK(back.stabilized == s.stabilized);
  CHECK(back.trivial == s.trivial);

  auto gen = LaurenceGenerator::partial_conjugation(0, VertexSet{2, 3});
  Graph p = path_graph(4);
  CHECK(generator_from_json(p, to_json(p, gen)) == gen);

  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": ["a"], "edges": [["a", "x"]]})")), Error);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), Error);
}

TEST_CASE("multigraph and complex files") {
  auto gl = multigraph_from_json(load_json(data("theta_labelled.json")));
  CHECK(gl.graph.edge_count() == 4);
  CHECK(gl.labelling.size() == 1);
  auto again = multigraph_from_json(to_json(gl));
  CHECK(again.graph.edge_count() == 4);

  auto k = complex_from_json(load_json(data("octahedron.json")));
  CHECK(k.f_vector() == std::vector<std::size_t>{6, 12, 8});
  CHECK_THROWS_AS(load_json(data("missing.json")), Error);
}

TEST_CASE("group and family files") {
  auto g = group_from_json(load_json(data("s3.json")));
  CHECK(g.order() == 6);
  auto fj = load_json(data("s3_a3_family.json"));
  auto fam = family_from_json(g, fj);
  CHECK(fam.size() == 2);
  CHECK(normal_from_json(g, fj).count() == 3);
  CHECK(group_from_json(Json::parse(R"({"name": "Q8"})")).order() == 8);
  auto c3 = group_from_json(Json::parse(R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})"));
  CHECK(c3.order() == 3);
  CHECK_THROWS_AS(family_from_json(g, Json::parse("[[0, 7]]")), Error);
}

TEST_CASE("rank of the diamonds file") {
  auto j = run_json({"rank", "--graph", data("diamonds3.json")});
  CHECK(j["rank"] == 3);
  CHECK(j["command"] == "rank");
  CHECK(j["inputs"]["graph"]["digest"].get<std::string>().rfind("fnv1a:", 0) == 0);
}

TEST_CASE("decompose renders base cases") {
  auto res = run_cli({"decompose", "--graph", data("tree.json"), "--format", "text"});
  CHECK(res.exit_code == kExitOk);
  CHECK(res.out.find("base cases:") != std::string::npos);
  CHECK(res.out.find("TwistGroup(3)") != std::string::npos);
  CHECK(res.out.find("FouxeRabinovitch(3;1)") != std::string::npos);
}

TEST_CASE("other subcommands") {
  auto a = run_json({"analyze", "--example", "diamonds:2"});
  CHECK(a["classes"].size() == 5);
  auto p = run_json({"parabolics", "--example", "diamonds:3"});
  CHECK(p["parabolics"].size() == 3);
  auto h = run_json({"homology", "--example", "rose:3"});
  CHECK(h["x_size"] == 6);
  CHECK(h["x_homology"]["1"]["betti"] == 1);
  auto oct = run_json({"homology", "--graph", data("octahedron.json")});
  CHECK(oct["homology"]["2"]["betti"] == 1);
  auto c = run_json({"coset", "--group", data("s3.json"), "--family", data("s3_a3_family.json")});
  CHECK(c["strongly_divided"] == true);
  CHECK(c["divided"] == false);
  CHECK(c["verdicts"].size() == 4);
  auto b = run_json({"building", "--example", "coxeter:4"});
  CHECK(b["f_vector"] == Json({14, 36, 24}));
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).exit_code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).exit_code == kExitUsage);
  CHECK(run_cli({"rank"}).exit_code == kExitUsage);
  CHECK(run_cli({"rank", "--example", "diamonds:3", "--format", "yaml"}).exit_code == kExitUsage);
  CHECK(run_cli({"rank", "--graph", data("missing.json")}).exit_code == kExitUsage);
  CHECK(run_cli({"rank", "--example", "diamonds:9", "--max-vertices", "12"}).exit_code == kExitSizeLimit);
  CHECK(run_cli({"building", "--example", "gl:6:2"}).exit_code == kExitSizeLimit);
  CHECK(run_cli({"rank", "--help"}).exit_code == kExitOk);
}

TEST_CASE("reports are reproducible") {
  std::vector<std::string> args{"decompose", "--example", "tree:random:12:seed", "--seed", "5"};
  auto a = run_cli(args), b = run_cli(args);
  CHECK(a.exit_code == kExitOk);
  CHECK(a.out == b.out);
  auto other = run_cli({"decompose", "--example", "tree:random:12:seed", "--seed", "6"});
  CHECK(other.out != a.out);
}

TEST_CASE("report written to a file") {
  std::string path = "raagcc_test_report.json";
  auto res = run_cli({"rank", "--example", "complete:4", "--out", path});
  CHECK(res.exit_code == kExitOk);
  CHECK(res.out.empty());
  auto j = load_json(path);
  CHECK(j["rank"] == 3);
  std::remove(path.c_str());
}
