#include <doctest.h>

#include <sstream>

#include "pathhom/cli.hpp"
#include "pathhom/errors.hpp"
#include "pathhom/io.hpp"

using namespace pathhom;

namespace {

const std::string kData = PATHHOM_TEST_DATA;

JobSpec job(const std::string& graph, const std::string& alpha, long long p, int max_n) {
  JobSpec s;
  s.graph = kData + "/" + graph;
  s.alpha = kData + "/" + alpha;
  s.p = p;
  s.max_n = max_n;
  return s;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run homology_run(const JobSpec& s) {
  std::ostringstream out, err;
  int code = cmd_homology(s, out, err);
  return {code, out.str(), err.str()};
}

Run induced_run(const JobSpec& s, const std::string& beta) {
  std::ostringstream out, err;
  int code = cmd_induced(s, kData + "/" + beta, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("digraph JSON round trip and errors") {
  json j = json::parse(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
  Digraph g = digraph_from_json(j);
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(to_json(g) == j);

  auto err_of = [](const char* text) {
    try {
      digraph_from_json(json::parse(text));
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(err_of(R"({"vertices":["a"],"edges":[["a","a"]]})").find("/edges/0") != std::string::npos);
  CHECK(err_of(R"({"vertices":["a"],"edges":[["a","a"]]})").find("self-loop") != std::string::npos);
  CHECK(err_of(R"({"vertices":["a","b"],"edges":[["a","x"]]})").find("/edges/0") != std::string::npos);
  CHECK(err_of(R"({"vertices":["a"],"edges":[["a"]]})").find("/edges/0") != std::string::npos);
  CHECK(err_of(R"({"vertices":[1],"edges":[]})").find("/vertices/0") != std::string::npos);
  CHECK(err_of(R"({"edges":[]})").find("vertices") != std::string::npos);
  CHECK(err_of(R"({"vertices":["a","a"],"edges":[]})") != "");
}

TEST_CASE("element JSON parsing") {
  Digraph g = Digraph::numbered(3, {});
  Field q = Field::rational();
  auto e = diff_element_from_json(
      json::parse(R"({"degree":2,"terms":[{"monomial":["v2","v0"],"coeff":"3/2"}]})"), g, q);
  VertexId m[] = {0, 2};
  CHECK(e == DiffElement::monomial(m, q.parse_scalar("-3/2")));
  CHECK(to_json(e, g).dump() == R"({"degree":2,"terms":[{"monomial":["v0","v2"],"coeff":"-3/2"}]})");

  auto w = diff_element_from_json(json::parse(R"({"degree":1,"weights":{"v0":"1","v2":2}})"), g, q);
  CHECK(w.terms().size() == 2);

  auto scalar = diff_element_from_json(json::parse(R"({"degree":0,"terms":[{"monomial":[],"coeff":"5"}]})"), g, q);
  CHECK(scalar == DiffElement::scalar(q.from_int(5)));

  auto gf = diff_element_from_json(json::parse(R"({"degree":1,"terms":[{"monomial":["v1"],"coeff":"1/2"}]})"),
                                   g, Field::prime(101));
  CHECK(gf.terms().begin()->second.residue_value() == 51);

  CHECK_THROWS_AS(diff_element_from_json(json::parse(R"({"degree":2,"terms":[{"monomial":["v0"],"coeff":"1"}]})"), g, q),
                  InputError);
  CHECK_THROWS_AS(diff_element_from_json(json::parse(R"({"degree":1,"terms":[{"monomial":["zz"],"coeff":"1"}]})"), g, q),
                  InputError);
  CHECK_THROWS_AS(diff_element_from_json(json::parse(R"({"degree":1,"terms":[{"monomial":["v0"],"coeff":1.5}]})"), g, q),
                  InputError);
  CHECK_THROWS_AS(diff_element_from_json(json::parse(R"({"degree":2,"weights":{"v0":"1"}})"), g, q), InputError);
  CHECK_THROWS_AS(diff_element_from_json(json::parse(R"({"degree":-1,"terms":[]})"), g, q), InputError);
}

TEST_CASE("matrix JSON") {
  Matrix m = Matrix::from_ints(Field::rational(), {{0, 2}, {-1, 0}});
  CHECK(to_json(m).dump() == R"({"rows":2,"cols":2,"entries":[[0,1,"2"],[1,0,"-1"]]})");
}

TEST_CASE("homology command on the complete DAG") {
  Run r = homology_run(job("ex2_graph.json", "ex2_alpha.json", 0, 2));
  CHECK(r.code == kExitOk);
  json j = json::parse(r.out);
  CHECK(j["betti"] == json::array({3, 0}));
  CHECK(j["omega_dims"] == json::array({4, 1, 0}));
  CHECK(j["euler"] == 3);
  CHECK(j["truncated"] == false);
  CHECK(j["alpha_degree"] == 3);
}

TEST_CASE("homology command on the diamond with unit weights") {
  Run r = homology_run(job("ex1_graph.json", "ex1_f_111111.json", 0, 3));
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out)["betti"][2] == 0);
}

TEST_CASE("homology command options") {
  JobSpec s = job("ex2_graph.json", "ex2_alpha.json", 0, 2);
  s.generators = true;
  s.dump_matrices = true;
  s.field = "gf:101";
  Run r = homology_run(s);
  REQUIRE(r.code == kExitOk);
  json j = json::parse(r.out);
  CHECK(j["field"] == "gf:101");
  CHECK(j["generators"][0].size() == 3);
  CHECK(j["boundary_matrices"][1]["entries"] == json::parse(R"([[3,0,100]])"));
  s.format = OutputFormat::Table;
  Run t = homology_run(s);
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("betti") != std::string::npos);
  CHECK(t.out.find("euler 3") != std::string::npos);
}

TEST_CASE("homology command errors and exit codes") {
  Run loop = homology_run(job("selfloop_graph.json", "ex2_alpha.json", 0, 2));
  CHECK(loop.code == kExitInput);
  CHECK(loop.err.find("self-loop") != std::string::npos);
  CHECK(loop.err.find("selfloop_graph.json") != std::string::npos);

  Run bad = homology_run(job("malformed.json", "ex2_alpha.json", 0, 2));
  CHECK(bad.code == kExitInput);
  CHECK(bad.err.find("malformed.json") != std::string::npos);

  Run missing = homology_run(job("nope.json", "ex2_alpha.json", 0, 2));
  CHECK(missing.code == kExitInput);

  Run even = homology_run(job("ex2_graph.json", "alpha_even.json", 0, 2));
  CHECK(even.code == kExitInput);
  CHECK(even.err.find("alpha must have odd degree") != std::string::npos);

  JobSpec cap = job("ex1_graph.json", "ex1_f_111111.json", 0, 3);
  cap.path_cap = 3;
  CHECK(homology_run(cap).code == kExitResource);

  JobSpec bad_field = job("ex2_graph.json", "ex2_alpha.json", 0, 2);
  bad_field.field = "gf:4";
  CHECK(homology_run(bad_field).code == kExitInput);

  CHECK(homology_run(job("ex2_graph.json", "ex2_alpha.json", 0, 0)).code == kExitInput);
}

TEST_CASE("induced command") {
  Run id = induced_run(job("ex1_graph.json", "ex1_f_111111.json", 0, 3), "beta_one.json");
  REQUIRE(id.code == kExitOk);
  json j = json::parse(id.out);
  CHECK(j["ranks"] == j["source_betti"]);
  CHECK(j["degree_shift"] == 0);

  Run odd = induced_run(job("ex1_graph.json", "ex1_f_111111.json", 0, 3), "beta_odd.json");
  CHECK(odd.code == kExitInput);

  Run b = induced_run(job("ex1_graph.json", "ex1_f_111111.json", 0, 3), "beta_v1v2.json");
  REQUIRE(b.code == kExitOk);
  json k = json::parse(b.out);
  CHECK(k["target"]["p"] == -2);
  CHECK(k["target"]["k"] == -2);
  CHECK(k["degree_shift"] == 2);
}

TEST_CASE("outputs are byte-identical across runs") {
  JobSpec s = job("ex1_graph.json", "ex1_f_011100.json", 0, 3);
  s.generators = true;
  s.dump_matrices = true;
  CHECK(homology_run(s).out == homology_run(s).out);
}
