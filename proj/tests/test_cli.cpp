#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tropigraph/cli.hpp"
#include "tropigraph/error.hpp"
#include "tropigraph/json_io.hpp"
#include "tropigraph/verifier.hpp"

using namespace tropigraph;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("tropigraph_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("gen writes graph6 or edge lists") {
  auto r = run({"gen", "--family", "path", "--params", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "Ch\n");
  r = run({"gen", "--family", "caterpillar", "--params", "3,0,2", "--format", "edges"});
  CHECK(r.code == kExitOk);
  CHECK(parse_edge_list(r.out) == caterpillar_graph(CaterpillarSpec{3, {{2, 2}}}));
  CHECK(run({"gen", "--family", "caterpillar", "--params", "2,0,0,1"}).code == kExitInputError);
  CHECK(run({"gen", "--family", "wheel", "--params", "5"}).code == kExitInputError);
}

TEST_CASE("repr output realizes the input graph") {
  const std::string c5 = to_graph6(cycle_graph(5));
  const std::pair<const char*, const char*> combos[] = {
      {"min", "generic"},      {"max", "generic"},    {"min", "extension"},
      {"min", "intersection"}, {"max", "cover"},      {"min", "cycle3"},
      {"min", "threshold"},    {"max", "threshold"},
  };
  for (const auto& [alg, method] : combos) {
    CAPTURE(method);
    const Graph g = std::string(method) == "threshold" ? star_graph(4) : cycle_graph(5);
    const auto r = run({"repr", "--algebra", alg, "--method", method, "--t", "3/2"},
                       to_graph6(g) + "\n");
    REQUIRE(r.code == kExitOk);
    const auto rep = representation_from_json(Json::parse(r.out));
    CHECK(rep.threshold == Rational(3, 2));
    CHECK(verify(g, rep).valid);
  }
  const auto k = run({"repr", "--algebra", "min", "--method", "multipartite"},
                     to_graph6(cycle_graph(4)));
  CHECK(k.code == kExitOk);
  CHECK(representation_from_json(Json::parse(k.out)).dim() == 2);
}

TEST_CASE("repr rejects bad requests") {
  const std::string p4 = "Ch\n";
  CHECK(run({"repr", "--algebra", "max", "--method", "caterpillar"}, p4).code == kExitInputError);
  CHECK(run({"repr", "--algebra", "min", "--method", "cover"}, p4).code == kExitInputError);
  CHECK(run({"repr", "--algebra", "min", "--method", "threshold"}, p4).code == kExitInputError);
  CHECK(run({"repr", "--algebra", "min", "--method", "cycle3"}, p4).code == kExitInputError);
  CHECK(run({"repr", "--algebra", "min", "--method", "generic", "--t", "0"}, p4).code ==
        kExitInputError);
  CHECK(run({"repr", "--algebra", "min", "--method", "generic"}, "garbage\n").code ==
        kExitInputError);
}

TEST_CASE("dim reports exact values or bounds") {
  auto r = run({"dim"}, "Ch\n");
  CHECK(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["rho_min_plus"] == 2);
  CHECK(j["rho_max_plus"] == 2);
  CHECK(j["method"] == "exact");

  r = run({"dim", "--exact-limit", "3"}, "Ch\n");
  j = Json::parse(r.out);
  CHECK(j["method"] == "bounds");
}

TEST_CASE("exact limit from the environment") {
  ::setenv("TROPIGRAPH_EXACT_LIMIT", "3", 1);
  CHECK(limits_from_env().theta_vertices == 3);
  CHECK(Json::parse(run({"dim"}, "Ch\n").out)["method"] == "bounds");
  ::setenv("TROPIGRAPH_EXACT_LIMIT", "12,30", 1);
  CHECK(limits_from_env().theta_edges == 30);
  ::setenv("TROPIGRAPH_EXACT_LIMIT", "many", 1);
  CHECK_THROWS_AS(limits_from_env(), ParseError);
  ::unsetenv("TROPIGRAPH_EXACT_LIMIT");
  CHECK(limits_from_env().theta_vertices == SearchLimits{}.theta_vertices);
}

TEST_CASE("verify exit codes") {
  const std::string graph = write_temp("p4.g6", "Ch\n");
  const std::string wrong = write_temp("c4.g6", to_graph6(cycle_graph(4)) + "\n");
  const auto rep = run({"repr", "--algebra", "min", "--method", "generic"}, "Ch\n");
  const std::string rep_file = write_temp("p4.json", rep.out);

  auto r = run({"verify", "--graph", graph, "--rep", rep_file});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["valid"] == true);

  r = run({"verify", "--graph", wrong, "--rep", rep_file});
  CHECK(r.code == kExitViolation);
  CHECK(Json::parse(r.out)["violations"].size() == 1);

  const std::string k5 = write_temp("k5.g6", to_graph6(complete_graph(5)) + "\n");
  CHECK(run({"verify", "--graph", k5, "--rep", rep_file}).code == kExitInputError);
  const std::string junk = write_temp("junk.json", "{\"algebra\":\"min-plus\"}");
  CHECK(run({"verify", "--graph", graph, "--rep", junk}).code == kExitInputError);
  CHECK(run({"verify", "--graph", graph, "--rep", "/nonexistent/rep.json"}).code ==
        kExitInputError);
}

TEST_CASE("slices") {
  const auto rep = run({"repr", "--algebra", "max", "--method", "cover"}, "Ch\n");
  const std::string file = write_temp("slices.json", rep.out);
  const auto r = run({"slices", "--rep", file});
  CHECK(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["slices"].size() == 2);
  CHECK(j["law"] == "union");
  CHECK(j["holds"] == true);
}

TEST_CASE("conjecture and demos") {
  auto r = run({"conjecture", "--n-max", "4"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["classes"] == 18);
  CHECK(run({"conjecture", "--n-max", "9"}).code == kExitInputError);

  r = run({"demo", "students"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("edges: A-C A-F B-E C-D E-F") != std::string::npos);
  r = run({"demo", "funds"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("A-H") != std::string::npos);
  CHECK(run({"demo", "weather"}).code == kExitInputError);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);
}
