#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rhotensor/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = rhotensor::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json parse_out(const RunResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("roots command") {
  RunResult r = run_cli({"roots", "A2", "--json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r);
  CHECK(j["tool_version"] == "0.1.0");
  CHECK(j["lie_type"] == "A2");
  CHECK(j["command"] == "roots");
  CHECK(j["results"]["rank"] == 2);
  CHECK(j["results"]["num_positive_roots"] == 3);
  CHECK(j["results"]["weyl_order"] == 6);
  CHECK(j["results"]["dim_g"] == 8);
  CHECK(j["results"]["positive_roots"].size() == 3);
  CHECK(j["results"]["rho"] == json::array({1, 1}));
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);

  RunResult text = run_cli({"roots", "A2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("A2") != std::string::npos);
  CHECK(text.out.find("result: PASS") != std::string::npos);

  // Rationals serialize as p/q strings.
  RunResult g2 = run_cli({"roots", "G2", "--json"});
  json jg = parse_out(g2);
  CHECK(jg["results"]["symmetrizer"] == json::array({"1/3", 1}));
}

TEST_CASE("vertices command") {
  RunResult r = run_cli({"vertices", "B2", "--json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r);
  const json& vs = j["results"]["vertices"];
  REQUIRE(vs.size() == 4);
  // Reports are ordered by subset size, then lexicographically.
  CHECK(vs[0]["subset"] == json::array());
  CHECK(vs[0]["weight"] == json::array({2, 2}));
  CHECK(vs[1]["subset"] == json::array({1}));
  CHECK(vs[1]["weight"] == json::array({0, 4}));
  CHECK(vs[2]["subset"] == json::array({2}));
  CHECK(vs[2]["weight"] == json::array({3, 0}));
  CHECK(vs[3]["subset"] == json::array({1, 2}));
  CHECK(vs[3]["weight"] == json::array({0, 0}));
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);

  // Custom regular dominant mu; half integral vertices appear as p/q.
  RunResult rho = run_cli({"vertices", "B2", "--weights", "1", "1", "--json"});
  REQUIRE(rho.code == 0);
  json jr = parse_out(rho);
  CHECK(jr["results"]["vertices"][2]["weight"] == json::array({"3/2", 0}));

  CHECK(run_cli({"vertices", "B2", "--weights", "1", "0"}).code == 2);  // singular
  CHECK(run_cli({"vertices", "B2", "--weights", "1"}).code == 2);       // wrong count
}

TEST_CASE("tensor command") {
  RunResult r = run_cli({"tensor", "A1", "--weights", "1", "1", "--json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r);
  const json& comps = j["results"]["components"];
  REQUIRE(comps.size() == 2);
  CHECK(comps[0]["weight"] == json::array({0}));
  CHECK(comps[0]["multiplicity"] == 1);
  CHECK(comps[1]["weight"] == json::array({2}));
  CHECK(j["results"]["sum_of_dims"] == 4);

  RunResult a2 = run_cli({"tensor", "A2", "--weights", "1", "1", "1", "1", "--json"});
  REQUIRE(a2.code == 0);
  json ja = parse_out(a2);
  bool found = false;
  for (const auto& c : ja["results"]["components"]) {
    if (c["weight"] == json::array({1, 1})) {
      found = true;
      CHECK(c["multiplicity"] == 2);
    }
  }
  CHECK(found);
  CHECK(ja["results"]["sum_of_dims"] == 64);

  CHECK(run_cli({"tensor", "A2", "--weights", "1", "1", "1"}).code == 2);
  CHECK(run_cli({"tensor", "A2"}).code == 2);  // --weights is required
  CHECK(run_cli({"tensor", "A2", "--weights", "-1", "0", "1", "1"}).code == 2);
}

TEST_CASE("verify-kostant command") {
  RunResult r = run_cli({"verify-kostant", "B2", "--json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r);
  CHECK(j["results"]["num_points"] == 8);
  bool saw_vertex_check = false;
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    if (c["name"] == "vertex_mults_all_one") saw_vertex_check = true;
  }
  CHECK(saw_vertex_check);

  // The doubled point is reported with its multiplicity.
  bool saw_inner = false;
  for (const auto& p : j["results"]["points"]) {
    if (p["weight"] == json::array({0, 2})) {
      saw_inner = true;
      CHECK(p["multiplicity"] == 2);
      CHECK(p["is_vertex"] == false);
    }
  }
  CHECK(saw_inner);

  CHECK(run_cli({"verify-kostant", "F4"}).code == 2);  // gated behind --allow-large
  CHECK(run_cli({"verify-kostant", "Z9"}).code == 2);
}

TEST_CASE("verify-saturation command") {
  RunResult a2 = run_cli({"verify-saturation", "A2", "--json"});
  REQUIRE(a2.code == 0);
  json j = parse_out(a2);
  CHECK(j["results"]["d"] == 1);
  for (const auto& p : j["results"]["points"]) CHECK(p["multiplicity"].get<long long>() >= 1);

  RunResult b2 = run_cli({"verify-saturation", "B2", "--json"});
  REQUIRE(b2.code == 0);
  CHECK(parse_out(b2)["results"]["d"] == 2);

  RunResult b2d = run_cli({"verify-saturation", "B2", "--d", "2", "--json"});
  CHECK(b2d.code == 0);

  // No default factor for the exceptional series: d must be given.
  RunResult g2 = run_cli({"verify-saturation", "G2"});
  CHECK(g2.code == 2);
  CHECK(g2.err.find("--d") != std::string::npos);
  CHECK(run_cli({"verify-saturation", "G2", "--d", "1"}).code == 0);

  CHECK(run_cli({"verify-saturation", "A2", "--d", "0"}).code == 2);
  CHECK(run_cli({"verify-kostant", "A2", "--d", "2"}).code == 2);  // --d only here
}

TEST_CASE("verify-all command") {
  RunResult r = run_cli({"verify-all", "B2", "--json"});
  REQUIRE(r.code == 0);
  json j = parse_out(r);
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) {
    names.push_back(c["name"].get<std::string>());
    CHECK(c["pass"] == true);
  }
  CHECK(names == std::vector<std::string>{"root_system_invariants", "vertex_cross_check",
                                          "norm_inequality", "emptiness", "all_points_positive",
                                          "vertex_mults_all_one", "support_equals_lattice_points",
                                          "dimension_identity"});
  CHECK(j["results"]["emptiness_subsets_checked"] == 4);

  RunResult text = run_cli({"verify-all", "A2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("[PASS] emptiness") != std::string::npos);
  CHECK(text.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("json output is canonical") {
  // Key order is preserved, so an order-aware reparse reproduces the bytes.
  for (auto args : {std::vector<std::string>{"roots", "B2", "--json"},
                    std::vector<std::string>{"verify-kostant", "A2", "--json"}}) {
    RunResult r = run_cli(args);
    REQUIRE(r.code == 0);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
  }

  // Runs without timing fields are byte identical.
  RunResult r1 = run_cli({"vertices", "C3", "--json"});
  RunResult r2 = run_cli({"vertices", "C3", "--json"});
  CHECK(r1.out == r2.out);

  // Reports with timing agree after normalizing the runtime field.
  json k1 = parse_out(run_cli({"verify-kostant", "C2", "--json"}));
  json k2 = parse_out(run_cli({"verify-kostant", "C2", "--json"}));
  k1["results"]["runtime_ms"] = 0;
  k2["results"]["runtime_ms"] = 0;
  CHECK(k1.dump(2) == k2.dump(2));
}

TEST_CASE("argument and environment handling") {
  CHECK(run_cli({}).code == 2);                  // a subcommand is required
  CHECK(run_cli({"frobnicate", "A2"}).code == 2);
  CHECK(run_cli({"roots"}).code == 2);           // type is required

  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-kostant") != std::string::npos);

  RunResult version = run_cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find("0.1.0") != std::string::npos);

  // The dimension guard can come from the environment, flags take precedence.
  REQUIRE(setenv("RHO_TENSOR_MAX_DIM", "5", 1) == 0);
  RunResult gated = run_cli({"verify-kostant", "B2"});
  CHECK(gated.code == 2);
  CHECK(gated.err.find("guard") != std::string::npos);
  RunResult lifted = run_cli({"verify-kostant", "B2", "--max-dim", "100000"});
  CHECK(lifted.code == 0);
  REQUIRE(setenv("RHO_TENSOR_MAX_DIM", "not-a-number", 1) == 0);
  CHECK(run_cli({"roots", "A1"}).code == 2);
  REQUIRE(unsetenv("RHO_TENSOR_MAX_DIM") == 0);
  CHECK(run_cli({"verify-kostant", "B2"}).code == 0);
}
