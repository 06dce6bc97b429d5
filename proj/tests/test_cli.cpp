#include <altcone/cli.hpp>

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace altcone;

namespace {

struct Run {
  int status;
  Json out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run_command(args, out, err);
  Json parsed;
  if (status == cli::kExitOk && !out.str().empty() && out.str().front() == '{') parsed = Json::parse(out.str());
  return {status, parsed, err.str()};
}

std::string sample(const char* name) { return std::string(ALTCONE_SAMPLES) + "/" + name; }

}  // namespace

TEST_CASE("dim") {
  const auto r = run({"dim", sample("parallel_pair.json")});
  REQUIRE(r.status == 0);
  CHECK(r.out["dimension"] == 1);
  CHECK(r.out["essential_edges"] == 2);
  CHECK(r.out["bipartite_components"] == 1);
}

TEST_CASE("essential") {
  const auto r = run({"essential", sample("bicycle.json")});
  REQUIRE(r.status == 0);
  CHECK(r.out["essential"] == Json::array({0, 1, 2, 3, 4, 5, 6}));
}

TEST_CASE("threshold") {
  const auto r = run({"threshold", sample("path4.json")});
  REQUIRE(r.status == 0);
  CHECK(r.out["degree_elimination"] == false);
  CHECK(r.out["hat_dimension"] == 1);
  CHECK(r.out["agree"] == true);
  CHECK(r.out["alternating_c4"].size() == 9);
  CHECK(r.out["weights"].is_null());
  CHECK(run({"threshold", sample("parallel_pair.json")}).status == cli::kExitInput);
}

TEST_CASE("decompose") {
  const auto rays = run({"decompose", "--mode", "rays", sample("bicycle.json")});
  REQUIRE(rays.status == 0);
  REQUIRE(rays.out["terms"].size() == 1);
  CHECK(rays.out["terms"][0]["kind"] == "bicycle");
  CHECK(rays.out["terms"][0]["coefficient"] == "1/2");

  const auto caw = run({"decompose", "--mode", "caw", sample("center.json")});
  REQUIRE(caw.status == 0);
  CHECK(caw.out["terms"].size() >= 1);

  const auto cat = run({"decompose", "--mode", "cat", sample("hexagon.json")});
  REQUIRE(cat.status == 0);
  CHECK(cat.out["terms"].size() == 1);

  CHECK(run({"decompose", "--mode", "caw", sample("bicycle.json")}).status == cli::kExitInput);
  CHECK(run({"decompose", "--mode", "cat", sample("center.json")}).status == cli::kExitInput);
  CHECK(run({"decompose", "--mode", "nope", sample("center.json")}).status == cli::kExitUsage);
  CHECK(run({"decompose", sample("path4.json")}).status == cli::kExitInput);
}

TEST_CASE("feasible") {
  const auto r = run({"feasible", sample("parallel_pair.json")});
  REQUIRE(r.status == 0);
  CHECK(r.out["verdict"] == "feasible");
  CHECK(r.out["witness"] == Json::array({"1", "1"}));

  const auto integral = run({"feasible", sample("bicycle.json")});
  REQUIRE(integral.status == 0);
  CHECK(integral.out["verdict"] == "infeasible");
  CHECK(integral.out["side"] == "below_lower");

  const auto rational = run({"feasible", "--rational", sample("bicycle.json")});
  REQUIRE(rational.status == 0);
  CHECK(rational.out["verdict"] == "feasible");
  CHECK(rational.out["witness"][0] == "1/2");
  CHECK(rational.out["witness"][3] == "1");
}

TEST_CASE("reach and cat-through") {
  const auto r = run({"reach", sample("bicycle.json"), "1", "4"});
  REQUIRE(r.status == 0);
  CHECK(r.out["reachable"] == true);
  CHECK(r.out["trail"].front() == 1);
  CHECK(r.out["trail"].back() == 4);

  const auto c = run({"cat-through", sample("parallel_pair.json"), "0"});
  REQUIRE(c.status == 0);
  CHECK(c.out["exists"] == true);
  CHECK(run({"cat-through", sample("bicycle.json"), "3"}).out["exists"] == false);
  CHECK(run({"cat-through", sample("bicycle.json"), "9"}).status == cli::kExitInput);
  CHECK(run({"reach", sample("bicycle.json"), "1", "1"}).status == cli::kExitInput);
}

TEST_CASE("sequence commands") {
  CHECK(run({"majorize", "3,1,1,1", "2,2,1,1"}).out["majorization"] == "strict");
  CHECK(run({"majorize", "2,1", "1,2"}).out["majorization"] == "permutation");
  CHECK(run({"majorize", "2,0", "1,1,1"}).status == cli::kExitInput);
  CHECK(run({"majorize", "2,x", "1,1"}).status == cli::kExitInput);

  const auto m = run({"muirhead", "4,0", "2,2"});
  REQUIRE(m.status == 0);
  CHECK(m.out["steps"] == Json::parse("[[0,1],[0,1]]"));
  CHECK(run({"muirhead", "2,2,1,1", "3,1,1,1"}).out["steps"].is_null());

  CHECK(run({"degdim", "3,1,1,1"}).out["dimension"] == 0);
  CHECK(run({"degdim", "2,2,1,1"}).out["dimension"] == 1);
  CHECK(run({"degdim", "1,1,1,1"}).out["dimension"] == 2);
  CHECK(run({"degdim", "3,1"}).out["graphical"] == false);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).status == cli::kExitUsage);
  CHECK(run({"frobnicate"}).status == cli::kExitUsage);
  CHECK(run({"dim"}).status == cli::kExitUsage);
  CHECK(run({"dim", "/no/such/file.json"}).status == cli::kExitInput);
  CHECK(run({"reach", sample("bicycle.json"), "1"}).status == cli::kExitUsage);
}
