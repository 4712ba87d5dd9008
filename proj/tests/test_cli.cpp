#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "doctest.h"
#include "json.hpp"
#include "qrea/cli/checks.hpp"

using namespace qrea;

namespace {

struct Run {
  int code;
  std::string out, err;
  std::vector<nlohmann::json> lines() const {
    std::vector<nlohmann::json> v;
    std::istringstream s(out);
    for (std::string l; std::getline(s, l);) v.push_back(nlohmann::json::parse(l));
    return v;
  }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("registry matches the manifest") {
  std::ifstream f(QREA_CHECK_MANIFEST);
  REQUIRE(f.good());
  std::vector<std::string> listed;
  for (std::string line; std::getline(f, line);) {
    if (line.empty() || line[0] == '#') continue;
    listed.push_back(line);
  }
  std::vector<std::string> registered;
  for (const auto& c : check_registry()) registered.push_back(c.name);
  CHECK(listed == registered);
  for (const auto& c : check_registry()) {
    CHECK(c.run);
    CHECK(!c.description.empty());
  }
}

TEST_CASE("unknown flag is a usage error with no certificates") {
  auto r = run({"check-all", "--N", "2", "--bogus"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"rea", "semiclassical", "--N", "4"}).code == 2);
}

TEST_CASE("check-all at N = 2") {
  auto r = run({"check-all", "--N", "2"});
  CHECK(r.code == 0);
  auto lines = r.lines();
  CHECK(lines.size() >= 12);
  for (const auto& j : lines) {
    CHECK(j["status"] == "pass");
    CHECK(j["command"] == "check-all");
  }
}

TEST_CASE("shape families as JSON") {
  auto r = run({"rea", "shapes", "--N", "3", "--json"});
  CHECK(r.code == 0);
  auto lines = r.lines();
  REQUIRE(lines.size() == 13);
  std::map<int, int> by_rank;
  for (const auto& j : lines) ++by_rank[j["rank"].get<int>()];
  CHECK(by_rank[3] == 4);
  CHECK(by_rank[2] == 6);
  CHECK(by_rank[1] == 3);
  CHECK(lines[1]["labels"][0]["name"] == "Z_{2,1}");
}

TEST_CASE("seeded streams are reproducible") {
  std::vector<std::string> args = {"classical", "tangency", "--N", "3", "--samples", "20", "--seed", "7"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  args.push_back("--serial");
  CHECK(run(args).out == a.out);
  auto other = run({"classical", "tangency", "--N", "3", "--samples", "20", "--seed", "8"});
  CHECK(other.out != a.out);

  setenv("QREA_SEED", "8", 1);
  auto env = run({"classical", "tangency", "--N", "3", "--samples", "20", "--seed", "7"});
  unsetenv("QREA_SEED");
  CHECK(env.out == other.out);
  CHECK(env.lines()[0]["seed"] == 8);
}

TEST_CASE("classical commands") {
  auto b = run({"classical", "build", "--shape", R"({"tau":[2,1],"u":["1","1"]})", "--weights", "2,-3"});
  CHECK(b.code == 0);
  auto j = b.lines().at(0);
  CHECK(j["status"] == "pass");
  CHECK(j["result"]["matrix"]["mode"] == "numeric");
  CHECK(run({"classical", "build", "--shape", R"({"tau":[2,1],"u":["1","1"]})", "--weights", "1,2"}).code == 2);

  std::string path = "test_cli_matrix.json";
  {
    std::ofstream f(path);
    f << R"({"N":2,"mode":"exact","entries":[[{"re":"0","im":"0"},{"re":"1","im":"0"}],[{"re":"1","im":"0"},{"re":"3/2","im":"0"}]]})";
  }
  auto s = run({"classical", "shape", path});
  CHECK(s.code == 0);
  CHECK(s.lines().at(0)["result"]["tau"] == nlohmann::json({2, 1}));
  auto d = run({"classical", "decompose", path});
  CHECK(d.code == 0);
  CHECK(std::abs(d.lines().at(0)["result"]["t"][0][1]["re"].get<double>() - 0.75) < 1e-12);
  CHECK(run({"classical", "leaf", path}).code == 0);
  CHECK(run({"classical", "shape", "missing.json"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("identity commands") {
  auto one = run({"verify", "laplace-row", "--N", "2", "--instance", R"({"I":[1,2],"J":[1,2],"K":[1],"K'":[1]})"});
  CHECK(one.code == 0);
  CHECK(one.lines().size() == 1);
  CHECK(run({"verify", "laplace", "--N", "2", "--instance", R"({"I":[1,2]})"}).code == 2);
  auto sweep = run({"rea", "verify", "gencomm", "--N", "2", "--sweep"});
  CHECK(sweep.code == 0);
  CHECK(sweep.lines().size() > 1);
  CHECK(run({"rea", "reflection", "--N", "2", "--leg", "Z13"}).code == 1);
  CHECK(run({"rea", "qcomm", "--shape", R"({"tau":[2,1,3],"u":["y","ybar","0"]})"}).code == 0);
  CHECK(run({"wedge-table", "--N", "3", "--k", "2", "--l", "1"}).code == 0);
  CHECK(run({"braid", "--N", "3", "--dump"}).lines().size() == 5);
}
