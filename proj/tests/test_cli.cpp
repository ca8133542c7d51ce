// Golden tests for the CLI: exit codes and deterministic output.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(ORLICZLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("orlicz norm: exit 0 and correct value") {
  const RunResult r = run("orlicz norm --phi power:p=2 --values 3,4");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("norm").get<double>() == doctest::Approx(5.0).epsilon(1e-11));
  CHECK(j.at("modular_at_norm").get<double>() <= 1.0 + 1e-12);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("orlicz norm --phi powr:p=2 --values 1,2").exit_code == 2);
  CHECK(run("verify nonsense").exit_code == 2);
  CHECK(run("orlicz norm").exit_code == 2);  // missing required --values
  CHECK(run("verify bicomplex --mesh klein").exit_code == 2);
}

TEST_CASE("verify endtoend on the circle exits 0") {
  const RunResult r = run("verify endtoend --mesh circle:n=8 --seed 1");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("betti").at("1").get<int>() == 1);
}

TEST_CASE("reports are bit-identical across runs with one seed") {
  const std::string args = "verify endtoend --mesh circle:n=8 --seed 7";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const RunResult c = run("orlicz norm --phi exp --values 1,0.5");
  const RunResult d = run("orlicz norm --phi exp --values 1,0.5");
  CHECK(c.out == d.out);
}

TEST_CASE("norm table formats") {
  const RunResult csv =
      run("norm-table --phi power:p=2 --phi power:p=1 --values 1,2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("phi,norm,modular_at_norm,iterations", 0) == 0);
  const RunResult js = run("norm-table --phi power:p=2 --values 1,2");
  CHECK(js.exit_code == 0);
  CHECK(nlohmann::json::parse(js.out).is_array());
}

TEST_CASE("endtoend on the torus reproduces (1,2,1)") {
  const RunResult r = run("verify endtoend --mesh torus:m=6 --phi powerlog:p=2,kappa=1");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("betti").at("0").get<int>() == 1);
  CHECK(j.at("betti").at("1").get<int>() == 2);
  CHECK(j.at("betti").at("2").get<int>() == 1);
}

TEST_CASE("norm table over a mesh form") {
  const RunResult r =
      run("norm-table --phi power:p=2 --phi power:p=1 --mesh circle:n=8 --degree 1 --seed 2");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("lphi_norm").get<double>() > 0.0);
}

TEST_CASE("mesh info reports Betti numbers") {
  const RunResult r = run("mesh info --mesh sphere:icosa");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("betti") == nlohmann::json::array({1, 0, 1}));
}
