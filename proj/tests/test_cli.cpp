// End-to-end runs of the command-line tool: output strings, exit codes,
// file round-trips, and determinism across invocations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stp/serialization.hpp"
#include "stp/tensor.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int status = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string("\"") + STP_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, "popen failed"};
  std::string out;
  char buffer[4096];
  while (fgets(buffer, sizeof buffer, pipe) != nullptr) out += buffer;
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("stp_cli_" + name);
}

std::string write_fixture(const std::string& name, const std::string& text) {
  const auto path = fixture_path(name);
  stp::save_text_file(path.string(), text);
  return path.string();
}

}  // namespace

TEST_CASE("bounds prints the exact order-3 numbers") {
  const auto r = run_cli("bounds --n 3");
  CHECK(r.status == 0);
  CHECK(r.output.find("10395") != std::string::npos);
  CHECK(r.output.find("64/27") != std::string::npos);
  CHECK(r.output.find("C(23,19) + C(22,19)") != std::string::npos);
  CHECK(r.output.find("lbt_lower:                11") != std::string::npos);
}

TEST_CASE("bounds renders a two-block table over a range") {
  const auto r = run_cli("bounds --n 2 --n-max 5");
  CHECK(r.status == 0);
  CHECK(r.output.find("lower bounds and exact counts") != std::string::npos);
  CHECK(r.output.find("upper bounds") != std::string::npos);
  CHECK(r.output.find("161280") != std::string::npos);
  CHECK(r.output.find("709721037200") != std::string::npos);
}

TEST_CASE("bounds emits machine-readable JSON and CSV") {
  const auto json_run = run_cli("bounds --n 2 --n-max 4 --format json");
  REQUIRE(json_run.status == 0);
  const auto doc = nlohmann::json::parse(json_run.output);
  REQUIRE(doc["reports"].size() == 3);
  CHECK(doc["reports"][1]["new_upper"]["exact"] == "10395");
  CHECK(doc["reports"][2]["latin_count"] == "576");

  const auto csv_run = run_cli("bounds --n 2 --n-max 4 --format csv");
  REQUIRE(csv_run.status == 0);
  CHECK(csv_run.output.find("n,lower_latin_ratio_exact") == 0);
  CHECK(csv_run.output.find("\"C(23,19) + C(22,19)\"") != std::string::npos);
}

TEST_CASE("bounds rejects orders outside its range") {
  CHECK(run_cli("bounds --n 1").status == 2);
  CHECK(run_cli("bounds --n 3 --n-max 2").status == 2);
}

TEST_CASE("enumerate reports total / integral / nonintegral") {
  const auto r = run_cli("enumerate --n 2");
  CHECK(r.status == 0);
  CHECK(r.output == "2 / 2 / 0\n");
}

TEST_CASE("enumerate writes a loadable vertex-set document") {
  const auto out = fixture_path("vertices2.json");
  const auto r = run_cli("enumerate --n 2 --out " + out.string());
  REQUIRE(r.status == 0);
  std::ifstream in(out);
  std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto set = stp::read_vertex_set(doc);
  CHECK(set.n == 2);
  CHECK(set.vertices.size() == 2);
  std::filesystem::remove(out);
}

TEST_CASE("check certifies vertexhood and flags violations") {
  stp::LatinSquare s(2);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(1, 0) = 2;
  s.at(1, 1) = 1;
  const auto vertex_file = write_fixture("vertex.json", stp::write_tensor(stp::latin_to_tensor(s)));
  auto r = run_cli("check --tensor " + vertex_file);
  CHECK(r.status == 0);
  CHECK(r.output == "valid, vertex (active rank 8/8)\n");

  stp::StochasticTensor uniform(2);
  for (auto& v : uniform.entries) v = stp::Rational(1, 2);
  const auto uniform_file = write_fixture("uniform.json", stp::write_tensor(uniform));
  r = run_cli("check --tensor " + uniform_file);
  CHECK(r.status == 0);
  CHECK(r.output == "valid, not a vertex (active rank 7/8)\n");

  stp::StochasticTensor bad = uniform;
  bad.at(0, 0, 0) = stp::Rational(-1, 2);
  const auto bad_file = write_fixture("bad.json", stp::write_tensor(bad));
  r = run_cli("check --tensor " + bad_file);
  CHECK(r.status == 1);
  CHECK(r.output == "invalid: entry (0,0,0) < 0\n");

  const auto ragged_file =
      write_fixture("ragged.json", "{\"n\": 2, \"entries\": [[[\"1\",\"0\"],[\"0\",\"1\"]]]}\n");
  r = run_cli("check --tensor " + ragged_file);
  CHECK(r.status == 2);

  for (const auto& name : {"vertex.json", "uniform.json", "bad.json", "ragged.json"})
    std::filesystem::remove(fixture_path(name));
}

TEST_CASE("decompose verifies its own reconstruction and is deterministic") {
  const auto first = run_cli("decompose --n 3 --seed 42");
  CHECK(first.status == 0);
  CHECK(first.output.find("reconstruction: exact") != std::string::npos);
  CHECK(first.output.find("sum of weights: 1") != std::string::npos);
  const auto second = run_cli("decompose --n 3 --seed 42");
  CHECK(second.output == first.output);
}

TEST_CASE("decompose splits the uniform order-2 member into two half-weight vertices") {
  stp::StochasticTensor uniform(2);
  for (auto& v : uniform.entries) v = stp::Rational(1, 2);
  const auto path = write_fixture("uniform_decompose.json", stp::write_tensor(uniform));
  const auto r = run_cli("decompose --tensor " + path);
  CHECK(r.status == 0);
  CHECK(r.output.find("terms: 2") != std::string::npos);
  CHECK(r.output.find("1: weight 1/2, integral vertex") != std::string::npos);
  CHECK(r.output.find("2: weight 1/2, integral vertex") != std::string::npos);
  std::filesystem::remove(fixture_path("uniform_decompose.json"));
}

TEST_CASE("decompose requires exactly one source") {
  CHECK(run_cli("decompose").status == 2);
  CHECK(run_cli("decompose --tensor /tmp/x.json --n 3").status == 2);
}

TEST_CASE("latin agrees across its two counting routes") {
  const auto r = run_cli("latin --n 3");
  CHECK(r.status == 0);
  CHECK(r.output.find("backtracking:       12") != std::string::npos);
  CHECK(r.output.find("permanent formula:  12") != std::string::npos);
  CHECK(r.output.find("agree") != std::string::npos);

  const auto json_run = run_cli("latin --n 4 --format json");
  REQUIRE(json_run.status == 0);
  const auto doc = nlohmann::json::parse(json_run.output);
  CHECK(doc["backtracking"] == "576");
  CHECK(doc["permanent_formula"] == "576");
  CHECK(doc["agree"] == true);

  CHECK(run_cli("latin --n 6").status == 2);
}

TEST_CASE("verify exits zero when every comparison passes") {
  const auto r = run_cli("verify --n-max 5");
  CHECK(r.status == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("pass") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2 and help exits clean") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("no-such-command").status == 2);
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("bounds --help").status == 0);
}
