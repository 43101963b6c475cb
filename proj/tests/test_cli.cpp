#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/stat.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"
#include "olab/report.hpp"

using testutil::run_command;

TEST_CASE("classify matches the library output") {
  const auto res = run_command("classify --p 1 --q 11 --format json");
  CHECK(res.exit_code == 0);
  CHECK(res.output == olab::classification_json(olab::classify(1, 11)));
  const auto parsed = nlohmann::json::parse(res.output);
  CHECK(parsed["overlap"] == true);
  CHECK(parsed["regime"] == "proper_fraction");
}

TEST_CASE("classify text for a non-overlap input") {
  const auto res = run_command("classify --p 1 --q 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("exact overlap: no") != std::string::npos);
}

TEST_CASE("witness emits the canonical blocks") {
  const auto res = run_command("witness --p 1 --q 3 --format json");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "{\"p\":1,\"q\":3,\"depth\":2,\"block_i\":[0,12],\"block_j\":[3,0]}\n");
}

TEST_CASE("witness reports exhaustive absence") {
  const auto res = run_command("witness --p 1 --q 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("no exact overlap") != std::string::npos);
  CHECK(res.output.find("exhausted within depth 7") != std::string::npos);
}

TEST_CASE("witness input is reduced before searching") {
  const auto direct = run_command("witness --p 1 --q 3 --format json");
  const auto reduced = run_command("witness --p 2 --q 6 --format json");
  CHECK(direct.output == reduced.output);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_command("classify --p 1 2>/dev/null").exit_code == 1);
  CHECK(run_command("classify --p 0 --q 5 2>/dev/null").exit_code == 1);
  CHECK(run_command("witness --p 3 --q 1 2>/dev/null").exit_code == 1);
  CHECK(run_command("nonsense 2>/dev/null").exit_code == 1);
  CHECK(run_command("2>/dev/null").exit_code == 1);
}

TEST_CASE("width overflow exits with code 3") {
  const auto res = run_command("measure --p 1 --q 2 --level 40 2>/dev/null");
  CHECK(res.exit_code == 3);
}

TEST_CASE("verify at a small bound agrees and exits 0") {
  const auto res = run_command("verify --max-sum 24");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("disagreements: 0") != std::string::npos);
}

TEST_CASE("density rows are sorted and deduplicated") {
  const auto res = run_command("density --N 20 --N 10 --N 20 --format csv");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.output);
  std::string line;
  std::getline(lines, line);  // header
  std::getline(lines, line);
  CHECK(line.rfind("10,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("20,", 0) == 0);
  CHECK_FALSE(std::getline(lines, line));
}

TEST_CASE("jobs flag and environment variable do not change results") {
  const auto serial = run_command("density --N 400 --format csv");
  const auto parallel = run_command("density --N 400 --format csv --jobs 3");
  const auto via_env = run_command("density --N 400 --format csv", "OVERLAP_LAB_JOBS=4 ");
  CHECK(serial.exit_code == 0);
  CHECK(serial.output == parallel.output);
  CHECK(serial.output == via_env.output);
  const auto bad_env = run_command("density --N 10 2>/dev/null", "OVERLAP_LAB_JOBS=zero ");
  CHECK(bad_env.exit_code == 1);
}

TEST_CASE("measure emits the JSON schema") {
  const auto res = run_command("measure --p 1 --q 2 --level 3 --format json");
  CHECK(res.exit_code == 0);
  const auto parsed = nlohmann::json::parse(res.output);
  CHECK(parsed["measure_num"] == 3);
  CHECK(parsed["measure_den"] == 2);
  CHECK(parsed["D_n"] == 64);
}

TEST_CASE("output files are written atomically") {
  const std::string dir = "/tmp/olab_cli_test";
  std::remove((dir + "/grid.pgm").c_str());
  std::remove((dir + "/grid.pgm.tmp").c_str());
  rmdir(dir.c_str());
  REQUIRE(mkdir(dir.c_str(), 0755) == 0);

  const auto res = run_command("grid --N 16 --format pgm --output " + dir + "/grid.pgm");
  CHECK(res.exit_code == 0);
  CHECK(res.output.empty());

  std::ifstream in(dir + "/grid.pgm", std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == olab::grid_pgm(olab::render_W_grid(16)));

  std::ifstream tmp(dir + "/grid.pgm.tmp");
  CHECK_FALSE(tmp.good());
}

TEST_CASE("measure endpoint dump goes to its own file") {
  const std::string path = "/tmp/olab_cli_test_endpoints.csv";
  std::remove(path.c_str());
  const auto res =
      run_command("measure --p 1 --q 2 --level 2 --format json --endpoints-csv " + path);
  CHECK(res.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == olab::endpoints_csv({1, 2}, 2));
}
