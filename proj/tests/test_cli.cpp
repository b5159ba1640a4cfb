#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "flopwall/errors.hpp"
#include "flopwall/report.hpp"
#include "flopwall/run_config.hpp"
#include "flopwall/suites.hpp"

using namespace flopwall;
using namespace flopwall::cli;

namespace {

std::string emit_string(const Report& rep, Format f) {
  std::ostringstream o;
  emit(rep, f, o);
  return o.str();
}

#ifdef FLOPWALL_CLI_PATH
int run_cli(const std::string& args) {
  std::string cmd = std::string(FLOPWALL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
#endif

std::string temp_file(const std::string& name, const std::string& contents) {
  std::string path = "flopwall_test_" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_run_config: defaults and explicit weights") {
  auto rc = parse_run_config("{}");
  CHECK(rc.n == 2);
  CHECK(rc.r == 1);
  CHECK(rc.suite == "all");
  CHECK(rc.tolerance("continuation") == default_tolerance("continuation"));

  rc = parse_run_config(R"({"schema_version": 1, "n": 3, "r": 2,
      "weights": {"x": ["1/3", "-2/5", "0.7"], "z": ["3/7", 2, "5/11"]},
      "z_eval": [2.0, 0.5], "tol": {"ktheory": 1e-9}, "path": {"q_out": 4.0}, "suite": "ktheory"})");
  auto cfg = rc.flop_config();
  CHECK(cfg.n() == 3);
  CHECK(cfg.r() == 2);
  CHECK(cfg.x()[2] == Rational(7, 10));
  CHECK(cfg.z()[1] == Rational(2));
  CHECK(rc.z_eval == Complex(2.0, 0.5));
  CHECK(rc.tolerance("ktheory") == 1e-9);
  CHECK(rc.path.q_out == 4.0);
}

TEST_CASE("parse_run_config: rejections") {
  CHECK_THROWS_AS(parse_run_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"weights": {"y": []}})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"schema_version": 99})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"z_eval": "two"})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"n": 2, "r": 2})").flop_config(), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"n": 2, "r": 1, "weights": {"x": ["1", "1"], "z": ["2", "3"]}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"weights": {"x": ["1", "2"], "z": ["2", "3"]}})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"weights": {"x": ["1", "2", "4"], "z": ["5", "3"]}})"), ConfigError);
  CHECK_THROWS_AS(load_run_config("/nonexistent/flopwall.json"), IoError);
}

TEST_CASE("random_config is deterministic, bounded and generic") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    auto a = random_config(4, 2, seed), b = random_config(4, 2, seed);
    CHECK(a.x() == b.x());
    CHECK(a.z() == b.z());
    for (const auto& v : a.x()) CHECK(std::abs(v.to_double()) <= 5.0);
    for (const auto& v : a.z()) CHECK(std::abs(v.to_double()) <= 5.0);
  }
  CHECK(random_config(4, 2, 1).x() != random_config(4, 2, 2).x());
}

TEST_CASE("report emission") {
  Report rep;
  rep.version = kVersion;
  rep.seed = 7;
  rep.config_echo = parse_run_config("{}").echo_json();
  rep.cases.push_back({"geometry", "count", {{"n", "2"}}, Status::pass, 0.0, 1.5, ""});
  rep.cases.push_back({"ktheory", "fm", {{"n", "2"}}, Status::fail, 0.25, 2.0, "too far"});
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.exit_code() == 1);

  auto j1 = emit_string(rep, Format::json), j2 = emit_string(rep, Format::json);
  CHECK(j1 == j2);
  CHECK(j1.find("\"schema_version\": 1") != std::string::npos);
  CHECK(j1.find("runtime_ms") == std::string::npos);
  rep.timings = true;
  CHECK(emit_string(rep, Format::json).find("runtime_ms") != std::string::npos);

  auto csv = emit_string(rep, Format::csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.rfind("suite,", 0) == 0);

  auto text = emit_string(rep, Format::text);
  CHECK(text.find("PASS geometry (1/1)") != std::string::npos);
  CHECK(text.find("FAIL ktheory (0/1)") != std::string::npos);

  CHECK(json_number(0.1) == "0.10000000000000001");
  CHECK(json_number(std::nan("")) == "null");
  CHECK(json_string("a\"b\n") == "\"a\\\"b\\n\"");
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("run_suite") {
  auto rc = parse_run_config(R"({"n": 4, "r": 3, "weights": {"seed": 3}})");
  auto rep = run_suite(rc, "identities");
  CHECK(rep.all_pass());
  CHECK(rep.cases.size() == 2);
  rc = parse_run_config(R"({"n": 3, "r": 1, "weights": {"seed": 5}})");
  rep = run_suite(rc, "all");
  CHECK(rep.all_pass());
  CHECK(emit_string(rep, Format::json) == emit_string(run_suite(rc, "all"), Format::json));
  CHECK_THROWS_AS(run_suite(rc, "nonsense"), ConfigError);
}

TEST_CASE("run_cases keeps order and captures exceptions") {
  std::vector<std::function<CaseResult()>> tasks;
  for (int i = 0; i < 20; ++i)
    tasks.push_back([i]() -> CaseResult {
      if (i == 7) throw std::runtime_error("boom");
      CaseResult c;
      c.name = std::to_string(i);
      c.status = Status::pass;
      return c;
    });
  auto out = run_cases(tasks, 4);
  REQUIRE(out.size() == 20);
  CHECK(out[3].name == "3");
  CHECK(out[7].status == Status::error);
  CHECK(out[7].message.find("boom") != std::string::npos);
}

#ifdef FLOPWALL_CLI_PATH
TEST_CASE("binary exit codes") {
  CHECK(run_cli("--version") == 0);
  CHECK(run_cli("verify --suite identities") == 0);
  CHECK(run_cli("--bogus") == 2);
  CHECK(run_cli("verify --suite nonsense") == 2);
  auto bad = temp_file("bad.json", R"({"weights": {"x": ["1", "1"], "z": ["2", "3"]}})");
  CHECK(run_cli("verify --config " + bad) == 2);
  auto unk = temp_file("unknown.json", R"({"color": "red"})");
  CHECK(run_cli("verify --config " + unk) == 2);
  CHECK(run_cli("verify --config /nonexistent/x.json") == 2);
  auto good = temp_file("good.json", R"({"n": 3, "r": 2, "weights": {"seed": 4}})");
  CHECK(run_cli("verify --suite geometry --config " + good) == 0);
  CHECK(run_cli("fm --delta 1") == 0);
  CHECK(run_cli("barnes --w 1.0,3.14159") == 0);
  std::remove(bad.c_str());
  std::remove(unk.c_str());
  std::remove(good.c_str());
}
#endif

}  // TEST_SUITE
