#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "prabhakar/cli.hpp"

using namespace prabhakar;
using namespace prabhakar::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "prabhakar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("sweep parsing") {
    CHECK(parse_sweep("0.5") == std::vector<double>{0.5});
    CHECK(parse_sweep("1,2,3") == std::vector<double>{1, 2, 3});
    CHECK(parse_sweep("0:1:5") == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    CHECK_THROWS_AS(parse_sweep("0:1"), ParameterError);
    CHECK_THROWS_AS(parse_sweep("a"), ParameterError);
    CHECK_THROWS_AS(parse_sweep(""), ParameterError);
    CHECK(parse_int_list("0..3") == std::vector<int>{0, 1, 2, 3});
    CHECK(parse_int_list("2,5") == std::vector<int>{2, 5});
    CHECK_THROWS_AS(parse_int_list("3..1"), ParameterError);
    CHECK(parse_command("verify") == Command::Verify);
    CHECK(std::string(command_name(Command::CmCheck)) == "cm-check");
  }

  TEST_CASE("writers") {
    Table t{{"a", "b", "c"}, {{0.1, std::string("x,y"), Cell{}}, {std::nan(""), 3LL, std::string("ok")}}};
    std::ostringstream csv, json;
    write_csv(t, csv);
    CHECK(csv.str() == "a,b,c\n0.10000000000000001,\"x,y\",\nnan,3,ok\n");
    write_json(t, json);
    const auto j = nlohmann::json::parse(json.str());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["a"].get<double>() == 0.1);
    CHECK(j[0]["c"].is_null());
    CHECK(j[1]["a"].is_null());
    CHECK(j[1]["b"].get<long long>() == 3);
  }

  TEST_CASE("two routes agree on the documented example") {
    const Run r = run_cli({"eval-prabhakar", "--alpha", "0.5", "--beta", "1", "--gamma", "1", "--theta", "0",
                           "--lambda", "1", "--x", "1", "--routes", "series,mixture"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == "alpha,beta,gamma,theta,lambda,x,series,mixture,dev_series_mixture,status");
    CHECK(l[1].rfind(",ok") == l[1].size() - 3);
  }

  TEST_CASE("moments row n = 1") {
    const Run r = run_cli({"moments", "--alpha", "0.5", "--beta", "1", "--gamma", "1", "--theta", "0", "--n", "0..3"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 5);
    CHECK(l[2].rfind("0.5,1,1,0,1,1.12837916709551", 0) == 0);
  }

  TEST_CASE("invalid parameters name the constraint") {
    const Run r = run_cli({"eval-prabhakar", "--theta", "-0.6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("theta must exceed -alpha*gamma") != std::string::npos);
    // inside a sweep the bad row is reported and the rest evaluated
    const Run s = run_cli({"eval-prabhakar", "--theta", "-0.6,0"});
    CHECK(s.code == 0);
    CHECK(s.out.find("invalid: theta must exceed -alpha*gamma") != std::string::npos);
    CHECK(lines(s.out).size() == 3);
  }

  TEST_CASE("usage errors") {
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"eval-ml", "--alpha", "1:2"}).code == 2);
    CHECK(run_cli({"verify", "--suite", "nope"}).code == 2);
    CHECK(run_cli({"eval-ml", "--routes", "magic"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
  }

  TEST_CASE("cm-check exit status follows the check") {
    CHECK(run_cli({"cm-check", "--alpha", "0.5"}).code == 0);
    CHECK(run_cli({"cm-check", "--function", "exp"}).code == 0);
    CHECK(run_cli({"cm-check", "--function", "cos"}).code == 1);
  }

  TEST_CASE("output is deterministic across thread counts") {
    const std::vector<std::string> base{"eval-mixture", "--alpha", "0.4,0.8", "--beta", "1.5", "--gamma", "1",
                                        "--theta", "0:0.5:3", "--lambda", "0.5,2", "--x", "1", "--format", "json"};
    auto one = base, many = base;
    one.insert(one.end(), {"--threads", "1"});
    many.insert(many.end(), {"--threads", "4"});
    const Run a = run_cli(one), b = run_cli(many);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out).size() == 12);
  }

  TEST_CASE("sample emits draws and summaries") {
    const Run r = run_cli({"sample", "--alpha", "0.5", "--count", "2000", "--seed", "3"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l.size() == 1 + 2000 + 2 + 3);
    CHECK(run_cli({"sample", "--alpha", "0.5", "--count", "50", "--seed", "3"}).out ==
          run_cli({"sample", "--alpha", "0.5", "--count", "50", "--seed", "3"}).out);
  }

  TEST_CASE("default output directory from the environment") {
    const auto dir = std::filesystem::temp_directory_path() / "prabhakar_cli_test";
    std::filesystem::create_directories(dir);
    setenv("PRABHAKAR_OUTPUT_DIR", dir.c_str(), 1);
    const Run r = run_cli({"eval-stable", "--alpha", "0.5", "--x", "1"});
    unsetenv("PRABHAKAR_OUTPUT_DIR");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(dir / "eval-stable.csv");
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "alpha,t,x,pdf,cdf,ccdf,branch,status");
    // an explicit "-" still goes to stdout
    setenv("PRABHAKAR_OUTPUT_DIR", dir.c_str(), 1);
    CHECK_FALSE(run_cli({"eval-stable", "--output", "-"}).out.empty());
    unsetenv("PRABHAKAR_OUTPUT_DIR");
    std::filesystem::remove_all(dir);
  }
}
