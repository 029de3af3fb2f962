#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "unif/report.hpp"

using namespace unif;
using ojson = nlohmann::ordered_json;

namespace {
struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "unif");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int st = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {st, out.str(), err.str()};
}
}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"verify", "nonsense"}).status == kExitUsage);
  CHECK(run({"eval", "theta", "--tau", "0,-1"}).status == kExitUsage);
  CHECK(run({"invert", "--value", "abc"}).status == kExitUsage);
  CHECK(run({"discriminant", "--poly", "/nonexistent/file"}).status == kExitUsage);
  CHECK(run({"--tol", "-1", "verify", "curves"}).status == kExitUsage);
}

TEST_CASE("numeric failures exit with 3") {
  // the theta series cannot converge this close to the real axis
  auto r = run({"eval", "theta", "--tau", "0.3,1e-7"});
  CHECK(r.status == kExitNumeric);
  CHECK(r.err.find("numeric failure") != std::string::npos);
}

TEST_CASE("verify curves with the documented seed") {
  auto r = run({"verify", "curves", "--samples", "20", "--seed", "7"});
  CHECK(r.status == kExitPass);
  auto doc = ojson::parse(r.out);
  CHECK(doc["schema"] == kSchemaVersion);
  CHECK(doc["command"] == "verify curves");
  CHECK(doc["pass"] == true);
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("residual"));
    CHECK(c.contains("tol"));
    CHECK(c.contains("pass"));
  }
}

TEST_CASE("tolerance zero forces a check failure") {
  CHECK(run({"--tol", "0", "verify", "identities", "--samples", "5"}).status == kExitCheckFail);
  CHECK(run({"verify", "identities", "--samples", "5", "--tol", "1e-3"}).status == kExitPass);
#ifndef _WIN32
  setenv("UNIF_TOL", "0", 1);
  CHECK(run({"verify", "identities", "--samples", "5"}).status == kExitCheckFail);
  unsetenv("UNIF_TOL");
#endif
}

TEST_CASE("output is byte-identical across runs") {
  for (auto args : std::vector<std::vector<std::string>>{{"verify", "modular-odes", "--seed", "9", "--samples", "4"},
                                                         {"quintic", "--a", "0.01,0"},
                                                         {"--format", "jsonl", "polygon", "--genus", "2", "--emit"}}) {
    CHECK(run(args).out == run(args).out);
  }
  CHECK(run({"--timing", "eval", "j", "--tau", "0,1"}).out.find("wall_time_s") != std::string::npos);
  CHECK(run({"eval", "j", "--tau", "0,1"}).out.find("wall_time_s") == std::string::npos);
}

TEST_CASE("jsonl records") {
  auto r = run({"--format", "jsonl", "quintic", "--a", "0.01,0"});
  CHECK(r.status == kExitPass);
  std::istringstream is(r.out);
  std::string line, last;
  int checks = 0;
  while (std::getline(is, line)) {
    auto j = ojson::parse(line);
    CHECK(j["schema"] == 1);
    if (j["record"] == "check") ++checks;
    last = j["record"];
  }
  CHECK(checks == 4);
  CHECK(last == "summary");
}

TEST_CASE("quintic example") {
  auto doc = ojson::parse(run({"quintic", "--a", "0.01,0"}).out);
  CHECK(doc["data"]["roots"].size() == 5);
  for (const auto& r : doc["data"]["poly_residuals"]) CHECK(r.get<double>() < 1e-10);
}

TEST_CASE("exact-values reports the lemniscate row and fails on it") {
  auto r = run({"exact-values"});
  CHECK(r.status == kExitCheckFail);
  auto doc = ojson::parse(r.out);
  bool found = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "lemniscate omega = 1.85407467862567819586995") {
      found = true;
      CHECK(c["pass"] == false);
    }
  CHECK(found);
}

TEST_CASE("polygon emission") {
  auto doc = ojson::parse(run({"polygon", "--genus", "2", "--emit"}).out);
  const auto& p = doc["data"]["polygon"];
  CHECK(p["arcs"].size() == 10);
  CHECK(p["cycles"].size() == 6);
  CHECK(p["pairings"].size() == 5);
  auto d = ojson::parse(run({"polygon", "--genus", "2", "--doubled", "--emit"}).out);
  CHECK(d["data"]["polygon"]["arcs"].size() == 18);
  CHECK(d["data"]["polygon"]["genus"] == 2);
  for (const auto& a : d["data"]["polygon"]["arcs"])
    for (const char* end : {"from", "to"}) {
      double re = a["disc"][end][0], im = a["disc"][end][1];
      CHECK(std::hypot(re, im) <= 1 + 1e-12);
    }
  auto e = run({"polygon", "--genus", "2", "--omega", "-0.5", "0", "1", "2", "3", "inf", "--epsilon", "0.5", "1.5",
                "2.5", "3.5", "--emit"});
  CHECK(e.status == kExitPass);
  CHECK(run({"polygon", "--genus", "2", "--omega", "0", "1", "inf", "--epsilon", "0.5"}).status == kExitUsage);
}

TEST_CASE("discriminant command") {
  std::string path = "cli_test_poly.txt";
  std::ofstream(path) << "y^2 - x^5 + x\n";
  auto doc = ojson::parse(run({"discriminant", "--poly", path}).out);
  CHECK(doc["data"]["discriminant"] == "x^5 - x");
  std::remove(path.c_str());
}

TEST_CASE("eval") {
  auto j = ojson::parse(run({"eval", "j", "--tau", "0,1"}).out);
  CHECK(std::abs(j["data"]["J"][0].get<double>() - 1) < 1e-14);
  auto k = ojson::parse(run({"eval", "k", "--tau", "0,1"}).out);
  CHECK(std::abs(k["data"]["k"][0].get<double>() - std::sqrt(0.5)) < 1e-14);
  auto t = ojson::parse(run({"eval", "theta", "--tau", "0.1,1.2"}).out);
  CHECK(t["data"].contains("theta2"));
  CHECK(run({"eval", "eta", "--tau", "0,1"}).status == 0);
}

TEST_CASE("invert command") {
  auto doc = ojson::parse(run({"invert", "--value", "0.3,0.2"}).out);
  CHECK(doc["pass"] == true);
  CHECK(doc["data"]["orbit"].size() == 24);
  auto c = ojson::parse(run({"invert", "--value", "1,0"}).out);
  CHECK(c["data"]["marker"] == "cusp");
  CHECK(c["data"]["tau0"].is_null());
}

TEST_CASE("helpers") {
  CHECK(parse_complex("1.5,-2") == cplx(1.5, -2));
  CHECK(parse_complex("3") == cplx(3, 0));
  CHECK_THROWS_AS(parse_complex("1,2,3"), DomainError);
  CHECK_THROWS_AS(parse_complex("inf,0"), DomainError);
  CheckRow r{"x", NAN, 1, ""};
  CHECK(check_json(r)["residual"].is_null());
  CHECK(curve_registry_json().size() >= 12);
  CheckTable a{{"x", 1, 2, ""}}, b{{"x", 3, 2, ""}, {"y", 0, 1, ""}};
  auto m = merge_max({a, b});
  REQUIRE(m.size() == 2);
  CHECK(m[0].residual == 3);
  CHECK_THROWS_AS(run_suite("none", {}), DomainError);
}
