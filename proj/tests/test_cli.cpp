#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "superjac");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = superjac::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("invariants") {
    auto r = run({"invariants", "-p", "67", "-a", "5", "-b", "7", "-q", "1"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["genus"] == 12);
    CHECK(j["result"]["conductor_degree"] == "1632");
    CHECK(j["result"]["tamagawa"]["global"] == "1");
    auto s = run({"invariants", "-p", "5", "-a", "2", "-b", "3", "-q", "1"});
    auto js = nlohmann::json::parse(s.out);
    CHECK(js["result"]["genus"] == 1);
    CHECK(js["result"]["height"]["h"] == "1");
  }

  TEST_CASE("invalid parameters exit 2") {
    auto r = run({"invariants", "-p", "5", "-a", "4", "-b", "6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("gcd(a,b) ≠ 1") != std::string::npos);
    CHECK(run({"lfunction", "-p", "5"}).code == 2);
    CHECK(run({"invariants", "-p", "5", "-a", "2", "-b", "3", "--format", "xml"}).code == 2);
  }

  TEST_CASE("lfunction with oracle check") {
    auto r = run({"lfunction", "-p", "5", "-r", "1", "-q", "1", "-a", "2", "-b", "3", "--oracle-check"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["degree"] == 8);
    CHECK(j["result"]["oracle_check"]["status"] == "MATCH");
    CHECK(r.err.find("MATCH") != std::string::npos);
    auto t = run({"--format", "text", "lfunction", "-p", "5", "-a", "2", "-b", "3", "--oracle-check"});
    CHECK(t.out.find("oracle: MATCH") != std::string::npos);
  }

  TEST_CASE("rank-zero certificate lists exclusions") {
    auto r = run({"lfunction", "-p", "67", "-a", "5", "-b", "7"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["rank"]["exact"] == 0);
    for (const auto& o : j["result"]["orbits"]) CHECK(o["status"] == "excluded_by_valuation");
  }

  TEST_CASE("budget exit code") {
    auto r = run({"--orbit-budget", "5", "lfunction", "-p", "5", "-a", "2", "-b", "3"});
    CHECK(r.code == 3);
  }

  TEST_CASE("scan") {
    auto r = run({"--format", "csv", "scan", "-p", "5", "-a", "2", "-b", "3", "--q-exps", "1,2"});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    auto e = run({"--format", "csv", "scan", "-p", "5", "-a", "2", "-b", "3"});
    CHECK(e.code == 0);
    CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 1);
    auto b = run({"--orbit-budget", "100", "scan", "-p", "5", "-a", "2", "-b", "3", "--q-exps", "1,3"});
    CHECK(b.code == 4);
    auto j = nlohmann::json::parse(b.out);
    CHECK(j["result"][0]["status"] == "OK");
    CHECK(j["result"][1]["status"] == "BUDGET");
  }

  TEST_CASE("find-pairs") {
    auto r = run({"--format", "csv", "find-pairs", "-p", "67", "--limit", "10"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("5,7,1,1;3,") != std::string::npos);
    auto pr = run({"find-pairs", "-p", "5", "--primes-only", "--limit", "15"});
    auto j = nlohmann::json::parse(pr.out);
    CHECK(j["result"].size() == 15);
  }

  TEST_CASE("DOT export") {
    auto r = run({"invariants", "-p", "67", "-a", "7", "-b", "5", "--dot", "infinity"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("graph infinity {", 0) == 0);
  }

  TEST_CASE("output is deterministic across thread counts") {
    auto a = run({"--threads", "1", "lfunction", "-p", "5", "-q", "2", "-a", "2", "-b", "11"});
    auto b = run({"--threads", "4", "lfunction", "-p", "5", "-q", "2", "-a", "2", "-b", "11"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
}
