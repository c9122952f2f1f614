#include <doctest.h>

#include "wn/cli.hpp"

#include <json.hpp>

#include <regex>
#include <sstream>

using namespace wn;
using Json = nlohmann::ordered_json;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = execute_command(args, out, err);
  return {code, out.str(), err.str()};
}

Json last_json(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return Json::parse(last);
}

std::string without_wall_time(const std::string& text) {
  return std::regex_replace(text, std::regex(R"("wall_seconds":[^,}]*)"), "\"wall_seconds\":0");
}
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("height bound parsing") {
    CHECK(parse_height_bound("1000") == 1000);
    CHECK(parse_height_bound("1e6") == 1000000);
    CHECK(parse_height_bound("1.6e5") == 160000);
    CHECK(parse_height_bound("12.9") == 12);
    CHECK(parse_height_bound("0.5") == 0);
    CHECK(parse_height_bound("2.5e-1") == 0);
    CHECK(parse_height_bound("123456789012345678901234567890") == BigInt("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_height_bound("-3"), ContractViolation);
    CHECK_THROWS_AS(parse_height_bound("abc"), ContractViolation);
    CHECK_THROWS_AS(parse_height_bound("."), ContractViolation);
  }

  TEST_CASE("count") {
    const Run r = run({"count", "--n", "3", "--B", "1", "--method", "direct"});
    CHECK(r.code == 0);
    const Json j = last_json(r.out);
    CHECK(j["count"] == 28);
    CHECK(j["n"] == 3);
    CHECK(j["B"] == 1);
    CHECK(j["method"] == "direct");
    CHECK(j.contains("wall_seconds"));
    CHECK(last_json(run({"count", "--n", "3", "--B", "0.5"}).out)["count"] == 0);
    CHECK(last_json(run({"count", "--n", "3", "--B", "1e3", "--method", "torsor"}).out)["count"] == 195004);
  }

  TEST_CASE("toric") {
    const Run r = run({"toric", "--kind", "C", "--n", "3", "--p", "2"});
    CHECK(r.code == 0);
    CHECK(last_json(r.out)["count"] == 13);
    CHECK(last_json(r.out)["verified"] == true);
    CHECK(run({"toric", "--kind", "C", "--n", "6", "--p", "2"}).code == 2);
  }

  TEST_CASE("factorize") {
    const Run r = run({"factorize", "--n", "3", "--y", "6,10,15"});
    CHECK(r.code == 0);
    const Json j = last_json(r.out);
    CHECK(j["z"] == Json::array({1, 1, 2, 1, 3, 5, 1}));
    CHECK(j["lcm"] == 30);
    CHECK(run({"factorize", "--n", "3", "--y", "6,10"}).code == 1);
    CHECK(run({"factorize", "--n", "3", "--y", "6,x,10"}).code == 1);
  }

  TEST_CASE("polytope") {
    const Json j = last_json(run({"polytope", "--n", "3"}).out);
    CHECK(j["exact"] == "1/16");
    CHECK(run({"polytope", "--n", "5", "--method", "mc"}).code == 2);
  }

  TEST_CASE("usage errors") {
    Run r = run({"frobnicate"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"count", "--n", "3"}).code == 1);
    CHECK(run({"count", "--n", "3", "--B", "10", "--method", "fast"}).code == 1);
    CHECK(run({"count", "--n", "3", "--B", "ten"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("verify") {
    Run r = run({"verify", "--suite", "polynomials"});
    CHECK(r.code == 0);
    CHECK(last_json(r.out)["status"] == "pass");
    r = run({"verify", "--suite", "methods", "--n", "3", "--B", "10000"});
    CHECK(r.code == 0);
    CHECK(last_json(r.out)["failed"] == 0);
    CHECK(run({"verify", "--suite", "nothing"}).code == 1);
  }

  TEST_CASE("reproducible output") {
    const std::vector<std::string> args{"polytope", "--n", "3", "--method", "mc", "--samples", "20000", "--seed", "4",
                                        "--shards", "2"};
    CHECK(without_wall_time(run(args).out) == without_wall_time(run(args).out));
  }

  TEST_CASE("csv carries the same pairs") {
    const std::vector<std::string> base{"toric", "--kind", "X0", "--n", "3", "--p", "2"};
    auto csv_args = base;
    csv_args.insert(csv_args.begin(), {"--format", "csv"});
    const Json j = last_json(run(base).out);
    std::istringstream csv(run(csv_args).out);
    std::string header, values;
    std::getline(csv, header);
    std::getline(csv, values);
    std::vector<std::string> keys, cells;
    for (std::istringstream h(header); std::getline(h, header, ',');) keys.push_back(header);
    for (std::istringstream v(values); std::getline(v, values, ',');) cells.push_back(values);
    REQUIRE(keys.size() == j.size());
    REQUIRE(cells.size() == keys.size());
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      CHECK(keys[i] == k);
      if (k != "wall_seconds") CHECK(cells[i] == (v.is_string() ? v.get<std::string>() : v.dump()));
      ++i;
    }
  }
}
