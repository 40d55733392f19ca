#include "braidverify/suites.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>

using namespace braidverify;

TEST_SUITE("suites") {

TEST_CASE("catalog lists every registered suite") {
  auto suites = list_suites();
  CHECK(suites.size() >= 13);
  std::set<std::string> names;
  for (const auto& s : suites) {
    CHECK_FALSE(s.name.empty());
    CHECK_FALSE(s.description.empty());
    names.insert(s.name);
  }
  CHECK(names.size() == suites.size());
  CHECK(names.count("artin4") == 1);
  CHECK(names.count("torsion") == 1);
  CHECK(names.count("gtcomm") == 1);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("fast suites pass with default parameters") {
  for (const char* name :
       {"s4rep", "pi04", "torsion", "p43ab", "splitting", "classorder",
        "transgression", "b4s3"}) {
    Report r = run_suite(name);
    CAPTURE(name);
    CAPTURE(r.to_table());
    CHECK(r.ok());
    CHECK(r.count(CheckStatus::pass) > 0);
    CHECK(r.count(CheckStatus::fail) == 0);
    CHECK(r.suite == name);
  }
}

TEST_CASE("reports serialize to well formed json") {
  SuiteParams params;
  params.maxlen = 7;
  params.seed = 424242;
  Report r = run_suite("torsion", params);
  nlohmann::json j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "torsion");
  CHECK(j["params"]["maxlen"] == 7);
  CHECK(j["params"]["seed"] == 424242);
  CHECK(j["checks"].is_array());
  CHECK_FALSE(j["checks"].empty());
  for (const auto& check : j["checks"]) {
    CHECK(check.contains("name"));
    CHECK(check.contains("status"));
    CHECK(check.contains("detail"));
    std::string status = check["status"].get<std::string>();
    CHECK((status == "pass" || status == "fail" || status == "skipped"));
  }
  CHECK(j["counts"]["pass"].get<int>() == r.count(CheckStatus::pass));
  CHECK(j["counts"]["fail"].get<int>() == r.count(CheckStatus::fail));
  CHECK(j["counts"]["skipped"].get<int>() == r.count(CheckStatus::skipped));
  CHECK(j.contains("wall_time_ms"));
  CHECK(j["status"] == "pass");
}

TEST_CASE("tables render a status per check") {
  Report r = run_suite("torsion");
  std::string table = r.to_table();
  CHECK(table.find("torsion") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);
  for (const Check& c : r.checks) CHECK(table.find(c.name) != std::string::npos);
}

TEST_CASE("parameters reach the suite") {
  SuiteParams params;
  params.maxlen = 5;
  Report r = run_suite("torsion", params);
  bool saw_bound = false;
  for (const Check& c : r.checks)
    if (c.detail.find("94") != std::string::npos) saw_bound = true;
  CHECK(saw_bound); // 94 normal-form words of length <= 5
}

TEST_CASE("degree six stays gated behind its flag") {
  SuiteParams params;
  params.n = 6;
  Report r = run_suite("artin_n", params);
  CHECK(r.ok());
  CHECK(r.count(CheckStatus::skipped) > 0);
}

} // TEST_SUITE
