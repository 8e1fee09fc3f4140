#include <doctest.h>

#include <algorithm>

#include "constructions.hpp"
#include "error.hpp"
#include "verify.hpp"

using namespace maglab;

TEST_CASE("report serialisation") {
  VerdictReport r("demo");
  r.add("a", true);
  r.add("b", false, json{{"k", 1}});
  r.set_seconds(1.5);
  CHECK(!r.all_pass());
  json j = r.to_json();
  CHECK(j.dump() ==
        R"({"all_pass":false,"checks":[{"name":"a","pass":true},{"detail":{"k":1},"name":"b","pass":false}],"subject":"demo"})");
  CHECK(r.to_json(true)["seconds"] == 1.5);
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<int> hit(100, 0);
  parallel_for(4, 100, [&](int i) { hit[i]++; });
  for (int h : hit) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(3, 10, [](int i) {
                    if (i == 7) fail(ErrorCode::Internal, "boom");
                  }),
                  Error);
}

TEST_CASE("suites are schedule independent") {
  SuiteOptions one, many;
  many.jobs = 4;
  CHECK(verify_suite("mutants", one).to_json().dump() == verify_suite("mutants", many).to_json().dump());
  CHECK(suite_fsolve(6, 18, one).to_json().dump() == suite_fsolve(6, 18, many).to_json().dump());
}

TEST_CASE("property suite is seeded") {
  SuiteOptions a;
  a.property_cases = 50;
  SuiteOptions b = a;
  b.seed = 99;
  VerdictReport ra = suite_properties(a), rb = suite_properties(b);
  CHECK(ra.all_pass());
  CHECK(rb.all_pass());
  CHECK(ra.to_json().dump() == suite_properties(a).to_json().dump());
}

TEST_CASE("lambda-mu bound") {
  for (int k = 2; k <= 6; ++k) CHECK(lambda_mu_violations(k).empty());
}

TEST_CASE("compare_spaces") {
  CompareFlags f;
  f.magnitude = f.riesz = f.isometry = true;
  VerdictReport r = compare_spaces(regular_polygon(6), mutant_even(polygon_type(6)), f);
  REQUIRE(r.checks().size() == 3);
  CHECK(r.checks()[0].pass);
  CHECK(r.checks()[1].pass);
  CHECK(!r.checks()[2].pass);
}

TEST_CASE("identification report") {
  auto names = [](const VerdictReport& r) {
    std::vector<std::string> v;
    for (const auto& c : r.checks()) v.push_back(c.name);
    return v;
  };
  VerdictReport r8 = identification_report(8);
  CHECK(r8.all_pass());
  auto n8 = names(r8);
  CHECK(std::find(n8.begin(), n8.end(), "mutant.Delta8") != n8.end());
  CHECK(r8.checks().back().detail["magnitude_identifies_polygon"].get<std::string>().rfind("no", 0) == 0);
  VerdictReport r7 = identification_report(7);
  auto n7 = names(r7);
  CHECK(std::find(n7.begin(), n7.end(), "mutant.Delta7") == n7.end());
  CHECK(std::find(n7.begin(), n7.end(), "isomer.Delta7") != n7.end());
  for (const auto& c : r7.checks())
    if (c.name == "fsolve") CHECK(c.detail["solutions"].empty());
  VerdictReport r9 = identification_report(9);
  auto n9 = names(r9);
  CHECK(std::find(n9.begin(), n9.end(), "mutant.Delta9") != n9.end());
  CHECK(r9.all_pass());
  CHECK_THROWS_AS(identification_report(61), Error);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(verify_suite("nope"), Error); }
