#include <doctest.h>

#include <json.hpp>
#include <string>

#include "maglab/maglab.h"

using json = nlohmann::json;

namespace {
std::string take(char* s) {
  std::string out(s);
  maglab_string_free(s);
  return out;
}

maglab_space* build(const char* kind, const char* family, int n) {
  char* type = nullptr;
  REQUIRE(maglab_type_json(family, n, &type) == MAGLAB_OK);
  maglab_space* s = nullptr;
  REQUIRE(maglab_space_build(kind, type, 0, &s) == MAGLAB_OK);
  maglab_string_free(type);
  return s;
}
}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(maglab_status_name(MAGLAB_OK)) == "Ok");
  CHECK(std::string(maglab_status_name(MAGLAB_TOO_LARGE)) == "TooLarge");
  CHECK(std::string(maglab_status_name(MAGLAB_INTERNAL)) == "Internal");
  maglab_space* s = nullptr;
  CHECK(maglab_space_from_json("{not json", &s) == MAGLAB_PARSE);
  CHECK(s == nullptr);
  json e = json::parse(maglab_last_error());
  CHECK(e["error"] == "Parse");
  char* out = nullptr;
  CHECK(maglab_type_json("hexagon", 6, &out) == MAGLAB_UNKNOWN_NAME);
  CHECK(maglab_type_json("cycle", 2, &out) == MAGLAB_BAD_N);
  CHECK(maglab_magnitude(nullptr, nullptr, 0, &out) == MAGLAB_INVALID_ARGUMENT);
}

TEST_CASE("space round trip through JSON") {
  maglab_space* s = build("mutant", "polygon", 8);
  char* text = nullptr;
  REQUIRE(maglab_space_to_json(s, &text) == MAGLAB_OK);
  std::string first = take(text);
  maglab_space* t = nullptr;
  REQUIRE(maglab_space_from_json(first.c_str(), &t) == MAGLAB_OK);
  REQUIRE(maglab_space_to_json(t, &text) == MAGLAB_OK);
  CHECK(take(text) == first);
  CHECK(maglab_space_size(t) == 8);
  maglab_space_free(s);
  maglab_space_free(t);
}

TEST_CASE("magnitude series for C4") {
  maglab_space* c4 = build("circular", "cycle", 4);
  char* out = nullptr;
  REQUIRE(maglab_magnitude(c4, "3", MAGLAB_MAGNITUDE_CLOSED_FORM | MAGLAB_MAGNITUDE_PATH_ORACLE, &out) ==
          MAGLAB_OK);
  json j = json::parse(take(out));
  std::vector<std::string> c;
  for (const auto& t : j["series"]) c.push_back(t["c"]);
  CHECK(c == std::vector<std::string>{"4", "-8", "12", "-16"});
  CHECK(j["closed_form"]["agrees"] == true);
  CHECK(j["path_expansion"]["agrees"] == true);
  CHECK(j["L"] == "3");
  maglab_space_free(c4);
}

TEST_CASE("compare and fsolve") {
  maglab_space* d6 = build("circular", "polygon", 6);
  maglab_space* m6 = build("mutant", "polygon", 6);
  char* out = nullptr;
  int pass = 0;
  REQUIRE(maglab_compare(d6, m6, MAGLAB_COMPARE_MAGNITUDE | MAGLAB_COMPARE_RIESZ, 0, &out, &pass) == MAGLAB_OK);
  maglab_string_free(out);
  CHECK(pass == 1);
  REQUIRE(maglab_compare(d6, m6, MAGLAB_COMPARE_ISOMETRY, 0, &out, &pass) == MAGLAB_OK);
  maglab_string_free(out);
  CHECK(pass == 0);
  CHECK(maglab_compare(d6, m6, 0, 0, &out, &pass) == MAGLAB_INVALID_ARGUMENT);
  maglab_space_free(d6);
  maglab_space_free(m6);
  REQUIRE(maglab_fsolve(24, &out, &pass) == MAGLAB_OK);
  json j = json::parse(take(out));
  CHECK(j["solutions"] == json::parse("[[3,4,4],[4,4,5],[7,8,9],[8,10,11]]"));
  CHECK(pass == 1);
}

TEST_CASE("fixtures and riesz") {
  char* out = nullptr;
  REQUIRE(maglab_fixture_json("hexagon_mutant_r3", &out) == MAGLAB_OK);
  json j = json::parse(take(out));
  CHECK(j["embedding"]["dimension"] == 3);
  CHECK(j.contains("dist"));
  maglab_space* s = nullptr;
  REQUIRE(maglab_space_from_json(j.dump().c_str(), &s) == MAGLAB_OK);
  REQUIRE(maglab_riesz(s, 0, &out) == MAGLAB_OK);
  CHECK(json::parse(take(out))["value"] == "30");
  maglab_space_free(s);
  for (int i = 0; maglab_fixture_name(i); ++i) {
    REQUIRE(maglab_fixture_json(maglab_fixture_name(i), &out) == MAGLAB_OK);
    maglab_string_free(out);
  }
}

TEST_CASE("verify through the C API") {
  maglab_verify_options o;
  maglab_verify_options_init(&o);
  o.property_cases = 20;
  char* out = nullptr;
  int pass = 0;
  REQUIRE(maglab_verify("planar", &o, &out, &pass) == MAGLAB_OK);
  json j = json::parse(take(out));
  CHECK(pass == 1);
  CHECK(!j.contains("seconds"));
  CHECK(maglab_verify("nope", &o, &out, &pass) == MAGLAB_UNKNOWN_NAME);
  CHECK(std::string(maglab_suite_name(0)) == "series");
}

TEST_CASE("conductor cap setter") {
  int old = maglab_get_conductor_cap();
  CHECK(maglab_set_conductor_cap(0) != MAGLAB_OK);
  REQUIRE(maglab_set_conductor_cap(8) == MAGLAB_OK);
  maglab_space* s = nullptr;
  char* type = nullptr;
  CHECK(maglab_type_json("polygon", 7, &type) == MAGLAB_CONDUCTOR_CAP);
  REQUIRE(maglab_set_conductor_cap(old) == MAGLAB_OK);
  (void)s;
}
