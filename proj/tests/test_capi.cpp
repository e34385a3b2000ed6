#include "cogdof/cogdof.h"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cogdof_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("status strings and version") {
  CHECK(std::strlen(cogdof_version()) > 0);
  CHECK(std::string(cogdof_status_string(COGDOF_OK)) != "");
  CHECK(std::string(cogdof_status_string(COGDOF_ERR_NOT_ACHIEVABLE)) !=
        std::string(cogdof_status_string(COGDOF_ERR_PRECONDITION)));
}

TEST_CASE("config validation reports the field") {
  cogdof_config c{};
  CHECK(cogdof_config_validate(2, 2, 2, 2, &c) == COGDOF_OK);
  CHECK(c.n2 == 2);
  CHECK(cogdof_config_validate(0, 2, 2, 2, &c) == COGDOF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cogdof_last_error()).find("m1") != std::string::npos);
  CHECK(cogdof_config_validate(1, 1, 1, 1, nullptr) == COGDOF_ERR_INVALID_ARGUMENT);

  CHECK(cogdof_config_parse("1,3,3,1", &c) == COGDOF_OK);
  CHECK(c.m2 == 3);
  CHECK(cogdof_config_parse("1,3,x", &c) == COGDOF_ERR_INVALID_ARGUMENT);
  CHECK(cogdof_config_from_json(R"({"m1":4,"m2":1,"n1":2,"n2":3})", &c) == COGDOF_OK);
  CHECK(c.m1 == 4);
  CHECK(cogdof_config_from_json("{", &c) == COGDOF_ERR_INVALID_ARGUMENT);

  cogdof_scenario s{};
  CHECK(cogdof_scenario_parse("0,1,0,1", &s) == COGDOF_OK);
  CHECK(s.t2 == 1);
  CHECK(cogdof_scenario_parse("0,2,0,1", &s) == COGDOF_ERR_INVALID_ARGUMENT);

  cogdof_config c2{};
  cogdof_scenario s2{};
  CHECK(cogdof_swap_users({1, 2, 3, 4}, {1, 0, 1, 0}, &c2, &s2) == COGDOF_OK);
  CHECK((c2.m1 == 2 && c2.m2 == 1 && c2.n1 == 4 && c2.n2 == 3));
  CHECK((s2.t1 == 0 && s2.t2 == 1 && s2.r1 == 0 && s2.r2 == 1));
}

TEST_CASE("closed forms") {
  int eta = -1, b1 = -1, b2 = -1, member = -1;
  CHECK(cogdof_dof_formula({1, 3, 3, 1}, {0, 1, 0, 0}, &eta) == COGDOF_OK);
  CHECK(eta == 3);
  CHECK(cogdof_dof_formula({1, 3, 3, 1}, {0, 2, 0, 0}, &eta) == COGDOF_ERR_INVALID_ARGUMENT);
  CHECK(cogdof_dof_cooperation({2, 2, 2, 2}, &eta, &b1, &b2) == COGDOF_OK);
  CHECK((eta == 2 && b1 == 2 && b2 == 2));
  CHECK(cogdof_dof_cooperation({2, 2, 2, 2}, &eta, nullptr, nullptr) == COGDOF_OK);
  CHECK(cogdof_in_achievable_set({2, 2, 2, 2}, {0, 0, 0, 0}, 2, 1, &member) == COGDOF_OK);
  CHECK(member == 0);
  int holds = 0;
  CHECK(cogdof_clip_identity_holds(3, 2, 10, &holds) == COGDOF_OK);
  CHECK(holds == 1);
  CHECK(cogdof_clip_identity_holds(3, 2, 4, &holds) == COGDOF_ERR_INVALID_ARGUMENT);
  CHECK(cogdof_ordering_holds({1, 3, 3, 1}, &holds) == COGDOF_OK);
  CHECK(holds == 1);
}

TEST_CASE("channel handles") {
  cogdof_channel* ch = nullptr;
  REQUIRE(cogdof_channel_sample({1, 3, 3, 1}, 7, 0, &ch) == COGDOF_OK);
  int rows = 0, cols = 0;
  CHECK(cogdof_channel_link(ch, 3, 2, nullptr, 0, &rows, &cols) == COGDOF_OK);
  CHECK((rows == 3 && cols == 3));
  std::vector<double> buf(9);
  CHECK(cogdof_channel_link(ch, 3, 2, buf.data(), buf.size(), &rows, &cols) == COGDOF_OK);
  CHECK(cogdof_channel_link(ch, 3, 2, buf.data(), 4, &rows, &cols) == COGDOF_ERR_INVALID_ARGUMENT);
  CHECK(cogdof_channel_link(ch, 1, 1, nullptr, 0, &rows, &cols) == COGDOF_ERR_PRECONDITION);

  double terms[4];
  size_t count = 0;
  CHECK(cogdof_cooperation_bound_term(ch, 1e6, terms, 4, &count) == COGDOF_ERR_PRECONDITION);
  cogdof_channel_free(ch);
  cogdof_channel_free(nullptr);

  cogdof_channel* ext = nullptr;
  REQUIRE(cogdof_channel_sample({2, 2, 2, 2}, 7, 1, &ext) == COGDOF_OK);
  CHECK(cogdof_channel_link(ext, 1, 1, nullptr, 0, &rows, &cols) == COGDOF_OK);
  CHECK(cogdof_cooperation_bound_term(ext, 1e6, terms, 4, &count) == COGDOF_OK);
  CHECK(count == 2);
  CHECK(terms[0] > 0.0);
  cogdof_channel_free(ext);

  CHECK(cogdof_channel_sample({0, 1, 1, 1}, 7, 0, &ch) == COGDOF_ERR_INVALID_ARGUMENT);
  CHECK(cogdof_channel_sample({1, 1, 1, 1}, 7, 0, nullptr) == COGDOF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("regions and their JSON form") {
  cogdof_region* inner = nullptr;
  cogdof_region* outer = nullptr;
  REQUIRE(cogdof_region_build({1, 3, 3, 1}, {0, 1, 0, 0}, COGDOF_REGION_INNER, &inner) == COGDOF_OK);
  REQUIRE(cogdof_region_build({1, 3, 3, 1}, {0, 1, 0, 0}, COGDOF_REGION_OUTER, &outer) == COGDOF_OK);
  int equal = 0;
  CHECK(cogdof_regions_equal(inner, outer, &equal) == COGDOF_OK);
  CHECK(equal == 1);

  size_t n = 0;
  CHECK(cogdof_region_vertex_count(inner, &n) == COGDOF_OK);
  CHECK(n >= 3);
  int64_t a = 0, b = 0, c = 0, d = 0;
  CHECK(cogdof_region_vertex(inner, 0, &a, &b, &c, &d) == COGDOF_OK);
  CHECK((a == 0 && b == 1 && c == 0 && d == 1));
  CHECK(cogdof_region_vertex(inner, n, &a, &b, &c, &d) == COGDOF_ERR_INVALID_ARGUMENT);
  CHECK(cogdof_region_sum_dof(outer, &a, &b) == COGDOF_OK);
  CHECK((a == 3 && b == 1));

  char* text = nullptr;
  REQUIRE(cogdof_region_to_json(outer, &text) == COGDOF_OK);
  const std::string doc = take(text);
  const json j = json::parse(doc);
  for (const char* key : {"config", "scenario", "halfspaces", "vertices", "sum_dof"})
    CHECK(j.contains(key));
  CHECK(j["sum_dof"] == "3/1");
  CHECK(j["vertices"][0] == json::array({"0/1", "0/1"}));
  CHECK(j["halfspaces"][0].contains("a1"));

  cogdof_region* back = nullptr;
  REQUIRE(cogdof_region_from_json(doc.c_str(), &back) == COGDOF_OK);
  CHECK(cogdof_regions_equal(back, outer, &equal) == COGDOF_OK);
  CHECK(equal == 1);
  CHECK(cogdof_region_from_json("[]", &back) == COGDOF_ERR_INVALID_ARGUMENT);

  cogdof_region_free(back);
  cogdof_region_free(inner);
  cogdof_region_free(outer);
}

TEST_CASE("schemes through handles") {
  cogdof_channel* ch = nullptr;
  REQUIRE(cogdof_channel_sample({2, 2, 2, 2}, 3, 0, &ch) == COGDOF_OK);
  cogdof_scheme* s = nullptr;
  CHECK(cogdof_scheme_build({2, 2, 2, 2}, {0, 0, 0, 0}, 2, 1, ch, 1, &s) == COGDOF_ERR_NOT_ACHIEVABLE);
  CHECK(std::string(cogdof_last_error()).find("not in the achievable set") != std::string::npos);
  CHECK(s == nullptr);
  REQUIRE(cogdof_scheme_build({2, 2, 2, 2}, {0, 1, 0, 1}, 1, 1, ch, 1, &s) == COGDOF_OK);
  cogdof_diagnostics d{};
  CHECK(cogdof_scheme_verify(s, ch, &d) == COGDOF_OK);
  CHECK((d.signal_dim_rx1 == 1 && d.interference_dim_rx1 == 1 && d.intersection_dim_rx1 == 0));
  CHECK((d.decodable_w1 == 1 && d.decodable_w2 == 1));
  CHECK(d.worst_null_residual <= 1e-9);
  double r1 = 0, r2 = 0;
  CHECK(cogdof_achievable_rates(s, ch, 1e6, &r1, &r2) == COGDOF_OK);
  CHECK((r1 > 0 && r2 > 0));
  CHECK(cogdof_achievable_rates(s, ch, -1.0, &r1, &r2) == COGDOF_ERR_INVALID_ARGUMENT);
  cogdof_scheme_free(s);
  cogdof_channel_free(ch);

  int passes = 0;
  char* report = nullptr;
  CHECK(cogdof_achieve({2, 2, 2, 2}, {0, 1, 0, 1}, 1, 1, 10, 5, &passes, &report) == COGDOF_OK);
  CHECK(passes == 10);
  CHECK(json::parse(take(report))["passes"] == 10);
  long long sp = 0, total = 0;
  CHECK(cogdof_achievability_sweep(1, 2, 1, &sp, &total, nullptr) == COGDOF_OK);
  CHECK((total > 0 && sp == total));
}

TEST_CASE("simulation outputs") {
  double slope = 0.0;
  char* csv = nullptr;
  char* side = nullptr;
  REQUIRE(cogdof_simulate({2, 2, 2, 2}, {0, 0, 0, 0}, 1, 1, 1e4, 1e9, 6, 4, 1, &slope, &csv, &side) ==
          COGDOF_OK);
  const std::string text = take(csv);
  CHECK(text.rfind("rho,r1,r2,rsum\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  const json j = json::parse(take(side));
  for (const char* key : {"slope", "intercept", "config", "scenario", "point"}) CHECK(j.contains(key));
  CHECK(j["slope"].get<double>() == slope);
  CHECK(cogdof_simulate({2, 2, 2, 2}, {0, 0, 0, 0}, 1, 1, 1e4, 1e9, 6, 4, 1, &slope, nullptr, nullptr) ==
        COGDOF_OK);
  CHECK(cogdof_simulate({2, 2, 2, 2}, {0, 0, 0, 0}, 1, 1, 1e2, 1e9, 6, 4, 1, &slope, nullptr, nullptr) ==
        COGDOF_ERR_INVALID_ARGUMENT);

  int passed = 0;
  char* rep = nullptr;
  CHECK(cogdof_coop_gap_check({2, 2, 2, 2}, 3, 1, &passed, &rep) == COGDOF_OK);
  CHECK(passed == 1);
  CHECK(json::parse(take(rep)).contains("worst_slope"));
  CHECK(cogdof_coop_gap_check({3, 1, 1, 2}, 3, 1, &passed, nullptr) == COGDOF_ERR_PRECONDITION);
}

TEST_CASE("verify through the C API") {
  int passed = 0;
  char* rep = nullptr;
  CHECK(cogdof_verify(2, COGDOF_VERIFY_ALL, &passed, &rep) == COGDOF_OK);
  CHECK(passed == 1);
  CHECK(!take(rep).empty());
  CHECK(cogdof_verify(6, COGDOF_VERIFY_ALL, &passed, nullptr) == COGDOF_ERR_INVALID_ARGUMENT);
  CHECK(cogdof_verify(2, 0, &passed, nullptr) == COGDOF_ERR_INVALID_ARGUMENT);
}

}  // TEST_SUITE
