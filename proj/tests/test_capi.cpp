#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "softgrp/softgrp.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and defaults") {
  CHECK(std::strcmp(sg_status_name(SG_OK), "ok") == 0);
  CHECK(std::strcmp(sg_status_name(SG_ERR_SCALE_BOUND), "scale-bound") == 0);
  const sg_bounds b = sg_default_bounds();
  CHECK(b.max_order == 16);
  CHECK(std::strlen(sg_version()) > 0);
}

TEST_CASE("groups through the C API") {
  sg_group* g = nullptr;
  REQUIRE(sg_group_hyperoctahedral(3, &g) == SG_OK);
  CHECK(sg_group_order(g) == 48);
  CHECK(sg_group_degree(g) == 3);
  char* text = nullptr;
  REQUIRE(sg_group_to_json(g, &text) == SG_OK);
  const std::string doc = take(text);
  sg_group* back = nullptr;
  REQUIRE(sg_group_from_json(doc.c_str(), &back) == SG_OK);
  CHECK(sg_group_order(back) == 48);
  sg_group_free(back);
  sg_group_free(g);

  CHECK(sg_group_hyperoctahedral(0, &g) == SG_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(sg_last_error()) > 0);
  CHECK(sg_group_from_json("{not json", &g) == SG_ERR_PARSE);
  CHECK(sg_group_from_json(nullptr, &g) == SG_ERR_INVALID_ARGUMENT);

  char* rel = nullptr;
  REQUIRE(sg_presentation_check(4, &rel) == SG_OK);
  for (const auto& r : json::parse(take(rel))) CHECK(r.at("holds").get<bool>());
}

TEST_CASE("enumeration") {
  char* lines = nullptr;
  size_t count = 0;
  REQUIRE(sg_enumerate("sc", 2, &lines, &count) == SG_OK);
  CHECK(count == 6);
  CHECK(take(lines) == "[2]\n[-2]\n[1,1]\n[1,-1]\n[-1,1]\n[-1,-1]\n");
  REQUIRE(sg_enumerate("bp", 2, &lines, &count) == SG_OK);
  CHECK(count == 5);
  take(lines);
  CHECK(sg_enumerate("xx", 2, &lines, &count) == SG_ERR_INVALID_ARGUMENT);
  CHECK(sg_enumerate("sc", 0, &lines, &count) == SG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("hyperoctahedral example and kernel") {
  sg_soft_group* f = nullptr;
  sg_soft_group* g = nullptr;
  sg_soft_hom* h = nullptr;
  REQUIRE(sg_hyperoctahedral_example(2, &f, &g, &h) == SG_OK);
  CHECK(sg_soft_group_param_count(f) == 6);
  CHECK(sg_soft_group_param_count(g) == 5);
  CHECK_FALSE(sg_soft_group_is_trivial(f));
  CHECK_FALSE(sg_soft_group_is_completely_soft(f));

  int defined = 0;
  sg_soft_group* k = nullptr;
  REQUIRE(sg_soft_kernel(h, &defined, &k) == SG_OK);
  CHECK(defined == 1);
  CHECK(sg_soft_group_param_count(k) == 1);
  CHECK(sg_soft_group_is_trivial(k));
  sg_soft_group_free(k);

  char* report = nullptr;
  REQUIRE(sg_kernel_report(h, &report) == SG_OK);
  const json r = json::parse(take(report));
  CHECK(r.at("params") == json::parse("[[-1,-1]]"));
  CHECK(r.at("carrier_order") == 1);
  CHECK(r.at("agree") == true);

  char* text = nullptr;
  REQUIRE(sg_soft_hom_to_json(h, &text) == SG_OK);
  const std::string doc = take(text);
  sg_soft_hom* back = nullptr;
  REQUIRE(sg_soft_hom_from_json(doc.c_str(), &back) == SG_OK);
  CHECK(sg_soft_hom_equal(h, back));
  CHECK_FALSE(sg_soft_hom_is_isomorphism(h));
  sg_soft_hom_free(back);

  sg_soft_hom* unit = nullptr;
  REQUIRE(sg_soft_hom_unit(f, &unit) == SG_OK);
  sg_soft_hom* c = nullptr;
  REQUIRE(sg_soft_hom_compose(h, unit, &c) == SG_OK);
  CHECK(sg_soft_hom_equal(c, h));
  sg_soft_hom_free(c);
  CHECK(sg_soft_hom_compose(h, h, &c) == SG_ERR_NOT_COMPOSABLE);
  CHECK(sg_soft_hom_is_isomorphism(unit));
  sg_soft_hom_free(unit);

  sg_soft_group_free(f);
  sg_soft_group_free(g);
  sg_soft_hom_free(h);
}

TEST_CASE("analysis through the C API") {
  sg_soft_hom* h = nullptr;
  REQUIRE(sg_hyperoctahedral_example(2, nullptr, nullptr, &h) == SG_OK);
  const sg_bounds b = sg_default_bounds();
  for (const char* p : {"monic", "epic", "split-monic"}) {
    sg_holds holds = SG_HOLDS_UNKNOWN_AT_SCALE;
    char* verdict = nullptr;
    REQUIRE(sg_analyze(h, p, &b, 1, 10, &holds, &verdict) == SG_OK);
    const std::string doc = take(verdict);
    CHECK(holds == (std::strcmp(p, "epic") == 0 ? SG_HOLDS_TRUE : SG_HOLDS_FALSE));
    int ok = 0;
    REQUIRE(sg_verify_verdict(h, doc.c_str(), &b, &ok) == SG_OK);
    CHECK(ok == 1);
  }
  sg_holds holds;
  char* verdict = nullptr;
  CHECK(sg_analyze(h, "bogus", nullptr, 1, 10, &holds, &verdict) == SG_ERR_INVALID_ARGUMENT);
  int ok = 0;
  CHECK(sg_verify_verdict(h, "[]", nullptr, &ok) == SG_ERR_PARSE);
  sg_soft_hom_free(h);
}

TEST_CASE("products and monoidal checks") {
  sg_soft_group* f = nullptr;
  REQUIRE(sg_hyperoctahedral_example(1, &f, nullptr, nullptr) == SG_OK);
  sg_soft_group* t = nullptr;
  REQUIRE(sg_final_object(&t) == SG_OK);
  sg_soft_group* p = nullptr;
  sg_soft_hom* p1 = nullptr;
  REQUIRE(sg_soft_product(f, f, &p, &p1, nullptr) == SG_OK);
  CHECK(sg_soft_group_param_count(p) == 4);
  REQUIRE(p1);
  char* m = nullptr;
  REQUIRE(sg_monoidal_check(f, t, f, &m) == SG_OK);
  CHECK(json::parse(take(m)).at("ok") == true);
  sg_soft_hom_free(p1);
  sg_soft_group_free(p);
  sg_soft_group_free(t);
  sg_soft_group_free(f);
}

TEST_CASE("invalid documents map to status codes") {
  sg_soft_group* s = nullptr;
  const char* not_subgroup = R"({"carrier": {"degree": 2, "generators": [[2, 1], [-1, 2]]},
    "params": ["a"], "assign": [{"param": "a", "subgroup_elements": [[2, 1]]}]})";
  CHECK(sg_soft_group_from_json(not_subgroup, &s) == SG_ERR_NOT_SUBGROUP);
  CHECK(std::string(sg_last_error()).find("a") != std::string::npos);
  CHECK(sg_soft_group_from_json("{}", &s) == SG_ERR_PARSE);
}
