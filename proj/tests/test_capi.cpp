#include <doctest.h>

#include <algorithm>
#include <string>

#include "acta/acta.h"

namespace {

  std::string take(char* s) {
    std::string out = s ? s : "";
    acta_string_free(s);
    return out;
  }

  char const* const kLz = R"({"order":3,"table":[[0,1,2],[1,1,1],[2,2,2]]})";

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("monoid handles") {
    acta_monoid* m = nullptr;
    REQUIRE(acta_monoid_parse(kLz, &m) == ACTA_OK);
    CHECK(acta_monoid_order(m) == 3);
    char* out = nullptr;
    REQUIRE(acta_monoid_to_text(m, &out) == ACTA_OK);
    CHECK(take(out) == "3\n0 1 2\n1 1 1\n2 2 2\n");
    REQUIRE(acta_monoid_to_json(m, &out) == ACTA_OK);
    auto const json = take(out);
    acta_monoid* again = nullptr;
    REQUIRE(acta_monoid_parse(json.c_str(), &again) == ACTA_OK);
    REQUIRE(acta_monoid_to_json(again, &out) == ACTA_OK);
    CHECK(take(out) == json);
    acta_monoid_free(again);
    acta_monoid_free(m);
  }

  TEST_CASE("status codes and messages") {
    acta_monoid* m = nullptr;
    CHECK(acta_monoid_parse(R"({"order":3,"table":[[0,1,2],[1,0,2],[2,1,0]]})", &m)
          == ACTA_NOT_ASSOCIATIVE);
    CHECK(m == nullptr);
    CHECK(std::string(acta_last_error_message()).find("(1,2,1)") != std::string::npos);
    CHECK(std::string(acta_status_name(ACTA_NOT_ASSOCIATIVE)) == "NotAssociative");
    CHECK(acta_monoid_parse("{", &m) == ACTA_INVALID_INPUT);
    CHECK(acta_monoid_standard("nope", 2, &m) == ACTA_UNKNOWN_FAMILY);
    CHECK(acta_monoid_parse(nullptr, &m) == ACTA_NULL_ARGUMENT);
    CHECK(acta_monoid_order(nullptr) == 0);
  }

  TEST_CASE("enumeration") {
    char*  out   = nullptr;
    size_t count = 0;
    REQUIRE(acta_monoid_enumerate_json(3, 1, 0, &out, &count) == ACTA_OK);
    CHECK(count == 7);
    auto const text = take(out);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
    CHECK(acta_monoid_enumerate_json(5, 1, 0, &out, &count) == ACTA_ORDER_TOO_LARGE);
  }

  TEST_CASE("acts, components and schemes") {
    acta_monoid* z2 = nullptr;
    REQUIRE(acta_monoid_standard("cyclic", 2, &z2) == ACTA_OK);
    acta_act* sq = nullptr;
    REQUIRE(acta_act_parse(R"({"size":4,"action":[[0,3],[1,2],[2,1],[3,0]]})", z2, nullptr,
                           &sq)
            == ACTA_OK);
    CHECK(acta_act_size(sq) == 4);
    char* out = nullptr;
    REQUIRE(acta_act_components_json(sq, &out) == ACTA_OK);
    CHECK(take(out) == R"({"components":[[0,3],[1,2]],"count":2})");
    CHECK(acta_act_shortest_scheme_json(sq, 0, 1, &out) == ACTA_NOT_CONNECTED);
    REQUIRE(acta_act_shortest_scheme_json(sq, 0, 3, &out) == ACTA_OK);
    auto const scheme = take(out);
    char*      reason = nullptr;
    CHECK(acta_scheme_validate(sq, scheme.c_str(), &reason) == ACTA_OK);
    CHECK(reason == nullptr);
    CHECK(acta_scheme_validate(sq, R"({"from":0,"to":3,"steps":[[0,0,0]]})", &reason)
          == ACTA_COUNTEREXAMPLE);
    CHECK_FALSE(take(reason).empty());
    REQUIRE(acta_act_congruence_closure_json(sq, "[[0,1]]", &out) == ACTA_OK);
    CHECK(take(out) == R"({"blocks":[[0,1],[2,3]]})");
    CHECK(acta_act_congruence_closure_json(sq, "[[0,9]]", &out) == ACTA_INDEX_OUT_OF_RANGE);
    acta_act* bad = nullptr;
    CHECK(acta_act_parse(R"({"size":1,"action":[[0,0]]})", nullptr, nullptr, &bad)
          == ACTA_INVALID_INPUT);
    acta_act_free(sq);
    acta_monoid_free(z2);
  }

  TEST_CASE("constructions") {
    acta_monoid* lz = nullptr;
    REQUIRE(acta_monoid_parse(kLz, &lz) == ACTA_OK);
    acta_act* an = nullptr;
    REQUIRE(acta_construct_an(lz, 4, -1, -1, &an) == ACTA_OK);
    CHECK(acta_act_size(an) == 9);
    acta_act_free(an);
    acta_act* cof = nullptr;
    REQUIRE(acta_construct_cofree(lz, 2, &cof) == ACTA_OK);
    CHECK(acta_act_size(cof) == 8);
    acta_act_free(cof);
    acta_act* reg = nullptr;
    REQUIRE(acta_act_regular(lz, &reg) == ACTA_OK);
    CHECK(acta_act_size(reg) == 3);
    acta_act_free(reg);

    acta_monoid* z2 = nullptr;
    REQUIRE(acta_monoid_standard("zk", 2, &z2) == ACTA_OK);
    CHECK(acta_construct_an(z2, 3, -1, -1, &an) == ACTA_IDEALS_INTERSECT);
    acta_monoid_free(z2);
    acta_monoid_free(lz);
  }

  TEST_CASE("verification") {
    auto b         = acta_verify_bounds_default();
    CHECK(b.max_order == 4);
    b.max_order    = 3;
    b.max_act_size = 2;
    char* report   = nullptr;
    REQUIRE(acta_verify_json("co6", &b, 0, &report) == ACTA_OK);
    auto const text = take(report);
    CHECK(text.find(R"("status":"PASS")") != std::string::npos);
    CHECK(text.find(R"("elapsed_ms":0)") != std::string::npos);
    CHECK(acta_verify_json("zz", &b, 0, &report) == ACTA_UNKNOWN_THEOREM);
    b.max_order = 9;
    CHECK(acta_verify_json("co6", &b, 0, &report) == ACTA_BOUNDS_TOO_LARGE);
  }
}
