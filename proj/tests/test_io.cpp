#include <doctest.h>

#include "acta/error.hpp"
#include "acta/harness.hpp"
#include "acta/io.hpp"

using namespace acta;
using nlohmann::json;

TEST_SUITE("io") {
  TEST_CASE("monoid JSON and text round trips") {
    for (auto const& m : {trivial_monoid(), cyclic_group(3), left_zero_adjoined(2),
                          full_transformation(2)}) {
      auto const j = io::monoid_to_json(m);
      CHECK(io::monoid_from_json(j) == m);
      CHECK(io::monoid_to_json(io::monoid_from_json(j)).dump() == j.dump());
      auto const text = io::monoid_to_text(m);
      CHECK(io::monoid_from_text(text).same_table(m));
      CHECK(io::monoid_to_text(io::parse_monoid(text)) == text);
      CHECK(io::parse_monoid(j.dump()) == m);
    }
    CHECK(io::monoid_to_text(left_zero_adjoined(2)) == "3\n0 1 2\n1 1 1\n2 2 2\n");
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(io::parse_monoid("{not json"), Error);
    CHECK_THROWS_AS(io::parse_monoid("2\n0 1\n1"), Error);
    CHECK_THROWS_AS(io::parse_monoid("2\n0 1\n1 0\n7"), Error);
    CHECK_THROWS_AS(io::monoid_from_json(json{{"order", 2}}), Error);
    CHECK_THROWS_AS(io::monoid_from_json(json{{"order", 2}, {"table", {{0, 1}}}}), Error);
    try {
      io::parse_monoid(R"({"order": 2, "table": [[0, -1], [1, 0]]})");
      FAIL("accepted a negative entry");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
  }

  TEST_CASE("acts") {
    auto const m = share(cyclic_group(2));
    auto const a = power_act(m, 2);
    auto const j = io::act_to_json(a);
    auto const b = io::act_from_json(j);
    CHECK(b.same_action(a));
    CHECK(b.names() == a.names());
    CHECK(io::act_from_json(j, m).same_action(a));
    CHECK_THROWS_AS(io::act_from_json(j, share(left_zero_adjoined(2))), Error);
    json bare{{"size", 1}, {"action", {{0, 0}}}};
    CHECK_THROWS_AS(io::act_from_json(bare), Error);
    CHECK(io::act_from_json(bare, m).size() == 1);
  }

  TEST_CASE("congruences, schemes, decompositions") {
    auto const reg = regular_act(share(left_zero_adjoined(2)));
    std::vector<std::pair<Index, Index>> ab{{1, 2}};
    auto const rho = congruence_closure(reg, ab);
    auto const j   = io::congruence_to_json(rho);
    CHECK(j.dump() == R"({"blocks":[[0],[1,2]]})");
    CHECK(io::congruence_from_json(reg, j) == rho);

    Scheme const s{0, 1, {{0, 0, 1}}};
    auto const   sj = io::scheme_to_json(s);
    CHECK(sj.dump() == R"({"from":0,"steps":[[0,0,1]],"to":1})");
    auto const back = io::scheme_from_json(sj);
    CHECK(back.steps == s.steps);
    CHECK_THROWS_AS(io::scheme_from_json(json{{"from", 0}}), Error);

    auto const d = io::decomposition_to_json(components(power_act(share(cyclic_group(2)), 2)));
    CHECK(d.dump() == R"({"components":[[0,3],[1,2]],"count":2})");
  }

  TEST_CASE("analysis JSON") {
    auto const t2 = share(full_transformation(2));
    auto const j  = analysis_to_json(*t2, analyze_monoid(t2));
    CHECK(j.at("left_reversible") == false);
    CHECK(j.at("s2_indecomposable") == true);
    CHECK(j.at("right_zeros").empty());
    CHECK(j.at("left_zero_names") == json{"11", "22"});
    CHECK(j.at("theta_flatness_verdict").at("super_flat") == true);
  }
}
