#include <doctest.h>

#include <random>

#include "acta/decomposition.hpp"
#include "acta/error.hpp"
#include "acta/harness.hpp"
#include "oracles.hpp"

using namespace acta;

namespace {

  MonoidPtr const z2 = share(cyclic_group(2));
  MonoidPtr const lz = share(left_zero_adjoined(2));
  MonoidPtr const t2 = share(full_transformation(2));

  FiniteAct square(MonoidPtr const& m) {
    return power_act(m, 2);
  }

}  // namespace

TEST_SUITE("decomposition") {
  TEST_CASE("components of small acts") {
    CHECK(components(regular_act(t2)).count == 1);
    auto const d = components(square(z2));
    CHECK(d.count == 2);
    // (1,1)=0, (1,g)=1, (g,1)=2, (g,g)=3
    CHECK(d.blocks() == std::vector<std::vector<Index>>{{0, 3}, {1, 2}});
    CHECK(components(square(t2)).count == 1);
    CHECK(is_indecomposable(zero_act(z2)));
    CHECK_FALSE(is_indecomposable(cofree_act(z2, 2)));
    std::vector<FiniteAct> two{zero_act(z2), zero_act(z2)};
    CHECK_FALSE(is_indecomposable(coproduct_act(two).act));
  }

  TEST_CASE("cyclic acts have one component") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& m : enumerate_monoids(n, true)) {
        auto const mp  = share(std::move(m));
        auto const reg = regular_act(mp);
        for (auto const& rho : enumerate_right_congruences(reg)) {
          CHECK(components(quotient_act(reg, rho).act).count == 1);
        }
      }
    }
  }

  TEST_CASE("components agree with BFS and transitive closure") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& m : enumerate_monoids(n, true)) {
        auto const mp = share(std::move(m));
        for (std::size_t k = 1; k <= 3; ++k) {
          for (auto const& a : enumerate_acts(mp, k, true)) {
            auto const d   = components(a);
            auto const bfs = oracle::components_bfs(a.rows());
            CHECK(bfs == oracle::components_closure(a.rows()));
            for (Index x = 0; x < a.size(); ++x) {
              for (Index y = 0; y < a.size(); ++y) {
                CHECK((d.component_of[x] == d.component_of[y]) == (bfs[x] == bfs[y]));
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("shortest schemes") {
    auto const reg = regular_act(z2);
    auto const s   = shortest_scheme(reg, 0, 1);
    REQUIRE(s);
    CHECK(s->length() == 1);
    CHECK(scheme_error(reg, *s).empty());
    CHECK(shortest_scheme(reg, 1, 1)->length() == 0);
    CHECK_FALSE(shortest_scheme(square(z2), 0, 1));
    CHECK_THROWS_AS(shortest_scheme(reg, 0, 7), Error);

    Scheme broken{0, 1, {{0, 0, 0}}};
    CHECK_FALSE(scheme_error(reg, broken).empty());
  }

  TEST_CASE("glued chains need schemes of length n") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const chain = construct_An(lz, n, 1, 2);
      CHECK(chain.act.size() == 2 * n + 1);
      CHECK(is_indecomposable(chain.act));
      auto const s = shortest_scheme(chain.act, chain.generators.front(),
                                     chain.generators.back());
      REQUIRE(s);
      CHECK(s->length() == (n == 1 ? 0 : n));
      CHECK(scheme_error(chain.act, *s).empty());
      auto const d = oracle::scheme_distances(chain.act.rows(), chain.generators.front());
      CHECK(d[chain.generators.back()] == s->length());
    }
  }

  TEST_CASE("scheme lengths match the step-relation oracle") {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& m : enumerate_monoids(n, true)) {
        auto const mp = share(std::move(m));
        for (auto const& a : enumerate_acts(mp, 3, true)) {
          for (Index x = 0; x < a.size(); ++x) {
            auto const d = oracle::scheme_distances(a.rows(), x);
            for (Index y = 0; y < a.size(); ++y) {
              auto const s = shortest_scheme(a, x, y);
              if (d[y] == SIZE_MAX) {
                CHECK_FALSE(s);
              } else {
                REQUIRE(s);
                CHECK(s->length() == d[y]);
                CHECK(scheme_error(a, *s).empty());
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("two-step connections") {
    auto const reg = regular_act(t2);
    CHECK(*two_step_connect(reg, 2, 2) == std::pair<Index, Index>{0, 0});
    CHECK_FALSE(two_step_connect(square(z2), 0, 1));
    auto const rz = share(right_zero_adjoined(2));
    auto const sq = square(rz);
    for (Index a = 0; a < sq.size(); ++a) {
      for (Index b = 0; b < sq.size(); ++b) {
        auto const st = two_step_connect(sq, a, b);
        REQUIRE(st);
        CHECK(sq.act(a, st->first) == sq.act(b, st->second));
      }
    }
  }

  TEST_CASE("powers of the regular act") {
    CHECK(power_act_indecomposable(z2, 1));
    CHECK(power_act_indecomposable(t2, 2));
    CHECK_FALSE(power_act_indecomposable(z2, 2));
    CHECK(power_act_indecomposable(share(full_transformation(3)), 2));
  }
}
