#include <doctest.h>

#include <algorithm>

#include "acta/error.hpp"
#include "acta/injectivity.hpp"
#include "oracles.hpp"

using namespace acta;

namespace {

  MonoidPtr const z2 = share(cyclic_group(2));
  MonoidPtr const lz = share(left_zero_adjoined(2));
  MonoidPtr const t2 = share(full_transformation(2));

  // Relative injectivity by brute force: for every cyclic S/rho, every
  // subact and every map into q, look for an extension among all maps.
  bool rel_cyclic_oracle(MonoidPtr const& m, FiniteAct const& q) {
    auto const reg = regular_act(m);
    bool       ok  = true;
    oracle::for_each_partition(m->order(), [&](std::vector<Index> const& labels) {
      if (!ok || !oracle::is_right_congruence(reg.rows(), labels)) {
        return;
      }
      auto const cyclic = quotient_act(reg, RightCongruence::from_labels(reg, labels)).act;
      auto const rows   = cyclic.rows();
      auto const whole  = oracle::morphisms(rows, q.rows());
      for (auto const& sub : oracle::subacts(rows)) {
        oracle::Table sub_rows;
        for (Index x : sub) {
          std::vector<Index> row;
          for (Index y : rows[x]) {
            row.push_back(static_cast<Index>(
                std::find(sub.begin(), sub.end(), y) - sub.begin()));
          }
          sub_rows.push_back(row);
        }
        for (auto const& f : oracle::morphisms(sub_rows, q.rows())) {
          bool extends = false;
          for (auto const& g : whole) {
            bool agrees = true;
            for (std::size_t i = 0; i < sub.size(); ++i) {
              agrees = agrees && g[sub[i]] == f[i];
            }
            extends = extends || agrees;
          }
          ok = ok && extends;
        }
      }
    });
    return ok;
  }

}  // namespace

TEST_SUITE("injectivity") {
  TEST_CASE("extensions") {
    auto const        reg = regular_act(lz);
    ActMorphism const id{{0, 1, 2}};
    CHECK(homomorphism_extends(reg, reg, id, reg, id) == id);

    std::vector<Index> a{1};
    auto const         sub   = subact_on(reg, a);
    auto const         theta = zero_act(lz);
    auto const         ext = homomorphism_extends(sub.act, reg, sub.inclusion, theta,
                                                  ActMorphism{{0}});
    REQUIRE(ext);
    CHECK(ext->map == std::vector<Index>{0, 0, 0});

    CHECK_THROWS_AS(homomorphism_extends(sub.act, reg, ActMorphism{{0}}, theta,
                                         ActMorphism{{0}}),
                    Error);
  }

  TEST_CASE("relative injectivity") {
    CHECK(is_injective_rel_cyclic(zero_act(z2)).holds);
    CHECK(is_injective_rel_cyclic(regular_act(z2)).holds);
    CHECK(is_injective(zero_act(t2)));
    CHECK_FALSE(is_injective(regular_act(z2)));

    std::vector<FiniteAct> two{zero_act(lz), zero_act(lz)};
    auto const             q = coproduct_act(two).act;
    CHECK(is_injective_rel_cyclic(q).holds == rel_cyclic_oracle(lz, q));

    auto const one = share(trivial_monoid());
    for (std::size_t k = 1; k <= 3; ++k) {
      for (auto const& a : enumerate_acts(one, k, true)) {
        CHECK(is_injective(a));
      }
    }
  }

  TEST_CASE("relative injectivity agrees with brute force") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& m : enumerate_monoids(n, true)) {
        auto const mp = share(std::move(m));
        for (std::size_t k = 1; k <= 3; ++k) {
          for (auto const& q : enumerate_acts(mp, k, true)) {
            auto const r = is_injective_rel_cyclic(q);
            CHECK(r.holds == rel_cyclic_oracle(mp, q));
            if (!r.holds) {
              REQUIRE(r.failure);
              CHECK(r.failure->map.map.size() == r.failure->subact.size());
            }
          }
        }
      }
    }
  }
}
