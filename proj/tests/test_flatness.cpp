#include <doctest.h>

#include "acta/decomposition.hpp"
#include "acta/error.hpp"
#include "acta/flatness.hpp"
#include "oracles.hpp"

using namespace acta;

namespace {

  MonoidPtr const z2 = share(cyclic_group(2));
  MonoidPtr const lz = share(left_zero_adjoined(2));
  MonoidPtr const t2 = share(full_transformation(2));

  // The left regular act of m, as a right act over opposite(m).
  FiniteAct left_regular(MonoidPtr const& m) {
    return regular_act(share(opposite(*m)));
  }

}  // namespace

TEST_SUITE("flatness") {
  TEST_CASE("tensor products of small acts") {
    auto const left = left_regular(t2);
    CHECK(tensor_product(regular_act(t2), left).classes == 4);
    CHECK(tensor_product(zero_act(t2), left).classes == 1);

    auto const             zl = left_regular(z2);
    std::vector<FiniteAct> two{zl, zl};
    auto const             prod = product_act(two).act;
    CHECK(tensor_product(zero_act(z2), prod).classes == 2);
    CHECK_THROWS_AS(tensor_product(regular_act(z2), regular_act(lz)), Error);
  }

  TEST_CASE("tensor classes agree with the closure oracle") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& m : enumerate_monoids(n, true)) {
        auto const mp = share(std::move(m));
        auto const op = share(opposite(*mp));
        for (auto const& a : enumerate_acts(mp, 2, true)) {
          for (auto const& b : enumerate_acts(op, 3, true)) {
            CHECK(tensor_product(a, b).classes
                  == oracle::tensor_classes(a.rows(), b.rows(), n));
          }
        }
      }
    }
  }

  TEST_CASE("Theta tensor counts components") {
    auto const r = theta_tensor(left_regular(z2));
    CHECK(r.tensor.classes == 1);
    CHECK(r.bijective);

    std::vector<FiniteAct> thetas(3, zero_act(share(opposite(*lz))));
    auto const             k = theta_tensor(coproduct_act(thetas).act);
    CHECK(k.tensor.classes == 3);

    auto const             zl = left_regular(z2);
    std::vector<FiniteAct> two{zl, zl};
    auto const             p = theta_tensor(product_act(two).act);
    CHECK(p.tensor.classes == 2);
    CHECK(p.left_components.count == 2);
    CHECK(p.bijective);
  }

  TEST_CASE("product comparison") {
    std::vector<FiniteAct> one{left_regular(z2)};
    CHECK(product_comparison(one).bijective());

    auto const             zl = left_regular(z2);
    std::vector<FiniteAct> zz{zl, zl};
    auto const             c = product_comparison(zz);
    CHECK(c.kind == ProductComparison::Kind::NotInjective);
    CHECK(c.source_classes == 2);
    CHECK(c.target_classes == 1);
    CHECK(c.collision.has_value());

    auto const             ll = left_regular(lz);
    std::vector<FiniteAct> lzlz{ll, ll};
    CHECK(product_comparison(lzlz).bijective());
    CHECK(std::string(to_string(ProductComparison::Kind::NotSurjective)) == "not_surjective");
  }

  TEST_CASE("equalizers") {
    auto const  reg = regular_act(z2);
    auto const  cof = cofree_act(z2, 2);
    ActMorphism id{{0, 1}};
    CHECK(equalizer_act(reg, reg, id, id)->elements == std::vector<Index>{0, 1});

    auto const homs = homomorphisms(reg, cof);
    REQUIRE(homs.size() == 4);
    CHECK_FALSE(equalizer_act(reg, cof, homs[0], homs[3]));

    std::vector<FiniteAct> two{reg, reg};
    auto const             p  = product_act(two);
    auto const             eq = equalizer_act(p.act, reg, p.projections[0], p.projections[1]);
    REQUIRE(eq);
    CHECK(eq->elements == std::vector<Index>{0, 3});
    CHECK(eq->act.same_action(reg));

    CHECK_THROWS_AS(equalizer_act(reg, cof, id, homs[0]), Error);
  }

  TEST_CASE("flatness verdicts for Theta") {
    auto const t = theta_flatness_verdict(t2);
    CHECK(t.finitely_product_flat);
    CHECK(t.product_flat);
    CHECK(t.super_flat);
    CHECK(t.violations.empty());

    auto const z = theta_flatness_verdict(z2);
    CHECK_FALSE(z.finitely_product_flat);
    CHECK_FALSE(z.product_flat);
    CHECK_FALSE(z.super_flat);
    CHECK(z.violations.empty());

    auto const one = theta_flatness_verdict(share(trivial_monoid()));
    CHECK(one.finitely_product_flat);
    CHECK(one.product_flat);
    CHECK(one.super_flat);
  }
}
