#include "acta/injectivity.hpp"

#include "acta/error.hpp"

namespace acta {

  std::optional<ActMorphism> homomorphism_extends(FiniteAct const&   sub,
                                                  FiniteAct const&   whole,
                                                  ActMorphism const& inclusion,
                                                  FiniteAct const&   target,
                                                  ActMorphism const& f) {
    if (!is_morphism(sub, whole, inclusion) || !is_injective(inclusion, whole.size())) {
      throw Error(ErrorCode::NotASubact, "inclusion is not an injective morphism");
    }
    if (!is_morphism(sub, target, f)) {
      throw Error(ErrorCode::NotAMorphism, "map to extend is not a morphism");
    }
    std::vector<std::optional<Index>> partial(whole.size());
    for (Index a = 0; a < sub.size(); ++a) {
      partial[inclusion(a)] = f(a);
    }
    std::optional<ActMorphism> found;
    for_each_morphism(whole, target, partial, [&](ActMorphism const& g) {
      found = g;
      return false;
    });
    return found;
  }

  RelativeInjectivity is_injective_rel_cyclic(FiniteAct const& target) {
    auto const& monoid = target.monoid_ptr();
    if (monoid->order() > kInjectivityMonoidCap) {
      throw Error(ErrorCode::SizeCapExceeded,
                  "relative injectivity sweep needs monoid order <= "
                      + std::to_string(kInjectivityMonoidCap));
    }
    RelativeInjectivity out;
    auto const          regular = regular_act(monoid);
    for (auto const& rho : enumerate_right_congruences(regular)) {
      auto const cyclic = quotient_act(regular, rho).act;
      for (auto const& elements : enumerate_subacts(cyclic)) {
        auto const sub = subact_on(cyclic, elements);
        for_each_morphism(sub.act, target, {}, [&](ActMorphism const& f) {
          ++out.extensions_checked;
          if (!homomorphism_extends(sub.act, cyclic, sub.inclusion, target, f)) {
            out.holds   = false;
            out.failure = ExtensionFailure{rho, elements, f};
            return false;
          }
          return true;
        });
        if (!out.holds) {
          return out;
        }
      }
    }
    return out;
  }

  bool is_injective(FiniteAct const& target) {
    return !zeros_of_act(target).empty() && is_injective_rel_cyclic(target).holds;
  }

}  // namespace acta
