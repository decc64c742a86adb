#ifndef ACTA_INJECTIVITY_HPP_
#define ACTA_INJECTIVITY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "acta/act.hpp"

namespace acta {

  inline constexpr std::size_t kInjectivityMonoidCap = 6;

  // Searches for f_bar: B -> Q with f_bar(inclusion(a)) = f(a). Returns the
  // first extension found. Throws NotASubact when the inclusion is not an
  // injective morphism onto an action-closed subset, NotAMorphism when f is
  // not a morphism.
  std::optional<ActMorphism> homomorphism_extends(FiniteAct const&   sub,
                                                  FiniteAct const&   whole,
                                                  ActMorphism const& inclusion,
                                                  FiniteAct const&   target,
                                                  ActMorphism const& f);

  // A morphism from a subact of a cyclic act S/rho that does not extend.
  struct ExtensionFailure {
    RightCongruence    congruence;  // rho on the regular act
    std::vector<Index> subact;      // elements of S/rho
    ActMorphism        map;         // subact (in sorted order) -> Q
  };

  struct RelativeInjectivity {
    bool                            holds = true;
    std::optional<ExtensionFailure> failure;
    std::size_t                     extensions_checked = 0;
  };

  // Every morphism from every subact of every cyclic act S/rho into Q
  // extends to S/rho.
  RelativeInjectivity is_injective_rel_cyclic(FiniteAct const& target);

  // Baer criterion: a zero element plus injectivity relative to inclusions
  // into cyclic acts. This is the operational definition for finite acts.
  bool is_injective(FiniteAct const& target);

}  // namespace acta

#endif  // ACTA_INJECTIVITY_HPP_
