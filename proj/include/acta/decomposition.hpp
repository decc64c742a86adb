#ifndef ACTA_DECOMPOSITION_HPP_
#define ACTA_DECOMPOSITION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acta/act.hpp"

namespace acta {

  // Partition of an act into its indecomposable components. Component ids
  // are numbered in order of the least element they contain.
  struct Decomposition {
    std::vector<Index> component_of;
    std::size_t        count = 0;

    std::vector<std::vector<Index>> blocks() const;
  };

  // Union-find over the edges (x, x.s).
  Decomposition components(FiniteAct const& act);
  bool          is_indecomposable(FiniteAct const& act);

  // One equality pair of a scheme: element a_i with translators s_i, t_i.
  struct SchemeStep {
    Index element;  // a_i
    Index left;     // s_i
    Index right;    // t_i

    bool operator==(SchemeStep const&) const = default;
  };

  // a = a_1 s_1, a_1 t_1 = a_2 s_2, ..., a_n t_n = b.
  struct Scheme {
    Index                   from = 0;
    Index                   to   = 0;
    std::vector<SchemeStep> steps;

    std::size_t length() const noexcept {
      return steps.size();
    }
  };

  // Empty string when the scheme holds in the act, otherwise a description
  // of the first broken equality.
  std::string scheme_error(FiniteAct const& act, Scheme const& scheme);

  // Breadth-first search over x => y iff x = z.s and y = z.t for some z, s,
  // t. Returns a scheme of least length, or nullopt when a and b lie in
  // different components.
  std::optional<Scheme> shortest_scheme(FiniteAct const& act, Index a, Index b);

  // Exhaustive search for (s, s') with a.s = b.s'. First hit in
  // lexicographic order.
  std::optional<std::pair<Index, Index>> two_step_connect(FiniteAct const& act,
                                                          Index a, Index b);

  // Whether S^k (k copies of the regular act) is indecomposable.
  bool power_act_indecomposable(MonoidPtr const& monoid, std::size_t k,
                                std::size_t cap = kProductCap);

}  // namespace acta

#endif  // ACTA_DECOMPOSITION_HPP_
