#ifndef ACTA_HARNESS_HPP_
#define ACTA_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "acta/act.hpp"
#include "acta/flatness.hpp"
#include "acta/monoid.hpp"

namespace acta {

  struct MonoidAnalysis {
    bool               left_reversible        = false;
    bool               right_reversible       = false;
    bool               right_collapsible      = false;
    std::vector<Index> left_zeros;
    std::vector<Index> right_zeros;
    bool               s2_indecomposable      = false;
    bool               left_s2_indecomposable = false;
    FlatnessVerdict    theta;
  };

  MonoidAnalysis analyze_monoid(MonoidPtr const&      monoid,
                                FlatnessBounds const& bounds = {});

  nlohmann::json analysis_to_json(FiniteMonoid const&   monoid,
                                  MonoidAnalysis const& analysis);

  // The act A_n / rho_n: n copies of the regular act, copy i glued to copy
  // i+1 along a^(i) ~ b^(i+1) for 1 <= i < n. generators[i] is the class of
  // the identity of copy i + 1.
  struct GluedChain {
    FiniteAct          act;
    std::vector<Index> generators;
  };

  // Requires aS and bS disjoint (IdealsIntersect otherwise) and n >= 1.
  GluedChain construct_An(MonoidPtr const& monoid, std::size_t n, Index a, Index b);

  // Uses the first pair with disjoint principal right ideals.
  GluedChain construct_An(MonoidPtr const& monoid, std::size_t n);

  // S/rho with rho collapsing aS and bS separately, for the first disjoint
  // pair (a, b). Throws LeftReversible when no such pair exists.
  FiniteAct witness_two_zero_cyclic(MonoidPtr const& monoid);

  struct VerifyBounds {
    std::size_t   max_order     = 4;
    std::size_t   max_act_size  = 3;
    std::size_t   samples       = 200;
    std::uint64_t seed          = 0;
    bool          allow_order_5 = false;
  };

  struct Report {
    std::string                 suite;
    VerifyBounds                bounds;
    bool                        pass            = true;
    std::size_t                 monoids_checked = 0;
    std::size_t                 checks          = 0;
    std::vector<nlohmann::json> counterexamples;
    std::vector<std::string>    notes;
    std::vector<Report>         parts;  // populated for "all"
    std::int64_t                elapsed_ms = 0;
  };

  // Suite ids accepted by verify_theorem, "all" first.
  std::vector<std::string> const& theorem_ids();

  // Throws UnknownTheorem or BoundsTooLarge.
  Report verify_theorem(std::string_view id, VerifyBounds const& bounds);

  nlohmann::json report_to_json(Report const& r, bool with_timing = true);

  struct CensusRecord {
    MonoidPtr      monoid;
    Table          canonical;
    MonoidAnalysis analysis;
  };

  // Monoids of orders 1..max_order, sorted by (order, canonical table).
  std::vector<CensusRecord> census(std::size_t max_order, bool up_to_iso,
                                   bool                  allow_order_5 = false,
                                   FlatnessBounds const& bounds        = {});

}  // namespace acta

#endif  // ACTA_HARNESS_HPP_
