#ifndef ACTA_MONOID_HPP_
#define ACTA_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acta {

  using Index = std::uint32_t;
  using Table = std::vector<std::vector<Index>>;

  // A finite monoid given by its Cayley table. Element 0 is always the
  // identity. Instances are immutable once validated.
  class FiniteMonoid {
   public:
    // Checks range, identity at index 0 and associativity (in that order) and
    // throws acta::Error with a concrete witness on failure. Missing names
    // default to "1", "a", "b", ... for small orders and "e<i>" otherwise.
    static FiniteMonoid validate(Table const&              raw,
                                 std::vector<std::string> names = {});

    std::size_t order() const noexcept {
      return _order;
    }

    Index product(Index x, Index y) const noexcept {
      return _table[x * _order + y];
    }

    std::string const& name(Index x) const {
      return _names[x];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    Table rows() const;

    // Table equality, ignoring element names.
    bool same_table(FiniteMonoid const& other) const noexcept {
      return _order == other._order && _table == other._table;
    }

    bool operator==(FiniteMonoid const&) const = default;

   private:
    FiniteMonoid(std::size_t order, std::vector<Index> flat,
                 std::vector<std::string> names)
        : _order(order), _table(std::move(flat)), _names(std::move(names)) {}

    friend FiniteMonoid opposite(FiniteMonoid const&);
    friend FiniteMonoid relabel(FiniteMonoid const&, std::span<Index const>);

    std::size_t              _order;
    std::vector<Index>       _table;
    std::vector<std::string> _names;
  };

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  inline MonoidPtr share(FiniteMonoid m) {
    return std::make_shared<FiniteMonoid const>(std::move(m));
  }

  std::vector<std::string> default_element_names(std::size_t order);

  ////////////////////////////////////////////////////////////////////////
  // Standard families
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid trivial_monoid();
  FiniteMonoid cyclic_group(unsigned k);
  // k left zeros a, b, ... with an identity adjoined: x * y = x for x != 1.
  FiniteMonoid left_zero_adjoined(unsigned k);
  // k right zeros with an identity adjoined: x * y = y for y != 1.
  FiniteMonoid right_zero_adjoined(unsigned k);
  // All n^n maps of {1..n}, composed as (fg)(x) = f(g(x)). The identity is
  // element 0; the remaining maps follow in lexicographic order of their
  // value tables. Names are the one-line value tables, e.g. "21".
  FiniteMonoid full_transformation(unsigned n);

  // family in {trivial, cyclic_group, left_zero_adjoined,
  // right_zero_adjoined, full_transformation} plus the short aliases
  // {cyclic, zk, lz1, rz1, tn}.
  FiniteMonoid standard_monoid(std::string_view family, unsigned param);

  // Index of the full transformation with the given (0-based) value table.
  Index transformation_index(std::span<Index const> values);

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid opposite(FiniteMonoid const& m);

  // perm maps old index -> new index and must fix 0.
  FiniteMonoid relabel(FiniteMonoid const& m, std::span<Index const> perm);

  bool is_commutative(FiniteMonoid const& m);

  std::vector<Index> left_zeros(FiniteMonoid const& m);
  std::vector<Index> right_zeros(FiniteMonoid const& m);

  // Union of the principal right ideals aS over the seeds, sorted.
  std::vector<Index> right_ideal_generated(FiniteMonoid const&  m,
                                           std::span<Index const> seeds);
  // Sorted; same as the above with rules mirrored.
  std::vector<Index> left_ideal_generated(FiniteMonoid const&  m,
                                          std::span<Index const> seeds);

  bool is_right_ideal(FiniteMonoid const& m, std::span<Index const> subset);

  struct PredicateResult {
    bool                                 holds;
    std::optional<std::pair<Index, Index>> witness;  // set iff !holds

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // aS and bS intersect for every pair a, b. The witness is the
  // lexicographically first pair (a, b) with aS and bS disjoint.
  PredicateResult is_left_reversible(FiniteMonoid const& m);
  // Sa and Sb intersect for every pair a, b.
  PredicateResult is_right_reversible(FiniteMonoid const& m);
  // For all s, t there is u with su = tu.
  PredicateResult is_right_collapsible(FiniteMonoid const& m);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and canonical forms
  ////////////////////////////////////////////////////////////////////////

  // Lexicographically least table over all relabelings fixing 0.
  Table canonical_form(FiniteMonoid const& m);

  // Number of automorphisms, by brute force over permutations fixing 0.
  std::size_t automorphism_count(FiniteMonoid const& m);

  // Every associative table with identity at 0, in lexicographic order of
  // the free cells. With up_to_iso only tables equal to their own canonical
  // form are kept, giving one representative per class. Order 5 requires
  // allow_order_5; anything larger throws OrderTooLarge.
  std::vector<FiniteMonoid> enumerate_monoids(std::size_t order,
                                              bool        up_to_iso,
                                              bool        allow_order_5 = false);

}  // namespace acta

#endif  // ACTA_MONOID_HPP_
