#ifndef ACTA_ACT_HPP_
#define ACTA_ACT_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acta/monoid.hpp"

namespace acta {

  // Default size caps. Callers may pass tighter or looser ones.
  inline constexpr std::size_t kProductCap         = 1'000'000;
  inline constexpr std::size_t kSubactEnumCap      = 20;
  inline constexpr std::size_t kCongruenceEnumCap  = 6;
  inline constexpr std::size_t kMorphismCap        = 1'000'000;
  inline constexpr std::size_t kActEnumNodeCap     = 50'000'000;

  // A finite right act over a FiniteMonoid: action[x][s] = x . s.
  // Left acts over S are represented as right acts over opposite(S).
  class FiniteAct {
   public:
    // Checks ranges, unitality (x . 1 = x) and compatibility
    // ((x . s) . t = x . (st)). Throws acta::Error with a witness.
    static FiniteAct validate(MonoidPtr                monoid,
                              Table const&             raw_action,
                              std::vector<std::string> names = {});

    FiniteMonoid const& monoid() const noexcept {
      return *_monoid;
    }

    MonoidPtr const& monoid_ptr() const noexcept {
      return _monoid;
    }

    std::size_t size() const noexcept {
      return _size;
    }

    Index act(Index x, Index s) const noexcept {
      return _action[x * _monoid->order() + s];
    }

    std::string const& name(Index x) const {
      return _names[x];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    Table rows() const;

    bool same_action(FiniteAct const& other) const noexcept {
      return _size == other._size && _action == other._action
             && _monoid->same_table(*other._monoid);
    }

    // Construction from already-verified data. Only used by constructions
    // whose output is valid by definition; tests re-validate every one.
    static FiniteAct trusted(MonoidPtr monoid, std::size_t size,
                             std::vector<Index>       flat,
                             std::vector<std::string> names = {});

   private:
    FiniteAct(MonoidPtr monoid, std::size_t size, std::vector<Index> flat,
              std::vector<std::string> names)
        : _monoid(std::move(monoid)),
          _size(size),
          _action(std::move(flat)),
          _names(std::move(names)) {}

    MonoidPtr                _monoid;
    std::size_t              _size;
    std::vector<Index>       _action;
    std::vector<std::string> _names;
  };

  // A map between carriers. Whether it is a homomorphism depends on the acts
  // it is used with; see is_morphism.
  struct ActMorphism {
    std::vector<Index> map;

    Index operator()(Index x) const {
      return map[x];
    }

    bool operator==(ActMorphism const&) const = default;
  };

  bool is_morphism(FiniteAct const& source, FiniteAct const& target,
                   ActMorphism const& f);
  bool is_injective(ActMorphism const& f, std::size_t target_size);
  // (g after f)(x) = g(f(x)).
  ActMorphism compose(ActMorphism const& g, ActMorphism const& f);
  ActMorphism identity_morphism(std::size_t size);

  // A partition of an act's carrier. Blocks are numbered densely in order
  // of their least element.
  class RightCongruence {
   public:
    // Normalizes block ids; throws if the partition is not a right
    // congruence on the act.
    static RightCongruence from_labels(FiniteAct const&       act,
                                       std::span<Index const> labels);
    static RightCongruence from_blocks(FiniteAct const&                       act,
                                       std::vector<std::vector<Index>> const& blocks);
    static RightCongruence identity(std::size_t size);

    // Normalizes only; the caller guarantees compatibility.
    static RightCongruence trusted(std::span<Index const> labels);

    std::size_t size() const noexcept {
      return _block_of.size();
    }

    std::size_t block_count() const noexcept {
      return _blocks;
    }

    Index block_of(Index x) const {
      return _block_of[x];
    }

    std::vector<Index> const& labels() const noexcept {
      return _block_of;
    }

    std::vector<std::vector<Index>> blocks() const;

    bool related(Index x, Index y) const {
      return _block_of[x] == _block_of[y];
    }

    // Every block of *this lies inside a block of other.
    bool refines(RightCongruence const& other) const;

    bool operator==(RightCongruence const&) const = default;

   private:
    RightCongruence(std::vector<Index> labels, std::size_t blocks)
        : _block_of(std::move(labels)), _blocks(blocks) {}

    std::vector<Index> _block_of;
    std::size_t        _blocks;
  };

  bool is_right_congruence(FiniteAct const& act, std::span<Index const> labels);

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  FiniteAct regular_act(MonoidPtr const& monoid);
  FiniteAct zero_act(MonoidPtr const& monoid);

  struct ProductAct {
    FiniteAct                act;
    std::vector<ActMorphism> projections;
  };

  // Carrier in row-major order: the last factor varies fastest.
  ProductAct product_act(std::span<FiniteAct const> factors,
                         std::size_t                cap = kProductCap);

  // Convenience: k copies of the regular act.
  FiniteAct power_act(MonoidPtr const& monoid, std::size_t k,
                      std::size_t cap = kProductCap);

  struct CoproductAct {
    FiniteAct                act;
    std::vector<ActMorphism> injections;
  };

  // Element (i, x) of part i sits at offset(i) + x.
  CoproductAct coproduct_act(std::span<FiniteAct const> parts);

  struct Subact {
    FiniteAct          act;
    std::vector<Index> elements;  // sorted; position k is element k of act
    ActMorphism        inclusion;
  };

  std::vector<Index> subact_closure(FiniteAct const&       act,
                                    std::span<Index const> seeds);
  Subact             subact_generated(FiniteAct const&       act,
                                      std::span<Index const> seeds);
  // subset must be action-closed; throws NotASubact otherwise.
  Subact             subact_on(FiniteAct const& act, std::span<Index const> subset);
  bool               is_subact(FiniteAct const& act, std::span<Index const> subset);

  // All nonempty action-closed subsets, ordered by their bitmask.
  std::vector<std::vector<Index>> enumerate_subacts(FiniteAct const& act,
                                                    std::size_t cap = kSubactEnumCap);

  // Smallest right congruence containing the pairs, by union-find with a
  // worklist that pushes (u.s, v.s) for every merged (u, v).
  RightCongruence congruence_closure(
      FiniteAct const& act, std::span<std::pair<Index, Index> const> pairs);

  struct Quotient {
    FiniteAct       act;
    ActMorphism     projection;
    RightCongruence congruence;
  };

  Quotient quotient_act(FiniteAct const& act, RightCongruence const& rho);

  // Regular act with the right ideal collapsed to one (zero) element.
  Quotient rees_quotient(MonoidPtr const& monoid, std::span<Index const> ideal);

  // All partitions of the carrier that are right congruences, in order of
  // restricted growth strings.
  std::vector<RightCongruence> enumerate_right_congruences(
      FiniteAct const& act, std::size_t cap = kCongruenceEnumCap);

  // All maps S -> {0..letters-1} with (f.s)(t) = f(st), in lexicographic
  // order of their value tables.
  FiniteAct cofree_act(MonoidPtr const& monoid, std::size_t letters,
                       std::size_t cap = kProductCap);

  std::vector<Index> zeros_of_act(FiniteAct const& act);

  ////////////////////////////////////////////////////////////////////////
  // Morphism search
  ////////////////////////////////////////////////////////////////////////

  // Visits every morphism source -> target that agrees with the partial
  // assignment (nullopt = free), in lexicographic order of image tables.
  // The visitor returns false to stop early. Returns the number visited.
  std::size_t for_each_morphism(
      FiniteAct const& source, FiniteAct const& target,
      std::vector<std::optional<Index>> const&        partial,
      std::function<bool(ActMorphism const&)> const& visit);

  std::vector<ActMorphism> homomorphisms(FiniteAct const& source,
                                         FiniteAct const& target,
                                         std::size_t      cap = kMorphismCap);

  ////////////////////////////////////////////////////////////////////////
  // Colimits
  ////////////////////////////////////////////////////////////////////////

  struct Pushout {
    FiniteAct   act;
    ActMorphism q1;
    ActMorphism q2;
  };

  // Quotient of Y1 + Y2 by the congruence generated by (f1(x), f2(x)).
  Pushout pushout(FiniteAct const& x, FiniteAct const& y1,
                  FiniteAct const& y2, ActMorphism const& f1,
                  ActMorphism const& f2);

  // Pushout of two injective morphisms; throws NotInjective otherwise.
  Pushout amalgamated_coproduct(FiniteAct const& x, FiniteAct const& y1,
                                FiniteAct const& y2, ActMorphism const& f1,
                                ActMorphism const& f2);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  // Every act of the given size, as monoid homomorphisms into the right
  // transformations of the carrier. Deterministic order. With up_to_iso,
  // one representative per relabeling class (the least action table).
  std::vector<FiniteAct> enumerate_acts(MonoidPtr const& monoid,
                                        std::size_t      size,
                                        bool             up_to_iso,
                                        std::size_t      node_cap = kActEnumNodeCap);

  // Least action table over all relabelings of the carrier.
  FiniteAct canonical_act(FiniteAct const& act);

  bool same_monoid(FiniteAct const& a, FiniteAct const& b);

}  // namespace acta

#endif  // ACTA_ACT_HPP_
