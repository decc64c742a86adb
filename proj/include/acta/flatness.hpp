#ifndef ACTA_FLATNESS_HPP_
#define ACTA_FLATNESS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acta/act.hpp"
#include "acta/decomposition.hpp"

namespace acta {

  // A (x) B for a right act A over M and a left act B over M, the latter
  // stored as a right act over opposite(M) (so s.b = B.act(b, s)). Elementary
  // tensor (a, b) sits at a * |B| + b; classes are numbered by least (a, b).
  struct TensorQuotient {
    std::size_t        right_size = 0;
    std::size_t        left_size  = 0;
    std::vector<Index> class_of;
    std::size_t        classes = 0;

    Index class_at(Index a, Index b) const {
      return class_of[a * left_size + b];
    }
  };

  // Union-find on A x B with edges ((a.s, b), (a, s.b)).
  TensorQuotient tensor_product(FiniteAct const& right, FiniteAct const& left,
                                std::size_t cap = kProductCap);

  // Theta (x) B together with the map class -> component of B.
  struct ThetaTensor {
    TensorQuotient     tensor;
    Decomposition      left_components;
    std::vector<Index> class_to_component;
    bool               bijective = false;
  };

  ThetaTensor theta_tensor(FiniteAct const& left);

  // The canonical map Theta (x) prod B_i -> prod (Theta (x) B_i).
  struct ProductComparison {
    enum class Kind { Bijective, NotInjective, NotSurjective };

    Kind kind = Kind::Bijective;
    std::size_t source_classes = 0;
    std::size_t target_classes = 0;
    // NotInjective: two product elements in distinct source classes with the
    // same image. NotSurjective: a target tuple (flattened row-major) with
    // no preimage.
    std::optional<std::pair<Index, Index>> collision;
    std::optional<std::vector<Index>>      missing;

    bool bijective() const noexcept {
      return kind == Kind::Bijective;
    }
  };

  char const* to_string(ProductComparison::Kind kind) noexcept;

  ProductComparison product_comparison(std::span<FiniteAct const> left_factors,
                                       std::size_t cap = kProductCap);

  // {a : f(a) = g(a)} as a subact of the source, or nullopt when empty.
  // Throws NotParallel when f and g do not share source and target.
  std::optional<Subact> equalizer_act(FiniteAct const& source,
                                      FiniteAct const& target,
                                      ActMorphism const& f, ActMorphism const& g);

  struct FlatnessBounds {
    std::size_t act_size = 2;
  };

  struct FlatnessVerdict {
    bool               finitely_product_flat = false;
    bool               product_flat          = false;
    bool               super_flat            = false;
    std::vector<Index> left_zeros;
    // One line per sampled comparison that contradicted the verdict; these
    // are defects of this library, never of the underlying theory.
    std::vector<std::string> violations;
    std::size_t              pairs_checked = 0;
    bool                     left_square_indecomposable = false;
  };

  // Verdict for the one-element right act Theta over M. Finite product
  // flatness is read off the left act S x S; product and super flatness are
  // both "M has a left zero". Evidence: product_comparison over every pair of
  // left acts of size <= bounds.act_size.
  FlatnessVerdict theta_flatness_verdict(MonoidPtr const&      monoid,
                                         FlatnessBounds const& bounds = {});

}  // namespace acta

#endif  // ACTA_FLATNESS_HPP_
