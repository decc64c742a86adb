#include "acta/flatness.hpp"

#include <map>

#include "acta/error.hpp"
#include "acta/union_find.hpp"

namespace acta {

  char const* to_string(ProductComparison::Kind kind) noexcept {
    switch (kind) {
      case ProductComparison::Kind::Bijective: return "bijective";
      case ProductComparison::Kind::NotInjective: return "not_injective";
      case ProductComparison::Kind::NotSurjective: return "not_surjective";
    }
    return "unknown";
  }

  TensorQuotient tensor_product(FiniteAct const& right, FiniteAct const& left,
                                std::size_t cap) {
    if (!opposite(right.monoid()).same_table(left.monoid())) {
      throw Error(ErrorCode::MixedMonoids,
                  "the left factor must be an act over the opposite monoid");
    }
    if (left.size() > 0 && right.size() > cap / left.size()) {
      throw Error(ErrorCode::SizeCapExceeded, "tensor product carrier too large");
    }
    std::size_t const rs = right.size();
    std::size_t const ls = left.size();
    std::size_t const n  = right.monoid().order();
    UnionFind         uf(rs * ls);
    for (Index a = 0; a < rs; ++a) {
      for (Index b = 0; b < ls; ++b) {
        for (Index s = 1; s < n; ++s) {
          uf.unite(right.act(a, s) * ls + b, a * ls + left.act(b, s));
        }
      }
    }
    TensorQuotient t;
    t.right_size = rs;
    t.left_size  = ls;
    t.classes    = uf.set_count();
    t.class_of   = uf.labels<Index>();
    return t;
  }

  ThetaTensor theta_tensor(FiniteAct const& left) {
    auto const  theta_monoid = share(opposite(left.monoid()));
    ThetaTensor out;
    out.tensor          = tensor_product(zero_act(theta_monoid), left);
    out.left_components = components(left);
    out.class_to_component.assign(out.tensor.classes, static_cast<Index>(-1));
    std::vector<Index> component_to_class(out.left_components.count,
                                          static_cast<Index>(-1));
    bool ok = true;
    for (Index b = 0; b < left.size(); ++b) {
      Index const c    = out.tensor.class_at(0, b);
      Index const comp = out.left_components.component_of[b];
      Index&      fwd  = out.class_to_component[c];
      Index&      back = component_to_class[comp];
      if (fwd == static_cast<Index>(-1)) {
        fwd = comp;
      }
      if (back == static_cast<Index>(-1)) {
        back = c;
      }
      ok = ok && fwd == comp && back == c;
    }
    out.bijective = ok && out.tensor.classes == out.left_components.count;
    return out;
  }

  ProductComparison product_comparison(std::span<FiniteAct const> left_factors,
                                       std::size_t                cap) {
    if (left_factors.empty()) {
      throw Error(ErrorCode::InvalidInput, "product_comparison needs a factor");
    }
    auto const product = product_act(left_factors, cap);
    auto const source  = theta_tensor(product.act).tensor;
    std::vector<TensorQuotient> factors;
    std::size_t                 target = 1;
    for (auto const& b : left_factors) {
      factors.push_back(theta_tensor(b).tensor);
      target *= factors.back().classes;
    }
    ProductComparison out;
    out.source_classes = source.classes;
    out.target_classes = target;

    // image code of each source class, and a representative
    std::vector<std::size_t> image(source.classes, static_cast<std::size_t>(-1));
    std::vector<Index>       representative(source.classes, 0);
    std::map<std::size_t, Index> preimage;  // image code -> product element
    for (Index p = 0; p < product.act.size(); ++p) {
      std::size_t code = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        code = code * factors[i].classes + factors[i].class_at(0, product.projections[i](p));
      }
      Index const c = source.class_at(0, p);
      if (image[c] == static_cast<std::size_t>(-1)) {
        image[c]          = code;
        representative[c] = p;
        auto [it, fresh]  = preimage.emplace(code, p);
        if (!fresh && !out.collision) {
          out.collision = std::make_pair(it->second, p);
        }
      }
    }
    if (out.collision) {
      out.kind = ProductComparison::Kind::NotInjective;
      return out;
    }
    if (preimage.size() != target) {
      for (std::size_t code = 0; code < target; ++code) {
        if (!preimage.contains(code)) {
          std::vector<Index> tuple(factors.size());
          std::size_t        rest = code;
          for (std::size_t i = factors.size(); i-- > 0;) {
            tuple[i] = static_cast<Index>(rest % factors[i].classes);
            rest /= factors[i].classes;
          }
          out.missing = std::move(tuple);
          break;
        }
      }
      out.kind = ProductComparison::Kind::NotSurjective;
    }
    return out;
  }

  std::optional<Subact> equalizer_act(FiniteAct const& source,
                                      FiniteAct const& target,
                                      ActMorphism const& f, ActMorphism const& g) {
    if (f.map.size() != source.size() || g.map.size() != source.size()) {
      throw Error(ErrorCode::NotParallel, "morphisms do not share a source");
    }
    if (!is_morphism(source, target, f) || !is_morphism(source, target, g)) {
      throw Error(ErrorCode::NotParallel, "morphisms do not share a target");
    }
    std::vector<Index> agree;
    for (Index x = 0; x < source.size(); ++x) {
      if (f(x) == g(x)) {
        agree.push_back(x);
      }
    }
    if (agree.empty()) {
      return std::nullopt;
    }
    return subact_on(source, agree);
  }

  FlatnessVerdict theta_flatness_verdict(MonoidPtr const&      monoid,
                                         FlatnessBounds const& bounds) {
    FlatnessVerdict v;
    auto const      op       = share(opposite(*monoid));
    auto const      left_reg = regular_act(op);
    std::vector<FiniteAct> square{left_reg, left_reg};
    v.left_square_indecomposable = is_indecomposable(product_act(square).act);
    v.left_zeros                 = left_zeros(*monoid);
    v.finitely_product_flat      = v.left_square_indecomposable;
    v.product_flat               = !v.left_zeros.empty();
    v.super_flat                 = v.product_flat;

    if (v.product_flat && !v.finitely_product_flat) {
      v.violations.push_back("left zero present but left S x S decomposable");
    }
    auto const regular_pair = product_comparison(square);
    ++v.pairs_checked;
    if (regular_pair.bijective() != v.left_square_indecomposable) {
      v.violations.push_back("comparison map on (S, S) disagrees with left S x S");
    }
    std::vector<FiniteAct> lefts;
    for (std::size_t m = 1; m <= bounds.act_size; ++m) {
      for (auto& a : enumerate_acts(op, m, true)) {
        lefts.push_back(std::move(a));
      }
    }
    for (std::size_t i = 0; i < lefts.size(); ++i) {
      for (std::size_t j = i; j < lefts.size(); ++j) {
        std::vector<FiniteAct> pair{lefts[i], lefts[j]};
        auto const             cmp = product_comparison(pair);
        ++v.pairs_checked;
        if (cmp.kind == ProductComparison::Kind::NotSurjective
            || (v.finitely_product_flat && !cmp.bijective())) {
          v.violations.push_back("left acts #" + std::to_string(i) + " and #"
                                 + std::to_string(j) + ": comparison map "
                                 + to_string(cmp.kind));
        }
      }
    }
    return v;
  }

}  // namespace acta
