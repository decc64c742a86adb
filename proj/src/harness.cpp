#include "acta/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "acta/decomposition.hpp"
#include "acta/error.hpp"
#include "acta/injectivity.hpp"
#include "acta/io.hpp"

namespace acta {

  using nlohmann::json;

  ////////////////////////////////////////////////////////////////////////
  // Monoid analysis and witness constructions
  ////////////////////////////////////////////////////////////////////////

  MonoidAnalysis analyze_monoid(MonoidPtr const& monoid, FlatnessBounds const& bounds) {
    MonoidAnalysis a;
    a.left_reversible        = is_left_reversible(*monoid).holds;
    a.right_reversible       = is_right_reversible(*monoid).holds;
    a.right_collapsible      = is_right_collapsible(*monoid).holds;
    a.left_zeros             = left_zeros(*monoid);
    a.right_zeros            = right_zeros(*monoid);
    a.s2_indecomposable      = power_act_indecomposable(monoid, 2);
    a.left_s2_indecomposable = power_act_indecomposable(share(opposite(*monoid)), 2);
    a.theta                  = theta_flatness_verdict(monoid, bounds);
    return a;
  }

  json analysis_to_json(FiniteMonoid const& monoid, MonoidAnalysis const& a) {
    auto names = [&](std::vector<Index> const& xs) {
      json out = json::array();
      for (Index x : xs) {
        out.push_back(monoid.name(x));
      }
      return out;
    };
    return json{{"order", monoid.order()},
                {"left_reversible", a.left_reversible},
                {"right_reversible", a.right_reversible},
                {"right_collapsible", a.right_collapsible},
                {"left_zeros", a.left_zeros},
                {"left_zero_names", names(a.left_zeros)},
                {"right_zeros", a.right_zeros},
                {"right_zero_names", names(a.right_zeros)},
                {"s2_indecomposable", a.s2_indecomposable},
                {"left_s2_indecomposable", a.left_s2_indecomposable},
                {"theta_flatness_verdict", io::verdict_to_json(a.theta)}};
  }

  namespace {
    bool ideals_disjoint(FiniteMonoid const& m, Index a, Index b) {
      std::vector<Index> sa{a}, sb{b};
      auto const         ia = right_ideal_generated(m, sa);
      auto const         ib = right_ideal_generated(m, sb);
      std::vector<Index> meet;
      std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                            std::back_inserter(meet));
      return meet.empty();
    }
  }  // namespace

  GluedChain construct_An(MonoidPtr const& monoid, std::size_t n, Index a, Index b) {
    if (n == 0) {
      throw Error(ErrorCode::ParamOutOfRange, "construct_An needs n >= 1");
    }
    if (a >= monoid->order() || b >= monoid->order()) {
      throw Error(ErrorCode::IndexOutOfRange, "construct_An element index");
    }
    if (!ideals_disjoint(*monoid, a, b)) {
      throw Error(ErrorCode::IdealsIntersect,
                  "aS and bS intersect for a=" + monoid->name(a) + ", b=" + monoid->name(b));
    }
    std::vector<FiniteAct> copies(n, regular_act(monoid));
    auto const             chain = coproduct_act(copies);
    std::vector<std::pair<Index, Index>> pairs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      pairs.emplace_back(chain.injections[i](a), chain.injections[i + 1](b));
    }
    auto       rho = congruence_closure(chain.act, pairs);
    auto       q   = quotient_act(chain.act, rho);
    GluedChain out{std::move(q.act), {}};
    for (std::size_t i = 0; i < n; ++i) {
      out.generators.push_back(q.projection(chain.injections[i](0)));
    }
    return out;
  }

  GluedChain construct_An(MonoidPtr const& monoid, std::size_t n) {
    auto const lr = is_left_reversible(*monoid);
    if (lr.holds) {
      throw Error(ErrorCode::IdealsIntersect, "monoid is left reversible");
    }
    return construct_An(monoid, n, lr.witness->first, lr.witness->second);
  }

  FiniteAct witness_two_zero_cyclic(MonoidPtr const& monoid) {
    auto const lr = is_left_reversible(*monoid);
    if (lr.holds) {
      throw Error(ErrorCode::LeftReversible, "every pair of right ideals meets");
    }
    auto const [a, b] = *lr.witness;
    std::vector<Index> sa{a}, sb{b};
    auto const         ia = right_ideal_generated(*monoid, sa);
    auto const         ib = right_ideal_generated(*monoid, sb);
    std::vector<Index> labels(monoid->order());
    for (Index x = 0; x < monoid->order(); ++x) {
      labels[x] = x;
    }
    for (Index x : ia) {
      labels[x] = ia.front();
    }
    for (Index x : ib) {
      labels[x] = ib.front();
    }
    auto const regular = regular_act(monoid);
    return quotient_act(regular, RightCongruence::from_labels(regular, labels)).act;
  }

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  std::vector<CensusRecord> census(std::size_t max_order, bool up_to_iso,
                                   bool allow_order_5, FlatnessBounds const& bounds) {
    std::vector<CensusRecord> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      std::vector<CensusRecord> level;
      for (auto& m : enumerate_monoids(n, up_to_iso, allow_order_5)) {
        auto ptr   = share(std::move(m));
        auto canon = canonical_form(*ptr);
        level.push_back({ptr, std::move(canon), analyze_monoid(ptr, bounds)});
      }
      std::stable_sort(level.begin(), level.end(), [](auto const& x, auto const& y) {
        return x.canonical < y.canonical;
      });
      for (auto& r : level) {
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Theorem harness
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string show(std::vector<Index> const& xs) {
      std::ostringstream os;
      os << "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        os << (i ? "," : "") << xs[i];
      }
      os << "}";
      return os.str();
    }

    class Context {
     public:
      Context(std::string suite, VerifyBounds const& bounds)
          : _rng(bounds.seed), _suite(std::move(suite)) {
        report.suite  = _suite;
        report.bounds = bounds;
        for (std::size_t n = 1; n <= bounds.max_order; ++n) {
          for (auto& m : enumerate_monoids(n, true, bounds.allow_order_5)) {
            monoids.push_back(share(std::move(m)));
          }
        }
        report.monoids_checked = monoids.size();
      }

      VerifyBounds const& bounds() const {
        return report.bounds;
      }

      void check(bool ok, std::string const& what, FiniteMonoid const& m,
                 FiniteAct const* act = nullptr, std::string const& detail = "") {
        ++report.checks;
        if (ok) {
          return;
        }
        report.pass = false;
        report.counterexamples.push_back(
            json{{"suite", _suite},
                 {"check", what},
                 {"monoid", io::monoid_to_json(m)},
                 {"act", act ? io::act_to_json(*act) : json(nullptr)},
                 {"detail", detail}});
      }

      void note(std::string text) {
        report.notes.push_back(std::move(text));
      }

      // Acts of sizes 1..max_act_size, cached per monoid.
      std::vector<FiniteAct> const& acts(MonoidPtr const& m, bool up_to_iso) {
        auto& cache = up_to_iso ? _iso_acts : _all_acts;
        auto  it    = cache.find(m.get());
        if (it != cache.end()) {
          return it->second;
        }
        std::vector<FiniteAct> out;
        for (std::size_t k = 1; k <= bounds().max_act_size; ++k) {
          for (auto& a : enumerate_acts(m, k, up_to_iso)) {
            out.push_back(std::move(a));
          }
        }
        return cache.emplace(m.get(), std::move(out)).first->second;
      }

      std::size_t pick(std::size_t n) {
        return static_cast<std::size_t>(_rng() % n);
      }

      std::vector<MonoidPtr> monoids;
      Report                 report;

     private:
      std::mt19937_64                                         _rng;
      std::string                                             _suite;
      std::map<FiniteMonoid const*, std::vector<FiniteAct>>   _iso_acts;
      std::map<FiniteMonoid const*, std::vector<FiniteAct>>   _all_acts;
    };

    bool is_cyclic(FiniteAct const& act) {
      for (Index x = 0; x < act.size(); ++x) {
        std::vector<Index> seed{x};
        if (subact_closure(act, seed).size() == act.size()) {
          return true;
        }
      }
      return false;
    }

    bool square_indecomposable(MonoidPtr const& m) {
      return power_act_indecomposable(m, 2);
    }

    // Left reversibility: two-step connectivity inside components and at
    // most one zero per indecomposable act; otherwise a cyclic act with two
    // zeros.
    void suite_pr1(Context& ctx) {
      for (auto const& m : ctx.monoids) {
        if (is_left_reversible(*m)) {
          for (auto const& act : ctx.acts(m, false)) {
            auto const d  = components(act);
            bool       ok = true;
            std::string detail;
            for (Index a = 0; a < act.size() && ok; ++a) {
              for (Index b = a + 1; b < act.size() && ok; ++b) {
                if (d.component_of[a] == d.component_of[b] && !two_step_connect(act, a, b)) {
                  ok     = false;
                  detail = "elements " + std::to_string(a) + " and " + std::to_string(b);
                }
              }
            }
            ctx.check(ok, "left reversible: one component implies as = bs'", *m, &act, detail);
            if (d.count == 1) {
              auto const zeros = zeros_of_act(act);
              ctx.check(zeros.size() <= 1, "left reversible: at most one zero", *m, &act,
                        "zeros " + show(zeros));
            }
          }
        } else {
          auto const w     = witness_two_zero_cyclic(m);
          auto const zeros = zeros_of_act(w);
          ctx.check(is_cyclic(w) && is_indecomposable(w) && zeros.size() >= 2,
                    "not left reversible: cyclic indecomposable act with two zeros", *m, &w,
                    "zeros " + show(zeros));
        }
      }
    }

    // Subacts of indecomposable acts stay indecomposable iff left reversible.
    void suite_pr2(Context& ctx) {
      for (auto const& m : ctx.monoids) {
        auto const lr = is_left_reversible(*m);
        if (lr.holds) {
          std::vector<FiniteAct> pool = ctx.acts(m, true);
          pool.push_back(regular_act(m));
          for (auto const& act : pool) {
            if (!is_indecomposable(act)) {
              continue;
            }
            for (auto const& sub : enumerate_subacts(act)) {
              auto const s = subact_on(act, sub);
              ctx.check(is_indecomposable(s.act),
                        "left reversible: subact of indecomposable is indecomposable", *m,
                        &act, "subact " + show(sub));
            }
          }
        } else {
          auto const           regular = regular_act(m);
          std::vector<Index>   seeds{lr.witness->first, lr.witness->second};
          auto const           sub = subact_generated(regular, seeds);
          ctx.check(!is_indecomposable(sub.act),
                    "not left reversible: aS u bS is a decomposable subact of S", *m,
                    &regular, "subact " + show(sub.elements));
        }
      }
    }

    // Cofree acts X^S with |X| >= 2 are decomposable iff left reversible.
    void suite_pr3(Context& ctx) {
      for (auto const& m : ctx.monoids) {
        bool const lr = is_left_reversible(*m).holds;
        ctx.check(is_indecomposable(cofree_act(m, 1)), "1-cofree act is indecomposable", *m);
        for (std::size_t k = 2; k <= 3; ++k) {
          auto const cofree = cofree_act(m, k);
          ctx.check(lr == !is_indecomposable(cofree),
                    "left reversible iff " + std::to_string(k) + "-cofree act decomposable", *m,
                    &cofree);
          // zeros are exactly the constant maps
          std::vector<Index> constants;
          for (std::size_t c = 0; c < k; ++c) {
            std::size_t code = 0;
            for (std::size_t t = 0; t < m->order(); ++t) {
              code = code * k + c;
            }
            constants.push_back(static_cast<Index>(code));
          }
          ctx.check(zeros_of_act(cofree) == constants, "cofree zeros are the constants", *m,
                    &cofree);
        }
      }
    }

    // Pushouts of indecomposable acts are indecomposable, and the computed
    // pushout has the universal property on sampled cocones.
    void suite_pr7(Context& ctx) {
      std::size_t instances = 0;
      std::size_t attempts  = 0;
      std::size_t cocones   = 0;
      std::size_t const wanted = ctx.bounds().samples;
      while (instances < wanted && attempts < wanted * 200) {
        ++attempts;
        auto const& m    = ctx.monoids[ctx.pick(ctx.monoids.size())];
        auto const& pool = ctx.acts(m, true);
        std::vector<FiniteAct const*> indecomposables;
        for (auto const& a : pool) {
          if (is_indecomposable(a)) {
            indecomposables.push_back(&a);
          }
        }
        auto const& x  = pool[ctx.pick(pool.size())];
        auto const& y1 = *indecomposables[ctx.pick(indecomposables.size())];
        auto const& y2 = *indecomposables[ctx.pick(indecomposables.size())];
        auto const  h1 = homomorphisms(x, y1);
        auto const  h2 = homomorphisms(x, y2);
        if (h1.empty() || h2.empty()) {
          continue;
        }
        ++instances;
        auto const& f1 = h1[ctx.pick(h1.size())];
        auto const& f2 = h2[ctx.pick(h2.size())];
        auto const  po = pushout(x, y1, y2, f1, f2);
        ctx.check(is_morphism(y1, po.act, po.q1) && is_morphism(y2, po.act, po.q2)
                      && compose(po.q1, f1) == compose(po.q2, f2),
                  "pushout square commutes", *m, &po.act);
        ctx.check(is_indecomposable(po.act), "pushout of indecomposables is indecomposable",
                  *m, &po.act);
        if (is_injective(f1, y1.size()) && is_injective(f2, y2.size())) {
          auto const am = amalgamated_coproduct(x, y1, y2, f1, f2);
          ctx.check(is_indecomposable(am.act),
                    "amalgamated coproduct of indecomposables is indecomposable", *m, &am.act);
        }
        // Universal property against Theta and two sampled targets.
        std::vector<FiniteAct> targets{zero_act(m), pool[ctx.pick(pool.size())],
                                       pool[ctx.pick(pool.size())]};
        for (auto const& t : targets) {
          auto const from_q  = homomorphisms(po.act, t);
          auto const from_y1 = homomorphisms(y1, t);
          auto const from_y2 = homomorphisms(y2, t);
          for (auto const& g1 : from_y1) {
            auto const g1f1 = compose(g1, f1);
            for (auto const& g2 : from_y2) {
              if (compose(g2, f2) != g1f1) {
                continue;
              }
              ++cocones;
              std::size_t mediating = 0;
              for (auto const& h : from_q) {
                if (compose(h, po.q1) == g1 && compose(h, po.q2) == g2) {
                  ++mediating;
                }
              }
              ctx.check(mediating == 1, "pushout universal property", *m, &po.act,
                        std::to_string(mediating) + " mediating morphisms");
            }
          }
        }
      }
      ctx.check(instances >= wanted, "enough pushout instances sampled",
                *ctx.monoids.front(), nullptr,
                std::to_string(instances) + " of " + std::to_string(wanted));
      ctx.note(std::to_string(instances) + " pushout instances, " + std::to_string(cocones)
               + " cocones checked");
    }

    // S^2, S^3 and finite products of indecomposable / cyclic acts.
    void suite_th1(Context& ctx) {
      for (auto const& m : ctx.monoids) {
        bool const s2 = square_indecomposable(m);
        bool const s3 = power_act_indecomposable(m, 3);
        ctx.check(s2 == s3, "S^2 indecomposable iff S^3 indecomposable", *m);

        std::vector<FiniteAct const*> indecomposables;
        for (auto const& a : ctx.acts(m, true)) {
          if (is_indecomposable(a)) {
            indecomposables.push_back(&a);
          }
        }
        bool products_ok = true;
        for (std::size_t i = 0; i < indecomposables.size() && products_ok; ++i) {
          for (std::size_t j = i; j < indecomposables.size() && products_ok; ++j) {
            std::vector<FiniteAct> pair{*indecomposables[i], *indecomposables[j]};
            products_ok = is_indecomposable(product_act(pair).act);
          }
        }
        if (s2) {
          ctx.check(products_ok, "S^2 indecomposable: products of indecomposables are", *m);
        }

        auto const             regular = regular_act(m);
        std::vector<FiniteAct> cyclic;
        for (auto const& rho : enumerate_right_congruences(regular)) {
          cyclic.push_back(quotient_act(regular, rho).act);
        }
        bool cyclic_ok = true;
        for (std::size_t i = 0; i < cyclic.size() && cyclic_ok; ++i) {
          for (std::size_t j = i; j < cyclic.size() && cyclic_ok; ++j) {
            std::vector<FiniteAct> pair{cyclic[i], cyclic[j]};
            cyclic_ok = is_indecomposable(product_act(pair).act);
          }
        }
        ctx.check(cyclic_ok == s2, "products of cyclic acts indecomposable iff S^2 is", *m);

        std::vector<FiniteAct> square{regular, regular};
        ctx.check(product_comparison(square).bijective() == s2,
                  "left Theta finitely product flat iff S^2 indecomposable", *m);
      }
    }

    // Glued chains: shortest connecting scheme grows linearly; left
    // reversible monoids connect within two steps.
    void suite_pr4(Context& ctx) {
      auto const lz = share(left_zero_adjoined(2));
      for (std::size_t n = 2; n <= 5; ++n) {
        auto const chain  = construct_An(lz, n, 1, 2);
        auto const scheme = shortest_scheme(chain.act, chain.generators.front(),
                                            chain.generators.back());
        ctx.check(is_indecomposable(chain.act), "A_n indecomposable", *lz, &chain.act);
        ctx.check(scheme && scheme->length() == n && scheme_error(chain.act, *scheme).empty(),
                  "A_n shortest scheme has length n (n=" + std::to_string(n) + ")", *lz,
                  &chain.act,
                  scheme ? "length " + std::to_string(scheme->length()) : "not connected");
      }
      for (auto const& m : ctx.monoids) {
        if (!is_left_reversible(*m)) {
          for (std::size_t n = 2; n <= 4; ++n) {
            auto const chain  = construct_An(m, n);
            auto const scheme = shortest_scheme(chain.act, chain.generators.front(),
                                                chain.generators.back());
            ctx.check(is_indecomposable(chain.act) && scheme && scheme->length() == n,
                      "A_n shortest scheme has length n (n=" + std::to_string(n) + ")", *m,
                      &chain.act);
          }
          continue;
        }
        for (auto const& act : ctx.acts(m, true)) {
          if (!is_indecomposable(act)) {
            continue;
          }
          std::size_t longest = 0;
          for (Index a = 0; a < act.size(); ++a) {
            for (Index b = 0; b < act.size(); ++b) {
              longest = std::max(longest, shortest_scheme(act, a, b)->length());
            }
          }
          ctx.check(longest <= 2, "left reversible: schemes of length 2 suffice", *m, &act,
                    "longest " + std::to_string(longest));
        }
      }
    }

    // Products of indecomposable acts: the finite equivalents.
    void suite_pr5(Context& ctx) {
      for (auto const& m : ctx.monoids) {
        bool const lr = is_left_reversible(*m).holds;
        bool const s2 = square_indecomposable(m);
        bool const rz = !right_zeros(*m).empty();
        ctx.check(rz == (lr && s2), "right zero iff left reversible and S^2 indecomposable",
                  *m);
        ctx.check(lr == !is_indecomposable(cofree_act(m, 2)),
                  "left reversible iff nonzero cofree acts decomposable", *m);
        if (is_commutative(*m)) {
          ctx.check(lr, "commutative monoids are left reversible", *m);
          ctx.check(rz == s2, "commutative: products preserved iff S^2 indecomposable", *m);
        }
        // S^(S x S) directly, where it fits.
        std::size_t const n    = m->order();
        std::size_t       size = 1;
        bool              fits = true;
        for (std::size_t i = 0; i < n * n && fits; ++i) {
          size *= n;
          fits = size <= 100'000;
        }
        if (fits) {
          ctx.check(power_act_indecomposable(m, n * n) == s2,
                    "S^(S x S) indecomposable iff S x S is", *m);
        }
        if (lr && s2) {
          std::vector<FiniteAct const*> indecomposables;
          for (auto const& a : ctx.acts(m, true)) {
            if (is_indecomposable(a) && a.size() <= 2) {
              indecomposables.push_back(&a);
            }
          }
          for (auto const* a : indecomposables) {
            for (auto const* b : indecomposables) {
              for (auto const* c : indecomposables) {
                std::vector<FiniteAct> triple{*a, *b, *c};
                auto const             p = product_act(triple).act;
                ctx.check(is_indecomposable(p), "right zero: triple products indecomposable",
                          *m, &p);
              }
            }
          }
        }
      }
    }

    void suite_co6(Context& ctx) {
      for (auto const& m : ctx.monoids) {
        bool const lr = is_left_reversible(*m).holds;
        bool const s2 = square_indecomposable(m);
        bool const rc = is_right_collapsible(*m).holds;
        ctx.check(rc == (lr && s2),
                  "right collapsible iff left reversible and S^2 indecomposable", *m);
        ctx.check(!rc || lr, "right collapsible implies left reversible", *m);
        if (lr) {
          ctx.check(s2 == rc, "left reversible: S^2 indecomposable iff right collapsible", *m);
        }
      }
    }

    void suite_th2(Context& ctx) {
      for (auto const& m : ctx.monoids) {
        bool const lr = is_left_reversible(*m).holds;
        bool const s2 = square_indecomposable(m);
        bool const rz = !right_zeros(*m).empty();
        ctx.check(rz == (lr && s2), "right zero iff left reversible and S^2 indecomposable",
                  *m);
        ctx.check(!rz || lr, "right zero implies left reversible", *m);
        auto const op  = share(opposite(*m));
        bool const lz  = !left_zeros(*m).empty();
        bool const rr  = is_left_reversible(*op).holds;
        bool const ls2 = square_indecomposable(op);
        ctx.check(lz == (rr && ls2),
                  "left zero iff right reversible and left S^2 indecomposable", *m);
      }
    }

    void suite_ex1(Context& ctx) {
      for (unsigned n = 2; n <= 3; ++n) {
        auto const tn = share(full_transformation(n));
        auto const a  = analyze_monoid(tn, FlatnessBounds{1});
        std::vector<Index> constants;
        for (Index i = 0; i < n; ++i) {
          std::vector<Index> values(n, i);
          constants.push_back(transformation_index(values));
        }
        std::sort(constants.begin(), constants.end());
        ctx.check(a.s2_indecomposable, "T_n x T_n indecomposable", *tn);
        ctx.check(!a.left_reversible, "T_n not left reversible", *tn);
        ctx.check(a.right_zeros.empty(), "T_n has no right zero", *tn);
        ctx.check(a.left_zeros == constants, "left zeros of T_n are the constants", *tn);

        std::size_t const order = tn->order();
        auto const        sq    = power_act(tn, 2);
        auto const        pair  = [&](Index x, Index y) {
          return static_cast<Index>(x * order + y);
        };
        Index const c1 = constants.front();
        bool        translate_ok = true;
        for (Index x = 0; x < order; ++x) {
          for (Index y = 0; y < order; ++y) {
            Index const cx = tn->product(x, c1);
            Index const cy = tn->product(y, c1);
            translate_ok   = translate_ok && sq.act(pair(x, y), c1) == pair(cx, cy)
                           && std::binary_search(constants.begin(), constants.end(), cx)
                           && std::binary_search(constants.begin(), constants.end(), cy);
          }
        }
        ctx.check(translate_ok, "(alpha, beta) c_1 is a pair of constants", *tn);
        for (Index ci : constants) {
          for (Index cj : constants) {
            Scheme s{pair(c1, c1), pair(ci, cj),
                     {{pair(0, c1), c1, ci}, {pair(ci, c1), 0, 0}, {pair(ci, 0), c1, cj}}};
            ctx.check(scheme_error(sq, s).empty(),
                      "explicit scheme from (c_1, c_1) to (c_i, c_j)", *tn, nullptr,
                      scheme_error(sq, s));
          }
        }
      }
      for (unsigned k = 2; k <= 4; ++k) {
        auto const g = share(cyclic_group(k));
        ctx.check(is_left_reversible(*g).holds && right_zeros(*g).empty()
                      && !square_indecomposable(g),
                  "nontrivial finite group: left reversible, no right zero, S^2 decomposable",
                  *g);
      }
      // Computed status of the pair (1, a), (a, 1) in S x S for the left zero
      // semigroup with identity adjoined.
      auto const lz  = share(left_zero_adjoined(2));
      auto const sq  = power_act(lz, 2);
      auto const sch = shortest_scheme(sq, 0 * 3 + 1, 1 * 3 + 0);
      ctx.note(std::string("LZ2 with identity: (1,a) and (a,1) in S x S are ")
               + (sch ? "connected by a scheme of length " + std::to_string(sch->length())
                      : "not connected"));
    }

    void suite_baer(Context& ctx) {
      std::size_t rel_without_zero_lr = 0;
      for (auto const& m : ctx.monoids) {
        bool const lr = is_left_reversible(*m).holds;
        for (auto const& q : ctx.acts(m, true)) {
          auto const rel      = is_injective_rel_cyclic(q);
          bool const has_zero = !zeros_of_act(q).empty();
          ctx.check(!is_injective(q) || rel.holds, "injective implies relatively injective",
                    *m, &q);
          if (!lr) {
            ctx.check(!rel.holds || has_zero,
                      "not left reversible: relatively injective acts have a zero", *m, &q,
                      std::to_string(rel.extensions_checked) + " extensions checked");
          } else if (rel.holds && !has_zero) {
            ++rel_without_zero_lr;
          }
        }
      }
      ctx.note("evidence only: " + std::to_string(rel_without_zero_lr)
               + " acts over left reversible monoids are injective relative to cyclic "
                 "inclusions but have no zero");
    }

    void suite_flat(Context& ctx) {
      for (auto const& m : ctx.monoids) {
        auto const op = share(opposite(*m));
        if (m->order() <= 3) {
          for (auto const& b : ctx.acts(op, true)) {
            auto const tt = theta_tensor(b);
            ctx.check(tt.bijective && tt.tensor.classes == components(b).count,
                      "Theta (x) B classes match components of B", *m, &b);
            auto const unit = tensor_product(regular_act(m), b);
            ctx.check(unit.classes == b.size(), "S (x) B has |B| classes", *m, &b);
          }
        }
        auto const             left_reg = regular_act(op);
        std::vector<FiniteAct> square{left_reg, left_reg};
        ctx.check(product_comparison(square).bijective() == square_indecomposable(op),
                  "comparison map on left S x S bijective iff left S x S indecomposable", *m);
        auto const verdict = theta_flatness_verdict(m, FlatnessBounds{2});
        std::string joined;
        for (auto const& v : verdict.violations) {
          joined += v + "; ";
        }
        ctx.check(verdict.violations.empty(), "flatness evidence sweep", *m, nullptr, joined);
        ctx.check(!verdict.product_flat || verdict.finitely_product_flat,
                  "product flat implies finitely product flat", *m);
      }
    }

    using SuiteFn = void (*)(Context&);

    std::vector<std::pair<std::string, SuiteFn>> const& suites() {
      static std::vector<std::pair<std::string, SuiteFn>> const table{
          {"pr1", suite_pr1}, {"pr2", suite_pr2}, {"pr3", suite_pr3},
          {"pr7", suite_pr7}, {"th1", suite_th1}, {"pr4", suite_pr4},
          {"pr5", suite_pr5}, {"co6", suite_co6}, {"th2", suite_th2},
          {"ex1", suite_ex1}, {"baer", suite_baer}, {"flat", suite_flat}};
      return table;
    }

    std::string canonical_id(std::string_view id) {
      static std::map<std::string, std::string, std::less<>> const aliases{
          {"co3", "pr7"},        {"co5", "pr5"},      {"le6", "co6"},
          {"th2-finite", "th2"}, {"pr8-baer", "baer"}, {"pr8-flat", "flat"}};
      auto it = aliases.find(id);
      return it == aliases.end() ? std::string(id) : it->second;
    }

    void check_bounds(VerifyBounds const& b) {
      if (b.max_order == 0 || b.max_order > 5 || (b.max_order == 5 && !b.allow_order_5)) {
        throw Error(ErrorCode::BoundsTooLarge,
                    "max_order must be in 1..4 (5 with the explicit opt-in)");
      }
      if (b.max_act_size == 0 || b.max_act_size > 3) {
        throw Error(ErrorCode::BoundsTooLarge, "max_act_size must be in 1..3");
      }
      if (b.samples == 0 || b.samples > 100'000) {
        throw Error(ErrorCode::BoundsTooLarge, "samples must be in 1..100000");
      }
    }

  }  // namespace

  std::vector<std::string> const& theorem_ids() {
    static std::vector<std::string> const ids = [] {
      std::vector<std::string> out{"all"};
      for (auto const& [id, fn] : suites()) {
        out.push_back(id);
      }
      return out;
    }();
    return ids;
  }

  Report verify_theorem(std::string_view raw_id, VerifyBounds const& bounds) {
    std::string const id = canonical_id(raw_id);
    auto const        it = std::find_if(suites().begin(), suites().end(),
                                        [&](auto const& s) { return s.first == id; });
    if (id != "all" && it == suites().end()) {
      throw Error(ErrorCode::UnknownTheorem, std::string(raw_id));
    }
    check_bounds(bounds);
    auto const start = std::chrono::steady_clock::now();
    Report     report;
    if (id == "all") {
      report.suite  = "all";
      report.bounds = bounds;
      for (auto const& [sub_id, fn] : suites()) {
        report.parts.push_back(verify_theorem(sub_id, bounds));
        auto const& part = report.parts.back();
        report.pass      = report.pass && part.pass;
        report.checks += part.checks;
        report.monoids_checked = std::max(report.monoids_checked, part.monoids_checked);
        report.counterexamples.insert(report.counterexamples.end(),
                                      part.counterexamples.begin(),
                                      part.counterexamples.end());
      }
    } else {
      Context ctx(id, bounds);
      it->second(ctx);
      report = std::move(ctx.report);
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }

  json report_to_json(Report const& r, bool with_timing) {
    json j{{"suite", r.suite},
           {"bounds",
            {{"max_order", r.bounds.max_order},
             {"max_act_size", r.bounds.max_act_size},
             {"samples", r.bounds.samples},
             {"allow_order_5", r.bounds.allow_order_5}}},
           {"seed", r.bounds.seed},
           {"status", r.pass ? "PASS" : "FAIL"},
           {"monoids_checked", r.monoids_checked},
           {"checks", r.checks},
           {"counterexamples", r.counterexamples},
           {"notes", r.notes},
           {"elapsed_ms", with_timing ? r.elapsed_ms : 0}};
    if (!r.parts.empty()) {
      json parts = json::array();
      for (auto const& p : r.parts) {
        parts.push_back(report_to_json(p, with_timing));
      }
      j["suites"] = std::move(parts);
    }
    return j;
  }

}  // namespace acta
