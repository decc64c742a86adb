#include "acta/decomposition.hpp"

#include <algorithm>
#include <deque>

#include "acta/error.hpp"
#include "acta/union_find.hpp"

namespace acta {

  std::vector<std::vector<Index>> Decomposition::blocks() const {
    std::vector<std::vector<Index>> out(count);
    for (std::size_t x = 0; x < component_of.size(); ++x) {
      out[component_of[x]].push_back(static_cast<Index>(x));
    }
    return out;
  }

  Decomposition components(FiniteAct const& act) {
    UnionFind uf(act.size());
    for (Index x = 0; x < act.size(); ++x) {
      for (Index s = 1; s < act.monoid().order(); ++s) {
        uf.unite(x, act.act(x, s));
      }
    }
    Decomposition d;
    d.count        = uf.set_count();
    d.component_of = uf.labels<Index>();
    return d;
  }

  bool is_indecomposable(FiniteAct const& act) {
    return components(act).count == 1;
  }

  std::string scheme_error(FiniteAct const& act, Scheme const& scheme) {
    auto const in_range = [&](Index x) { return x < act.size(); };
    auto const s_range  = [&](Index s) { return s < act.monoid().order(); };
    if (!in_range(scheme.from) || !in_range(scheme.to)) {
      return "endpoint out of range";
    }
    if (scheme.steps.empty()) {
      return scheme.from == scheme.to ? "" : "empty scheme between distinct elements";
    }
    for (std::size_t i = 0; i < scheme.steps.size(); ++i) {
      auto const& st = scheme.steps[i];
      if (!in_range(st.element) || !s_range(st.left) || !s_range(st.right)) {
        return "step " + std::to_string(i + 1) + " has an index out of range";
      }
    }
    auto const& first = scheme.steps.front();
    if (act.act(first.element, first.left) != scheme.from) {
      return "a != a_1 s_1";
    }
    for (std::size_t i = 0; i + 1 < scheme.steps.size(); ++i) {
      auto const& cur  = scheme.steps[i];
      auto const& next = scheme.steps[i + 1];
      if (act.act(cur.element, cur.right) != act.act(next.element, next.left)) {
        return "a_" + std::to_string(i + 1) + " t_" + std::to_string(i + 1)
               + " != a_" + std::to_string(i + 2) + " s_" + std::to_string(i + 2);
      }
    }
    auto const& last = scheme.steps.back();
    if (act.act(last.element, last.right) != scheme.to) {
      return "a_n t_n != b";
    }
    return "";
  }

  std::optional<Scheme> shortest_scheme(FiniteAct const& act, Index a, Index b) {
    std::size_t const m = act.size();
    std::size_t const n = act.monoid().order();
    if (a >= m || b >= m) {
      throw Error(ErrorCode::IndexOutOfRange, "scheme endpoint");
    }
    Scheme scheme{a, b, {}};
    if (a == b) {
      return scheme;
    }
    // preimages[x]: pairs (z, s) with z.s = x.
    std::vector<std::vector<std::pair<Index, Index>>> preimages(m);
    for (Index z = 0; z < m; ++z) {
      for (Index s = 0; s < n; ++s) {
        preimages[act.act(z, s)].emplace_back(z, s);
      }
    }
    constexpr Index         kUnseen = static_cast<Index>(-1);
    std::vector<Index>      parent(m, kUnseen);
    std::vector<SchemeStep> via(m);
    std::vector<bool>       z_done(m, false);
    std::deque<Index>       queue{a};
    parent[a] = a;
    while (!queue.empty() && parent[b] == kUnseen) {
      Index const x = queue.front();
      queue.pop_front();
      for (auto const& [z, s] : preimages[x]) {
        // Every y in z.S is one step from x; z.S reached from an earlier
        // vertex has already been fully labelled.
        if (z_done[z]) {
          continue;
        }
        z_done[z] = true;
        for (Index t = 0; t < n; ++t) {
          Index const y = act.act(z, t);
          if (parent[y] == kUnseen) {
            parent[y] = x;
            via[y]    = SchemeStep{z, s, t};
            queue.push_back(y);
          }
        }
      }
    }
    if (parent[b] == kUnseen) {
      return std::nullopt;
    }
    for (Index y = b; y != a; y = parent[y]) {
      scheme.steps.push_back(via[y]);
    }
    std::reverse(scheme.steps.begin(), scheme.steps.end());
    return scheme;
  }

  std::optional<std::pair<Index, Index>> two_step_connect(FiniteAct const& act,
                                                          Index a, Index b) {
    if (a >= act.size() || b >= act.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "two_step_connect endpoint");
    }
    std::size_t const n = act.monoid().order();
    for (Index s = 0; s < n; ++s) {
      for (Index t = 0; t < n; ++t) {
        if (act.act(a, s) == act.act(b, t)) {
          return std::make_pair(s, t);
        }
      }
    }
    return std::nullopt;
  }

  bool power_act_indecomposable(MonoidPtr const& monoid, std::size_t k,
                                std::size_t cap) {
    return is_indecomposable(power_act(monoid, k, cap));
  }

}  // namespace acta
