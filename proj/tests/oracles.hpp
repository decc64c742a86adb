// Brute-force reference implementations used only by the tests. They work on
// raw tables and share no code with the library beyond the Index type.
#ifndef ACTA_TESTS_ORACLES_HPP_
#define ACTA_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "acta/monoid.hpp"

namespace oracle {

  using acta::Index;
  using Table = std::vector<std::vector<Index>>;

  inline bool is_monoid(Table const& t) {
    std::size_t const n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
      if (t[0][x] != x || t[x][0] != x) {
        return false;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (t[t[i][j]][k] != t[i][t[j][k]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every table with identity at 0, by counting through all n^((n-1)^2)
  // fillings of the free cells.
  inline std::vector<Table> all_monoids(std::size_t n) {
    std::vector<Table> out;
    std::size_t const  free = (n - 1) * (n - 1);
    std::vector<Index> digits(free, 0);
    while (true) {
      Table t(n, std::vector<Index>(n));
      for (std::size_t x = 0; x < n; ++x) {
        t[0][x] = t[x][0] = static_cast<Index>(x);
      }
      for (std::size_t c = 0; c < free; ++c) {
        t[1 + c / (n - 1)][1 + c % (n - 1)] = digits[c];
      }
      if (is_monoid(t)) {
        out.push_back(t);
      }
      std::size_t c = free;
      while (c > 0 && ++digits[c - 1] == n) {
        digits[--c] = 0;
      }
      if (c == 0) {
        break;
      }
    }
    return out;
  }

  inline Table permute(Table const& t, std::vector<Index> const& p) {
    Table out(t.size(), std::vector<Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        out[p[i]][p[j]] = p[t[i][j]];
      }
    }
    return out;
  }

  inline void for_each_perm_fixing_zero(std::size_t n,
                                        std::function<void(std::vector<Index> const&)> f) {
    std::vector<Index> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      f(p);
    } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
  }

  inline bool isomorphic(Table const& a, Table const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    bool found = false;
    for_each_perm_fixing_zero(a.size(), [&](auto const& p) {
      found = found || permute(a, p) == b;
    });
    return found;
  }

  inline std::size_t automorphisms(Table const& t) {
    std::size_t count = 0;
    for_each_perm_fixing_zero(t.size(), [&](auto const& p) {
      count += permute(t, p) == t;
    });
    return count;
  }

  inline std::set<Index> right_ideal(Table const& t, Index a) {
    std::set<Index> out;
    for (std::size_t s = 0; s < t.size(); ++s) {
      out.insert(t[a][s]);
    }
    return out;
  }

  inline bool left_reversible(Table const& t) {
    for (Index a = 0; a < t.size(); ++a) {
      for (Index b = 0; b < t.size(); ++b) {
        auto const ia = right_ideal(t, a), ib = right_ideal(t, b);
        std::vector<Index> meet;
        std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                              std::back_inserter(meet));
        if (meet.empty()) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Acts, given as action[x][s]
  ////////////////////////////////////////////////////////////////////////

  inline bool is_act(Table const& m, Table const& a) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (a[x][0] != x) {
        return false;
      }
      for (std::size_t s = 0; s < m.size(); ++s) {
        for (std::size_t t = 0; t < m.size(); ++t) {
          if (a[a[x][s]][t] != a[x][m[s][t]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Component labels by breadth-first search on the undirected graph with
  // edges x -- x.s, labelled by least member.
  inline std::vector<Index> components_bfs(Table const& a) {
    std::size_t const n = a.size();
    std::vector<std::vector<Index>> adj(n);
    for (Index x = 0; x < n; ++x) {
      for (Index y : a[x]) {
        adj[x].push_back(y);
        adj[y].push_back(x);
      }
    }
    std::vector<Index> label(n, static_cast<Index>(n));
    for (Index start = 0; start < n; ++start) {
      if (label[start] != n) {
        continue;
      }
      std::queue<Index> q;
      q.push(start);
      label[start] = start;
      while (!q.empty()) {
        Index const x = q.front();
        q.pop();
        for (Index y : adj[x]) {
          if (label[y] == n) {
            label[y] = start;
            q.push(y);
          }
        }
      }
    }
    return label;
  }

  // Same labels through the reflexive-transitive closure of the symmetric
  // edge relation (Warshall).
  inline std::vector<Index> components_closure(Table const& a) {
    std::size_t const              n = a.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (Index x = 0; x < n; ++x) {
      r[x][x] = true;
      for (Index y : a[x]) {
        r[x][y] = r[y][x] = true;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (r[i][k] && r[k][j]) {
            r[i][j] = true;
          }
        }
      }
    }
    std::vector<Index> label(n);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y <= x; ++y) {
        if (r[x][y]) {
          label[x] = y;
          break;
        }
      }
    }
    return label;
  }

  // Distances in the step relation x => y iff x = z.s and y = z.t.
  inline std::vector<std::size_t> scheme_distances(Table const& a, Index from) {
    std::size_t const              n = a.size();
    std::vector<std::vector<bool>> step(n, std::vector<bool>(n, false));
    for (std::size_t z = 0; z < n; ++z) {
      for (Index x : a[z]) {
        for (Index y : a[z]) {
          step[x][y] = true;
        }
      }
    }
    std::size_t const        inf = SIZE_MAX;
    std::vector<std::size_t> d(n, inf);
    std::queue<Index>        q;
    d[from] = 0;
    q.push(from);
    while (!q.empty()) {
      Index const x = q.front();
      q.pop();
      for (Index y = 0; y < n; ++y) {
        if (step[x][y] && d[y] == inf) {
          d[y] = d[x] + 1;
          q.push(y);
        }
      }
    }
    return d;
  }

  // Every set partition of {0..n-1} as restricted growth labels.
  inline void for_each_partition(std::size_t n,
                                 std::function<void(std::vector<Index> const&)> f) {
    std::vector<Index> rgs(n, 0);
    std::function<void(std::size_t, Index)> rec = [&](std::size_t i, Index used) {
      if (i == n) {
        f(rgs);
        return;
      }
      for (Index b = 0; b <= used && b < n; ++b) {
        rgs[i] = b;
        rec(i + 1, std::max<Index>(used, b + 1));
      }
    };
    if (n == 0) {
      f(rgs);
    } else {
      rgs[0] = 0;
      rec(1, 1);
    }
  }

  inline bool is_right_congruence(Table const& a, std::vector<Index> const& label) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < a.size(); ++y) {
        if (label[x] != label[y]) {
          continue;
        }
        for (std::size_t s = 0; s < a[x].size(); ++s) {
          if (label[a[x][s]] != label[a[y][s]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Least right congruence containing the pairs: intersection of all
  // right congruences that contain them. Returned as a relation matrix.
  inline std::vector<std::vector<bool>> congruence_meet(
      Table const& a, std::vector<std::pair<Index, Index>> const& pairs) {
    std::size_t const              n = a.size();
    std::vector<std::vector<bool>> meet(n, std::vector<bool>(n, true));
    for_each_partition(n, [&](std::vector<Index> const& label) {
      for (auto const& [x, y] : pairs) {
        if (label[x] != label[y]) {
          return;
        }
      }
      if (!is_right_congruence(a, label)) {
        return;
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          meet[x][y] = meet[x][y] && label[x] == label[y];
        }
      }
    });
    return meet;
  }

  // Nonempty closed subsets, by checking every subset.
  inline std::vector<std::vector<Index>> subacts(Table const& a) {
    std::vector<std::vector<Index>> out;
    std::size_t const               n = a.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      bool closed = true;
      for (std::size_t x = 0; x < n && closed; ++x) {
        if (mask >> x & 1) {
          for (Index y : a[x]) {
            closed = closed && (mask >> y & 1);
          }
        }
      }
      if (closed) {
        std::vector<Index> s;
        for (Index x = 0; x < n; ++x) {
          if (mask >> x & 1) {
            s.push_back(x);
          }
        }
        out.push_back(s);
      }
    }
    return out;
  }

  // Every map source -> target commuting with the action, by trying all
  // |target|^|source| maps.
  inline std::vector<std::vector<Index>> morphisms(Table const& src, Table const& tgt) {
    std::vector<std::vector<Index>> out;
    std::size_t const               n = src.size(), k = tgt.size();
    std::vector<Index>              f(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        for (std::size_t s = 0; s < src[x].size() && ok; ++s) {
          ok = f[src[x][s]] == tgt[f[x]][s];
        }
      }
      if (ok) {
        out.push_back(f);
      }
      std::size_t i = n;
      while (i > 0 && ++f[i - 1] == k) {
        f[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

  // A (x) B as the equivalence on A x B generated by (a.s, b) ~ (a, s.b),
  // computed as a reflexive-transitive closure. left[b][s] is s.b.
  inline std::size_t tensor_classes(Table const& right, Table const& left,
                                    std::size_t monoid_order) {
    std::size_t const              na = right.size(), nb = left.size(), n = na * nb;
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      r[i][i] = true;
    }
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < nb; ++b) {
        for (std::size_t s = 0; s < monoid_order; ++s) {
          std::size_t const u = right[a][s] * nb + b, v = a * nb + left[b][s];
          r[u][v] = r[v][u] = true;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (r[i][k]) {
          for (std::size_t j = 0; j < n; ++j) {
            if (r[k][j]) {
              r[i][j] = true;
            }
          }
        }
      }
    }
    std::size_t classes = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool first = true;
      for (std::size_t j = 0; j < i && first; ++j) {
        first = !r[i][j];
      }
      classes += first;
    }
    return classes;
  }

  // Regular act of m modulo the right congruence generated by random pairs.
  inline Table random_quotient_of_regular(Table const& m, std::mt19937_64& rng,
                                          std::size_t merges) {
    std::size_t const  n = m.size();
    std::vector<Index> label(n);
    std::iota(label.begin(), label.end(), 0);
    auto find = [&](Index x) {
      while (label[x] != x) {
        x = label[x];
      }
      return x;
    };
    std::vector<std::pair<Index, Index>> work;
    for (std::size_t i = 0; i < merges; ++i) {
      work.emplace_back(static_cast<Index>(rng() % n), static_cast<Index>(rng() % n));
    }
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      Index const rx = find(x), ry = find(y);
      if (rx == ry) {
        continue;
      }
      label[std::max(rx, ry)] = std::min(rx, ry);
      for (std::size_t s = 0; s < n; ++s) {
        work.emplace_back(m[x][s], m[y][s]);
      }
    }
    std::vector<Index> dense(n, static_cast<Index>(n));
    Index              next = 0;
    for (Index x = 0; x < n; ++x) {
      Index const r = find(x);
      if (dense[r] == n) {
        dense[r] = next++;
      }
    }
    Table out(next, std::vector<Index>(n));
    for (Index x = 0; x < n; ++x) {
      for (std::size_t s = 0; s < n; ++s) {
        out[dense[find(x)]][s] = dense[find(m[x][s])];
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // ACTA_TESTS_ORACLES_HPP_
