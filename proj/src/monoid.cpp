#include "acta/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "acta/error.hpp"

namespace acta {

  namespace {

    std::string triple(std::size_t i, std::size_t j, std::size_t k) {
      std::ostringstream os;
      os << "(" << i << "," << j << "," << k << ")";
      return os.str();
    }

    std::vector<Index> flatten(Table const& raw, std::size_t n) {
      std::vector<Index> flat;
      flat.reserve(n * n);
      for (auto const& row : raw) {
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return flat;
    }

    std::size_t ipow(std::size_t base, std::size_t exp) {
      std::size_t r = 1;
      while (exp-- > 0) {
        r *= base;
      }
      return r;
    }

    // Lexicographic rank of a value table over {0..n-1}.
    std::size_t lex_rank(std::span<Index const> values) {
      std::size_t r = 0;
      for (Index v : values) {
        r = r * values.size() + v;
      }
      return r;
    }

    std::size_t identity_rank(std::size_t n) {
      std::vector<Index> id(n);
      std::iota(id.begin(), id.end(), Index(0));
      return lex_rank(id);
    }

    bool next_permutation_fixing_zero(std::vector<Index>& perm) {
      return std::next_permutation(perm.begin() + 1, perm.end());
    }

    std::vector<Index> relabel_flat(FiniteMonoid const&   m,
                                    std::span<Index const> perm) {
      std::size_t const  n = m.order();
      std::vector<Index> inv(n);
      for (std::size_t i = 0; i < n; ++i) {
        inv[perm[i]] = static_cast<Index>(i);
      }
      std::vector<Index> out(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out[i * n + j] = perm[m.product(inv[i], inv[j])];
        }
      }
      return out;
    }

    Table to_rows(std::vector<Index> const& flat, std::size_t n) {
      Table t(n, std::vector<Index>(n));
      for (std::size_t i = 0; i < n; ++i) {
        std::copy_n(flat.begin() + i * n, n, t[i].begin());
      }
      return t;
    }

  }  // namespace

  std::vector<std::string> default_element_names(std::size_t order) {
    std::vector<std::string> names;
    names.reserve(order);
    names.emplace_back("1");
    for (std::size_t i = 1; i < order; ++i) {
      if (order <= 27) {
        names.emplace_back(1, static_cast<char>('a' + i - 1));
      } else {
        names.push_back("e" + std::to_string(i));
      }
    }
    return names;
  }

  FiniteMonoid FiniteMonoid::validate(Table const&             raw,
                                      std::vector<std::string> names) {
    std::size_t const n = raw.size();
    if (n == 0) {
      throw Error(ErrorCode::InvalidInput, "a monoid needs at least one element");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i].size() != n) {
        throw Error(ErrorCode::InvalidInput,
                    "row " + std::to_string(i) + " has length "
                        + std::to_string(raw[i].size()) + ", expected "
                        + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (raw[i][j] >= n) {
          throw Error(ErrorCode::IndexOutOfRange,
                      "table[" + std::to_string(i) + "][" + std::to_string(j)
                          + "] = " + std::to_string(raw[i][j]));
        }
      }
    }
    if (names.empty()) {
      names = default_element_names(n);
    } else if (names.size() != n) {
      throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(n)
                                               + " element names, got "
                                               + std::to_string(names.size()));
    } else {
      std::set<std::string> distinct(names.begin(), names.end());
      if (distinct.size() != n) {
        throw Error(ErrorCode::InvalidInput, "element names are not distinct");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[0][i] != i || raw[i][0] != i) {
        throw Error(ErrorCode::NoIdentityAtZero,
                    "element 0 does not act as identity on " + std::to_string(i));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (raw[raw[i][j]][k] != raw[i][raw[j][k]]) {
            throw Error(ErrorCode::NotAssociative, "triple " + triple(i, j, k));
          }
        }
      }
    }
    return FiniteMonoid(n, flatten(raw, n), std::move(names));
  }

  Table FiniteMonoid::rows() const {
    return to_rows(_table, _order);
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard families
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid trivial_monoid() {
    return FiniteMonoid::validate({{0}});
  }

  FiniteMonoid cyclic_group(unsigned k) {
    if (k == 0 || k > 4096) {
      throw Error(ErrorCode::ParamOutOfRange,
                  "cyclic_group needs 1 <= k <= 4096, got " + std::to_string(k));
    }
    Table t(k, std::vector<Index>(k));
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = 0; j < k; ++j) {
        t[i][j] = (i + j) % k;
      }
    }
    std::vector<std::string> names{"1"};
    for (unsigned i = 1; i < k; ++i) {
      names.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return FiniteMonoid::validate(t, std::move(names));
  }

  FiniteMonoid left_zero_adjoined(unsigned k) {
    if (k == 0 || k > 1024) {
      throw Error(ErrorCode::ParamOutOfRange,
                  "left_zero_adjoined needs 1 <= k <= 1024, got "
                      + std::to_string(k));
    }
    std::size_t const n = k + 1;
    Table             t(n, std::vector<Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = static_cast<Index>(i == 0 ? j : i);
      }
    }
    return FiniteMonoid::validate(t);
  }

  FiniteMonoid right_zero_adjoined(unsigned k) {
    if (k == 0 || k > 1024) {
      throw Error(ErrorCode::ParamOutOfRange,
                  "right_zero_adjoined needs 1 <= k <= 1024, got "
                      + std::to_string(k));
    }
    std::size_t const n = k + 1;
    Table             t(n, std::vector<Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = static_cast<Index>(j == 0 ? i : j);
      }
    }
    return FiniteMonoid::validate(t);
  }

  Index transformation_index(std::span<Index const> values) {
    std::size_t const r  = lex_rank(values);
    std::size_t const id = identity_rank(values.size());
    if (r == id) {
      return 0;
    }
    return static_cast<Index>(r < id ? r + 1 : r);
  }

  FiniteMonoid full_transformation(unsigned n) {
    if (n == 0 || n > 4) {
      throw Error(ErrorCode::ParamOutOfRange,
                  "full_transformation needs 1 <= n <= 4, got "
                      + std::to_string(n));
    }
    std::size_t const size = ipow(n, n);
    std::size_t const id   = identity_rank(n);
    // maps[e] is the value table of element e.
    std::vector<std::vector<Index>> maps(size, std::vector<Index>(n));
    for (std::size_t r = 0; r < size; ++r) {
      std::vector<Index> values(n);
      std::size_t        rest = r;
      for (std::size_t i = n; i-- > 0;) {
        values[i] = static_cast<Index>(rest % n);
        rest /= n;
      }
      std::size_t e = r == id ? 0 : (r < id ? r + 1 : r);
      maps[e]       = std::move(values);
    }
    std::vector<std::string> names;
    for (auto const& values : maps) {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) {
        if (n > 9 && i > 0) {
          s += ',';
        }
        s += std::to_string(values[i] + 1);
      }
      names.push_back(std::move(s));
    }
    Table              t(size, std::vector<Index>(size));
    std::vector<Index> composite(n);
    for (std::size_t f = 0; f < size; ++f) {
      for (std::size_t g = 0; g < size; ++g) {
        for (std::size_t x = 0; x < n; ++x) {
          composite[x] = maps[f][maps[g][x]];
        }
        t[f][g] = transformation_index(composite);
      }
    }
    return FiniteMonoid::validate(t, std::move(names));
  }

  FiniteMonoid standard_monoid(std::string_view family, unsigned param) {
    if (family == "trivial") {
      return trivial_monoid();
    } else if (family == "cyclic_group" || family == "cyclic" || family == "zk") {
      return cyclic_group(param);
    } else if (family == "left_zero_adjoined" || family == "lz1") {
      return left_zero_adjoined(param);
    } else if (family == "right_zero_adjoined" || family == "rz1") {
      return right_zero_adjoined(param);
    } else if (family == "full_transformation" || family == "tn") {
      return full_transformation(param);
    }
    throw Error(ErrorCode::UnknownFamily, std::string(family));
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid opposite(FiniteMonoid const& m) {
    std::size_t const  n = m.order();
    std::vector<Index> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        flat[i * n + j] = m.product(static_cast<Index>(j), static_cast<Index>(i));
      }
    }
    return FiniteMonoid(n, std::move(flat), m.names());
  }

  FiniteMonoid relabel(FiniteMonoid const& m, std::span<Index const> perm) {
    std::size_t const n = m.order();
    if (perm.size() != n || perm[0] != 0) {
      throw Error(ErrorCode::InvalidInput, "relabeling must be a permutation fixing 0");
    }
    std::vector<bool> seen(n, false);
    for (Index p : perm) {
      if (p >= n || seen[p]) {
        throw Error(ErrorCode::InvalidInput, "relabeling is not a permutation");
      }
      seen[p] = true;
    }
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
      names[perm[i]] = m.name(static_cast<Index>(i));
    }
    return FiniteMonoid(n, relabel_flat(m, perm), std::move(names));
  }

  bool is_commutative(FiniteMonoid const& m) {
    for (Index i = 0; i < m.order(); ++i) {
      for (Index j = i + 1; j < m.order(); ++j) {
        if (m.product(i, j) != m.product(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Index> left_zeros(FiniteMonoid const& m) {
    std::vector<Index> out;
    for (Index z = 0; z < m.order(); ++z) {
      bool ok = true;
      for (Index x = 0; x < m.order() && ok; ++x) {
        ok = m.product(z, x) == z;
      }
      if (ok) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::vector<Index> right_zeros(FiniteMonoid const& m) {
    std::vector<Index> out;
    for (Index z = 0; z < m.order(); ++z) {
      bool ok = true;
      for (Index x = 0; x < m.order() && ok; ++x) {
        ok = m.product(x, z) == z;
      }
      if (ok) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::vector<Index> right_ideal_generated(FiniteMonoid const&   m,
                                           std::span<Index const> seeds) {
    if (seeds.empty()) {
      throw Error(ErrorCode::EmptySeeds, "right_ideal_generated");
    }
    std::vector<bool> in(m.order(), false);
    for (Index a : seeds) {
      if (a >= m.order()) {
        throw Error(ErrorCode::IndexOutOfRange, "seed " + std::to_string(a));
      }
      for (Index s = 0; s < m.order(); ++s) {
        in[m.product(a, s)] = true;
      }
    }
    std::vector<Index> out;
    for (Index x = 0; x < m.order(); ++x) {
      if (in[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Index> left_ideal_generated(FiniteMonoid const&   m,
                                          std::span<Index const> seeds) {
    return right_ideal_generated(opposite(m), seeds);
  }

  bool is_right_ideal(FiniteMonoid const& m, std::span<Index const> subset) {
    std::vector<bool> in(m.order(), false);
    for (Index x : subset) {
      if (x >= m.order()) {
        return false;
      }
      in[x] = true;
    }
    for (Index x : subset) {
      for (Index s = 0; s < m.order(); ++s) {
        if (!in[m.product(x, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    // aS as a bitmap, for every a.
    std::vector<std::vector<bool>> principal_right_ideals(FiniteMonoid const& m) {
      std::size_t const              n = m.order();
      std::vector<std::vector<bool>> ideals(n, std::vector<bool>(n, false));
      for (Index a = 0; a < n; ++a) {
        for (Index s = 0; s < n; ++s) {
          ideals[a][m.product(a, s)] = true;
        }
      }
      return ideals;
    }
  }  // namespace

  PredicateResult is_left_reversible(FiniteMonoid const& m) {
    std::size_t const n      = m.order();
    auto const        ideals = principal_right_ideals(m);
    for (Index a = 0; a < n; ++a) {
      for (Index b = a + 1; b < n; ++b) {
        bool meet = false;
        for (Index x = 0; x < n && !meet; ++x) {
          meet = ideals[a][x] && ideals[b][x];
        }
        if (!meet) {
          return {false, std::make_pair(a, b)};
        }
      }
    }
    return {true, std::nullopt};
  }

  PredicateResult is_right_reversible(FiniteMonoid const& m) {
    return is_left_reversible(opposite(m));
  }

  PredicateResult is_right_collapsible(FiniteMonoid const& m) {
    std::size_t const n = m.order();
    for (Index s = 0; s < n; ++s) {
      for (Index t = s + 1; t < n; ++t) {
        bool found = false;
        for (Index u = 0; u < n && !found; ++u) {
          found = m.product(s, u) == m.product(t, u);
        }
        if (!found) {
          return {false, std::make_pair(s, t)};
        }
      }
    }
    return {true, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and canonical forms
  ////////////////////////////////////////////////////////////////////////

  Table canonical_form(FiniteMonoid const& m) {
    std::size_t const  n = m.order();
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index(0));
    std::vector<Index> best = relabel_flat(m, perm);
    while (next_permutation_fixing_zero(perm)) {
      auto candidate = relabel_flat(m, perm);
      if (candidate < best) {
        best = std::move(candidate);
      }
    }
    return to_rows(best, n);
  }

  std::size_t automorphism_count(FiniteMonoid const& m) {
    std::size_t const  n = m.order();
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index(0));
    Table const original = m.rows();
    std::size_t count    = 0;
    do {
      if (to_rows(relabel_flat(m, perm), n) == original) {
        ++count;
      }
    } while (next_permutation_fixing_zero(perm));
    return count;
  }

  namespace {

    // Cell-by-cell backtracking over the (n-1)^2 free cells. After each
    // assignment every triple whose three products are all known is checked.
    class MonoidSearch {
     public:
      explicit MonoidSearch(std::size_t n)
          : _n(n), _table(n * n, static_cast<Index>(n)) {
        for (std::size_t i = 0; i < n; ++i) {
          _table[i]     = static_cast<Index>(i);
          _table[i * n]  = static_cast<Index>(i);
        }
        for (std::size_t i = 1; i < n; ++i) {
          for (std::size_t j = 1; j < n; ++j) {
            _cells.push_back(i * n + j);
          }
        }
      }

      template <typename Sink>
      void run(Sink&& sink) {
        recurse(0, sink);
      }

     private:
      Index undefined() const {
        return static_cast<Index>(_n);
      }

      Index at(std::size_t i, std::size_t j) const {
        return _table[i * _n + j];
      }

      bool consistent() const {
        Index const u = undefined();
        for (std::size_t i = 1; i < _n; ++i) {
          for (std::size_t j = 1; j < _n; ++j) {
            Index const ij = at(i, j);
            if (ij == u) {
              continue;
            }
            for (std::size_t k = 1; k < _n; ++k) {
              Index const jk = at(j, k);
              if (jk == u) {
                continue;
              }
              Index const lhs = at(ij, k);
              Index const rhs = at(i, jk);
              if (lhs != u && rhs != u && lhs != rhs) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Sink>
      void recurse(std::size_t depth, Sink& sink) {
        if (depth == _cells.size()) {
          sink(_table);
          return;
        }
        std::size_t const cell = _cells[depth];
        for (Index v = 0; v < _n; ++v) {
          _table[cell] = v;
          if (consistent()) {
            recurse(depth + 1, sink);
          }
        }
        _table[cell] = undefined();
      }

      std::size_t              _n;
      std::vector<Index>       _table;
      std::vector<std::size_t> _cells;
    };

  }  // namespace

  std::vector<FiniteMonoid> enumerate_monoids(std::size_t order,
                                              bool        up_to_iso,
                                              bool        allow_order_5) {
    if (order == 0) {
      throw Error(ErrorCode::ParamOutOfRange, "order must be at least 1");
    }
    if (order > 5 || (order == 5 && !allow_order_5)) {
      throw Error(ErrorCode::OrderTooLarge,
                  "order " + std::to_string(order)
                      + " (4 is the default limit, 5 needs an explicit opt-in)");
    }
    std::vector<FiniteMonoid> out;
    auto const                names = default_element_names(order);
    MonoidSearch              search(order);
    search.run([&](std::vector<Index> const& flat) {
      auto m = FiniteMonoid::validate(to_rows(flat, order), names);
      if (!up_to_iso || canonical_form(m) == m.rows()) {
        out.push_back(std::move(m));
      }
    });
    return out;
  }

}  // namespace acta
