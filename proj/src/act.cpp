#include "acta/act.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "acta/error.hpp"
#include "acta/union_find.hpp"

namespace acta {

  namespace {

    std::string str(std::size_t x) {
      return std::to_string(x);
    }

    std::vector<std::string> index_names(std::size_t size) {
      std::vector<std::string> names;
      names.reserve(size);
      for (std::size_t i = 0; i < size; ++i) {
        names.push_back("x" + str(i));
      }
      return names;
    }

    void require_same_monoid(FiniteAct const& a, FiniteAct const& b,
                             char const* where) {
      if (!same_monoid(a, b)) {
        throw Error(ErrorCode::MixedMonoids, where);
      }
    }

    std::vector<Index> normalize_labels(std::span<Index const> labels,
                                        std::size_t&           blocks) {
      std::map<Index, Index> renumber;
      std::vector<Index>     out(labels.size());
      for (std::size_t x = 0; x < labels.size(); ++x) {
        auto [it, inserted] = renumber.emplace(labels[x], static_cast<Index>(renumber.size()));
        out[x]              = it->second;
      }
      blocks = renumber.size();
      return out;
    }

  }  // namespace

  bool same_monoid(FiniteAct const& a, FiniteAct const& b) {
    return a.monoid_ptr() == b.monoid_ptr() || a.monoid().same_table(b.monoid());
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteAct
  ////////////////////////////////////////////////////////////////////////

  FiniteAct FiniteAct::validate(MonoidPtr monoid, Table const& raw,
                                std::vector<std::string> names) {
    if (!monoid) {
      throw Error(ErrorCode::InvalidInput, "act without a monoid");
    }
    std::size_t const m = raw.size();
    std::size_t const n = monoid->order();
    if (m == 0) {
      throw Error(ErrorCode::InvalidInput, "acts are nonempty");
    }
    std::vector<Index> flat;
    flat.reserve(m * n);
    for (std::size_t x = 0; x < m; ++x) {
      if (raw[x].size() != n) {
        throw Error(ErrorCode::InvalidInput,
                    "action row " + str(x) + " has length " + str(raw[x].size())
                        + ", expected " + str(n));
      }
      for (std::size_t s = 0; s < n; ++s) {
        if (raw[x][s] >= m) {
          throw Error(ErrorCode::IndexOutOfRange,
                      "action[" + str(x) + "][" + str(s) + "] = " + str(raw[x][s]));
        }
        flat.push_back(raw[x][s]);
      }
    }
    if (names.empty()) {
      names = index_names(m);
    } else if (names.size() != m) {
      throw Error(ErrorCode::InvalidInput,
                  "expected " + str(m) + " element names, got " + str(names.size()));
    }
    for (std::size_t x = 0; x < m; ++x) {
      if (flat[x * n] != x) {
        throw Error(ErrorCode::NotUnital, "element " + str(x));
      }
    }
    for (std::size_t x = 0; x < m; ++x) {
      for (Index s = 0; s < n; ++s) {
        Index const xs = flat[x * n + s];
        for (Index t = 0; t < n; ++t) {
          if (flat[xs * n + t] != flat[x * n + monoid->product(s, t)]) {
            throw Error(ErrorCode::NotCompatible,
                        "triple (" + str(x) + "," + str(s) + "," + str(t) + ")");
          }
        }
      }
    }
    return FiniteAct(std::move(monoid), m, std::move(flat), std::move(names));
  }

  FiniteAct FiniteAct::trusted(MonoidPtr monoid, std::size_t size,
                               std::vector<Index>       flat,
                               std::vector<std::string> names) {
    if (names.empty()) {
      names = index_names(size);
    }
    return FiniteAct(std::move(monoid), size, std::move(flat), std::move(names));
  }

  Table FiniteAct::rows() const {
    std::size_t const n = _monoid->order();
    Table             t(_size, std::vector<Index>(n));
    for (std::size_t x = 0; x < _size; ++x) {
      std::copy_n(_action.begin() + x * n, n, t[x].begin());
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  bool is_morphism(FiniteAct const& source, FiniteAct const& target,
                   ActMorphism const& f) {
    if (f.map.size() != source.size() || !same_monoid(source, target)) {
      return false;
    }
    for (Index y : f.map) {
      if (y >= target.size()) {
        return false;
      }
    }
    for (Index x = 0; x < source.size(); ++x) {
      for (Index s = 0; s < source.monoid().order(); ++s) {
        if (f(source.act(x, s)) != target.act(f(x), s)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_injective(ActMorphism const& f, std::size_t target_size) {
    std::vector<bool> hit(target_size, false);
    for (Index y : f.map) {
      if (y >= target_size || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  ActMorphism compose(ActMorphism const& g, ActMorphism const& f) {
    ActMorphism out;
    out.map.reserve(f.map.size());
    for (Index y : f.map) {
      out.map.push_back(g(y));
    }
    return out;
  }

  ActMorphism identity_morphism(std::size_t size) {
    ActMorphism id;
    id.map.resize(size);
    std::iota(id.map.begin(), id.map.end(), Index(0));
    return id;
  }

  ////////////////////////////////////////////////////////////////////////
  // RightCongruence
  ////////////////////////////////////////////////////////////////////////

  bool is_right_congruence(FiniteAct const& act, std::span<Index const> labels) {
    if (labels.size() != act.size()) {
      return false;
    }
    // The block of x.s must depend only on the block of x, for each s.
    std::map<Index, std::size_t> representative;
    for (std::size_t x = 0; x < act.size(); ++x) {
      auto [it, inserted] = representative.emplace(labels[x], x);
      if (inserted) {
        continue;
      }
      Index const r = static_cast<Index>(it->second);
      for (Index s = 0; s < act.monoid().order(); ++s) {
        if (labels[act.act(static_cast<Index>(x), s)] != labels[act.act(r, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  RightCongruence RightCongruence::from_labels(FiniteAct const&       act,
                                               std::span<Index const> labels) {
    if (labels.size() != act.size()) {
      throw Error(ErrorCode::InvalidInput, "partition size does not match the act");
    }
    if (!is_right_congruence(act, labels)) {
      throw Error(ErrorCode::InvalidInput, "partition is not a right congruence");
    }
    return trusted(labels);
  }

  RightCongruence RightCongruence::from_blocks(
      FiniteAct const& act, std::vector<std::vector<Index>> const& blocks) {
    std::vector<Index> labels(act.size(), static_cast<Index>(-1));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw Error(ErrorCode::InvalidInput, "empty block " + str(b));
      }
      for (Index x : blocks[b]) {
        if (x >= act.size()) {
          throw Error(ErrorCode::IndexOutOfRange, "block element " + str(x));
        }
        if (labels[x] != static_cast<Index>(-1)) {
          throw Error(ErrorCode::InvalidInput, "element " + str(x) + " in two blocks");
        }
        labels[x] = static_cast<Index>(b);
      }
    }
    for (std::size_t x = 0; x < labels.size(); ++x) {
      if (labels[x] == static_cast<Index>(-1)) {
        throw Error(ErrorCode::InvalidInput, "element " + str(x) + " in no block");
      }
    }
    return from_labels(act, labels);
  }

  RightCongruence RightCongruence::identity(std::size_t size) {
    std::vector<Index> labels(size);
    std::iota(labels.begin(), labels.end(), Index(0));
    return RightCongruence(std::move(labels), size);
  }

  RightCongruence RightCongruence::trusted(std::span<Index const> labels) {
    std::size_t blocks = 0;
    auto        norm   = normalize_labels(labels, blocks);
    return RightCongruence(std::move(norm), blocks);
  }

  std::vector<std::vector<Index>> RightCongruence::blocks() const {
    std::vector<std::vector<Index>> out(_blocks);
    for (std::size_t x = 0; x < _block_of.size(); ++x) {
      out[_block_of[x]].push_back(static_cast<Index>(x));
    }
    return out;
  }

  bool RightCongruence::refines(RightCongruence const& other) const {
    if (other.size() != size()) {
      return false;
    }
    std::vector<Index> image(_blocks, static_cast<Index>(-1));
    for (std::size_t x = 0; x < _block_of.size(); ++x) {
      Index& slot = image[_block_of[x]];
      if (slot == static_cast<Index>(-1)) {
        slot = other._block_of[x];
      } else if (slot != other._block_of[x]) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  FiniteAct regular_act(MonoidPtr const& monoid) {
    std::size_t const  n = monoid->order();
    std::vector<Index> flat(n * n);
    for (Index x = 0; x < n; ++x) {
      for (Index s = 0; s < n; ++s) {
        flat[x * n + s] = monoid->product(x, s);
      }
    }
    return FiniteAct::trusted(monoid, n, std::move(flat), monoid->names());
  }

  FiniteAct zero_act(MonoidPtr const& monoid) {
    return FiniteAct::trusted(monoid, 1, std::vector<Index>(monoid->order(), 0),
                              {"theta"});
  }

  ProductAct product_act(std::span<FiniteAct const> factors, std::size_t cap) {
    if (factors.empty()) {
      throw Error(ErrorCode::InvalidInput, "product of an empty family");
    }
    std::size_t total = 1;
    for (auto const& f : factors) {
      require_same_monoid(factors[0], f, "product_act");
      if (f.size() > cap / total) {
        throw Error(ErrorCode::SizeCapExceeded,
                    "product size exceeds cap " + str(cap));
      }
      total *= f.size();
    }
    std::size_t const k = factors.size();
    std::size_t const n = factors[0].monoid().order();
    // stride[i]: weight of coordinate i in the row-major index.
    std::vector<std::size_t> stride(k);
    std::size_t              w = 1;
    for (std::size_t i = k; i-- > 0;) {
      stride[i] = w;
      w *= factors[i].size();
    }
    std::vector<Index>       flat(total * n);
    std::vector<ActMorphism> projections(k);
    for (auto& p : projections) {
      p.map.resize(total);
    }
    std::vector<Index> coord(k, 0);
    bool const         with_names = total <= 100'000;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < total; ++x) {
      for (std::size_t i = 0; i < k; ++i) {
        projections[i].map[x] = coord[i];
      }
      for (Index s = 0; s < n; ++s) {
        std::size_t y = 0;
        for (std::size_t i = 0; i < k; ++i) {
          y += factors[i].act(coord[i], s) * stride[i];
        }
        flat[x * n + s] = static_cast<Index>(y);
      }
      if (with_names) {
        std::string name = "(";
        for (std::size_t i = 0; i < k; ++i) {
          name += (i ? "," : "") + factors[i].name(coord[i]);
        }
        names.push_back(name + ")");
      }
      for (std::size_t i = k; i-- > 0;) {
        if (++coord[i] < factors[i].size()) {
          break;
        }
        coord[i] = 0;
      }
    }
    return {FiniteAct::trusted(factors[0].monoid_ptr(), total, std::move(flat),
                               std::move(names)),
            std::move(projections)};
  }

  FiniteAct power_act(MonoidPtr const& monoid, std::size_t k, std::size_t cap) {
    if (k == 0) {
      throw Error(ErrorCode::ParamOutOfRange, "power_act needs k >= 1");
    }
    std::vector<FiniteAct> factors(k, regular_act(monoid));
    return product_act(factors, cap).act;
  }

  CoproductAct coproduct_act(std::span<FiniteAct const> parts) {
    if (parts.empty()) {
      throw Error(ErrorCode::InvalidInput, "coproduct of an empty family");
    }
    std::size_t const        n = parts[0].monoid().order();
    std::size_t              total = 0;
    std::vector<std::size_t> offset;
    for (auto const& p : parts) {
      require_same_monoid(parts[0], p, "coproduct_act");
      offset.push_back(total);
      total += p.size();
    }
    std::vector<Index>       flat(total * n);
    std::vector<std::string> names;
    std::vector<ActMorphism> injections(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (Index x = 0; x < parts[i].size(); ++x) {
        std::size_t const g = offset[i] + x;
        injections[i].map.push_back(static_cast<Index>(g));
        for (Index s = 0; s < n; ++s) {
          flat[g * n + s] = static_cast<Index>(offset[i] + parts[i].act(x, s));
        }
        names.push_back(parts[i].name(x) + "@" + str(i + 1));
      }
    }
    return {FiniteAct::trusted(parts[0].monoid_ptr(), total, std::move(flat),
                               std::move(names)),
            std::move(injections)};
  }

  std::vector<Index> subact_closure(FiniteAct const&       act,
                                    std::span<Index const> seeds) {
    if (seeds.empty()) {
      throw Error(ErrorCode::EmptySeeds, "subact_generated");
    }
    std::vector<bool> in(act.size(), false);
    for (Index a : seeds) {
      if (a >= act.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "seed " + str(a));
      }
      // x.S already contains everything reachable from x.
      for (Index s = 0; s < act.monoid().order(); ++s) {
        in[act.act(a, s)] = true;
      }
    }
    std::vector<Index> out;
    for (Index x = 0; x < act.size(); ++x) {
      if (in[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_subact(FiniteAct const& act, std::span<Index const> subset) {
    if (subset.empty()) {
      return false;
    }
    std::vector<bool> in(act.size(), false);
    for (Index x : subset) {
      if (x >= act.size()) {
        return false;
      }
      in[x] = true;
    }
    for (Index x : subset) {
      for (Index s = 0; s < act.monoid().order(); ++s) {
        if (!in[act.act(x, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  Subact subact_on(FiniteAct const& act, std::span<Index const> subset) {
    if (!is_subact(act, subset)) {
      throw Error(ErrorCode::NotASubact, "subset is empty or not action-closed");
    }
    std::vector<Index> elements(subset.begin(), subset.end());
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<Index> position(act.size(), 0);
    for (std::size_t k = 0; k < elements.size(); ++k) {
      position[elements[k]] = static_cast<Index>(k);
    }
    std::size_t const        n = act.monoid().order();
    std::vector<Index>       flat(elements.size() * n);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      for (Index s = 0; s < n; ++s) {
        flat[k * n + s] = position[act.act(elements[k], s)];
      }
      names.push_back(act.name(elements[k]));
    }
    auto sub = FiniteAct::trusted(act.monoid_ptr(), elements.size(), std::move(flat),
                                  std::move(names));
    return {std::move(sub), elements, ActMorphism{elements}};
  }

  Subact subact_generated(FiniteAct const& act, std::span<Index const> seeds) {
    return subact_on(act, subact_closure(act, seeds));
  }

  std::vector<std::vector<Index>> enumerate_subacts(FiniteAct const& act,
                                                    std::size_t      cap) {
    std::size_t const m = act.size();
    if (m > cap || m > 30) {
      throw Error(ErrorCode::SizeCapExceeded,
                  "enumerate_subacts on " + str(m) + " elements (cap " + str(cap) + ")");
    }
    // closure[x]: bitmask of x.S. A set is closed iff it contains the
    // closure of each of its members.
    std::vector<std::uint32_t> closure(m, 0);
    for (Index x = 0; x < m; ++x) {
      for (Index s = 0; s < act.monoid().order(); ++s) {
        closure[x] |= std::uint32_t(1) << act.act(x, s);
      }
    }
    std::vector<std::vector<Index>> out;
    std::uint32_t const             limit = std::uint32_t(1) << m;
    for (std::uint32_t mask = 1; mask < limit && mask != 0; ++mask) {
      bool closed = true;
      for (Index x = 0; x < m && closed; ++x) {
        if (mask >> x & 1u) {
          closed = (closure[x] & ~mask) == 0;
        }
      }
      if (closed) {
        std::vector<Index> set;
        for (Index x = 0; x < m; ++x) {
          if (mask >> x & 1u) {
            set.push_back(x);
          }
        }
        out.push_back(std::move(set));
      }
    }
    return out;
  }

  RightCongruence congruence_closure(
      FiniteAct const& act, std::span<std::pair<Index, Index> const> pairs) {
    UnionFind                               uf(act.size());
    std::deque<std::pair<Index, Index>>     work;
    for (auto const& [u, v] : pairs) {
      if (u >= act.size() || v >= act.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "pair (" + str(u) + "," + str(v) + ")");
      }
      work.emplace_back(u, v);
    }
    while (!work.empty()) {
      auto [u, v] = work.front();
      work.pop_front();
      if (!uf.unite(u, v)) {
        continue;
      }
      for (Index s = 1; s < act.monoid().order(); ++s) {
        work.emplace_back(act.act(u, s), act.act(v, s));
      }
    }
    return RightCongruence::trusted(uf.labels<Index>());
  }

  Quotient quotient_act(FiniteAct const& act, RightCongruence const& rho) {
    if (rho.size() != act.size()) {
      throw Error(ErrorCode::InvalidInput, "congruence does not match the act");
    }
    std::size_t const        n = act.monoid().order();
    std::size_t const        k = rho.block_count();
    std::vector<Index>       flat(k * n);
    std::vector<std::string> names(k);
    std::vector<bool>        done(k, false);
    for (Index x = 0; x < act.size(); ++x) {
      Index const b = rho.block_of(x);
      if (done[b]) {
        continue;
      }
      done[b]  = true;
      names[b] = "[" + act.name(x) + "]";
      for (Index s = 0; s < n; ++s) {
        flat[b * n + s] = rho.block_of(act.act(x, s));
      }
    }
    return {FiniteAct::trusted(act.monoid_ptr(), k, std::move(flat), std::move(names)),
            ActMorphism{rho.labels()}, rho};
  }

  Quotient rees_quotient(MonoidPtr const& monoid, std::span<Index const> ideal) {
    if (ideal.empty()) {
      throw Error(ErrorCode::EmptySeeds, "rees_quotient needs a nonempty ideal");
    }
    for (Index j : ideal) {
      if (j >= monoid->order()) {
        throw Error(ErrorCode::IndexOutOfRange, "ideal element " + str(j));
      }
      for (Index s = 0; s < monoid->order(); ++s) {
        Index const js = monoid->product(j, s);
        if (std::find(ideal.begin(), ideal.end(), js) == ideal.end()) {
          throw Error(ErrorCode::NotARightIdeal,
                      "element " + str(j) + " times " + str(s) + " = " + str(js)
                          + " leaves the set");
        }
      }
    }
    auto const         regular = regular_act(monoid);
    Index const        rep     = *std::min_element(ideal.begin(), ideal.end());
    std::vector<Index> labels(monoid->order());
    std::iota(labels.begin(), labels.end(), Index(0));
    for (Index j : ideal) {
      labels[j] = rep;
    }
    return quotient_act(regular, RightCongruence::trusted(labels));
  }

  std::vector<RightCongruence> enumerate_right_congruences(FiniteAct const& act,
                                                           std::size_t cap) {
    std::size_t const m = act.size();
    if (m > cap) {
      throw Error(ErrorCode::SizeCapExceeded,
                  "enumerate_right_congruences on " + str(m) + " elements (cap "
                      + str(cap) + ")");
    }
    std::vector<RightCongruence> out;
    std::vector<Index>           rgs(m, 0);
    // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
    std::function<void(std::size_t, Index)> rec = [&](std::size_t i, Index max_label) {
      if (i == m) {
        if (is_right_congruence(act, rgs)) {
          out.push_back(RightCongruence::trusted(rgs));
        }
        return;
      }
      for (Index l = 0; l <= max_label + 1; ++l) {
        rgs[i] = l;
        rec(i + 1, std::max(max_label, l));
      }
    };
    rgs[0] = 0;
    rec(1, 0);
    return out;
  }

  FiniteAct cofree_act(MonoidPtr const& monoid, std::size_t letters,
                       std::size_t cap) {
    if (letters == 0) {
      throw Error(ErrorCode::ParamOutOfRange, "cofree_act needs at least one letter");
    }
    std::size_t const n     = monoid->order();
    std::size_t       total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (total > cap / letters) {
        throw Error(ErrorCode::SizeCapExceeded,
                    "cofree act has " + str(letters) + "^" + str(n) + " elements");
      }
      total *= letters;
    }
    auto decode = [&](std::size_t code) {
      std::vector<Index> f(n);
      for (std::size_t t = n; t-- > 0;) {
        f[t] = static_cast<Index>(code % letters);
        code /= letters;
      }
      return f;
    };
    auto encode = [&](std::vector<Index> const& f) {
      std::size_t code = 0;
      for (Index v : f) {
        code = code * letters + v;
      }
      return static_cast<Index>(code);
    };
    std::vector<Index>       flat(total * n);
    std::vector<std::string> names;
    std::vector<Index>       fs(n);
    for (std::size_t code = 0; code < total; ++code) {
      auto const  f = decode(code);
      std::string name;
      for (Index v : f) {
        name += (letters <= 10 ? "" : (name.empty() ? "" : ",")) + str(v);
      }
      names.push_back("f" + name);
      for (Index s = 0; s < n; ++s) {
        for (Index t = 0; t < n; ++t) {
          fs[t] = f[monoid->product(s, t)];
        }
        flat[code * n + s] = encode(fs);
      }
    }
    return FiniteAct::trusted(monoid, total, std::move(flat), std::move(names));
  }

  std::vector<Index> zeros_of_act(FiniteAct const& act) {
    std::vector<Index> out;
    for (Index x = 0; x < act.size(); ++x) {
      bool fixed = true;
      for (Index s = 0; s < act.monoid().order() && fixed; ++s) {
        fixed = act.act(x, s) == x;
      }
      if (fixed) {
        out.push_back(x);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Backtracking over images; an assignment x -> y forces x.s -> y.s for
    // every s, propagated through a worklist with an undo trail.
    class MorphismSearch {
     public:
      MorphismSearch(FiniteAct const& source, FiniteAct const& target)
          : _src(source), _dst(target), _image(source.size(), kFree) {}

      bool preset(std::vector<std::optional<Index>> const& partial) {
        for (Index x = 0; x < partial.size(); ++x) {
          if (!partial[x]) {
            continue;
          }
          if (*partial[x] >= _dst.size()) {
            return false;
          }
          if (!assign(x, *partial[x])) {
            return false;
          }
        }
        _trail.clear();
        return true;
      }

      std::size_t run(std::function<bool(ActMorphism const&)> const& visit) {
        _visit = &visit;
        _count = 0;
        _stop  = false;
        recurse(0);
        return _count;
      }

     private:
      static constexpr Index kFree = static_cast<Index>(-1);

      bool assign(Index x, Index y) {
        std::vector<std::pair<Index, Index>> work{{x, y}};
        while (!work.empty()) {
          auto [u, v] = work.back();
          work.pop_back();
          if (_image[u] != kFree) {
            if (_image[u] != v) {
              return false;
            }
            continue;
          }
          _image[u] = v;
          _trail.push_back(u);
          for (Index s = 1; s < _src.monoid().order(); ++s) {
            work.emplace_back(_src.act(u, s), _dst.act(v, s));
          }
        }
        return true;
      }

      void undo_to(std::size_t mark) {
        while (_trail.size() > mark) {
          _image[_trail.back()] = kFree;
          _trail.pop_back();
        }
      }

      void recurse(Index from) {
        if (_stop) {
          return;
        }
        while (from < _image.size() && _image[from] != kFree) {
          ++from;
        }
        if (from == _image.size()) {
          ++_count;
          if (!(*_visit)(ActMorphism{_image})) {
            _stop = true;
          }
          return;
        }
        for (Index y = 0; y < _dst.size() && !_stop; ++y) {
          std::size_t const mark = _trail.size();
          if (assign(from, y)) {
            recurse(from + 1);
          }
          undo_to(mark);
        }
      }

      FiniteAct const&                               _src;
      FiniteAct const&                               _dst;
      std::vector<Index>                             _image;
      std::vector<Index>                             _trail;
      std::function<bool(ActMorphism const&)> const* _visit = nullptr;
      std::size_t                                    _count = 0;
      bool                                           _stop  = false;
    };

  }  // namespace

  std::size_t for_each_morphism(
      FiniteAct const& source, FiniteAct const& target,
      std::vector<std::optional<Index>> const&        partial,
      std::function<bool(ActMorphism const&)> const& visit) {
    require_same_monoid(source, target, "morphism search");
    if (!partial.empty() && partial.size() != source.size()) {
      throw Error(ErrorCode::InvalidInput, "partial assignment has the wrong length");
    }
    MorphismSearch search(source, target);
    if (!search.preset(partial)) {
      return 0;
    }
    return search.run(visit);
  }

  std::vector<ActMorphism> homomorphisms(FiniteAct const& source,
                                         FiniteAct const& target,
                                         std::size_t      cap) {
    std::vector<ActMorphism> out;
    bool                     overflow = false;
    for_each_morphism(source, target, {}, [&](ActMorphism const& f) {
      if (out.size() == cap) {
        overflow = true;
        return false;
      }
      out.push_back(f);
      return true;
    });
    if (overflow) {
      throw Error(ErrorCode::SizeCapExceeded,
                  "more than " + str(cap) + " homomorphisms");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Colimits
  ////////////////////////////////////////////////////////////////////////

  Pushout pushout(FiniteAct const& x, FiniteAct const& y1, FiniteAct const& y2,
                  ActMorphism const& f1, ActMorphism const& f2) {
    require_same_monoid(x, y1, "pushout");
    require_same_monoid(x, y2, "pushout");
    if (!is_morphism(x, y1, f1) || !is_morphism(x, y2, f2)) {
      throw Error(ErrorCode::NotAMorphism, "pushout legs must be act morphisms");
    }
    std::vector<FiniteAct> parts{y1, y2};
    auto const             coproduct = coproduct_act(parts);
    std::vector<std::pair<Index, Index>> pairs;
    for (Index e = 0; e < x.size(); ++e) {
      pairs.emplace_back(coproduct.injections[0](f1(e)), coproduct.injections[1](f2(e)));
    }
    auto const nu = congruence_closure(coproduct.act, pairs);
    auto       q  = quotient_act(coproduct.act, nu);
    return {std::move(q.act), compose(q.projection, coproduct.injections[0]),
            compose(q.projection, coproduct.injections[1])};
  }

  Pushout amalgamated_coproduct(FiniteAct const& x, FiniteAct const& y1,
                                FiniteAct const& y2, ActMorphism const& f1,
                                ActMorphism const& f2) {
    if (!is_injective(f1, y1.size()) || !is_injective(f2, y2.size())) {
      throw Error(ErrorCode::NotInjective, "amalgamation needs injective legs");
    }
    return pushout(x, y1, y2, f1, f2);
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  FiniteAct canonical_act(FiniteAct const& act) {
    std::size_t const  m = act.size();
    std::size_t const  n = act.monoid().order();
    std::vector<Index> perm(m);
    std::iota(perm.begin(), perm.end(), Index(0));
    std::vector<Index> best;
    std::vector<Index> candidate(m * n);
    std::vector<Index> inv(m);
    do {
      for (Index x = 0; x < m; ++x) {
        inv[perm[x]] = x;
      }
      for (Index x = 0; x < m; ++x) {
        for (Index s = 0; s < n; ++s) {
          candidate[x * n + s] = perm[act.act(inv[x], s)];
        }
      }
      if (best.empty() || candidate < best) {
        best = candidate;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return FiniteAct::trusted(act.monoid_ptr(), m, std::move(best));
  }

  namespace {

    // An act of size m is a map phi from S to the transformations of the
    // carrier with phi(1) = id and phi(st) = phi(t) after phi(s).
    class ActSearch {
     public:
      ActSearch(MonoidPtr monoid, std::size_t size, std::size_t node_cap)
          : _monoid(std::move(monoid)),
            _n(_monoid->order()),
            _m(size),
            _cap(node_cap),
            _phi(_n) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < _m; ++i) {
          count *= _m;
        }
        _maps.resize(count, std::vector<Index>(_m));
        for (std::size_t code = 0; code < count; ++code) {
          std::size_t rest = code;
          for (std::size_t x = _m; x-- > 0;) {
            _maps[code][x] = static_cast<Index>(rest % _m);
            rest /= _m;
          }
        }
        std::vector<Index> id(_m);
        std::iota(id.begin(), id.end(), Index(0));
        _phi[0] = id;
      }

      template <typename Sink>
      void run(Sink&& sink) {
        std::vector<std::optional<std::vector<Index>>> phi = _phi;
        if (propagate(phi)) {
          recurse(phi, sink);
        }
      }

     private:
      // Closes phi under products; false on a contradiction.
      bool propagate(std::vector<std::optional<std::vector<Index>>>& phi) const {
        std::vector<Index> comp(_m);
        bool               changed = true;
        while (changed) {
          changed = false;
          for (Index s = 0; s < _n; ++s) {
            if (!phi[s]) {
              continue;
            }
            for (Index t = 0; t < _n; ++t) {
              if (!phi[t]) {
                continue;
              }
              for (Index x = 0; x < _m; ++x) {
                comp[x] = (*phi[t])[(*phi[s])[x]];
              }
              auto& st = phi[_monoid->product(s, t)];
              if (!st) {
                st      = comp;
                changed = true;
              } else if (*st != comp) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Sink>
      void recurse(std::vector<std::optional<std::vector<Index>>>& phi, Sink& sink) {
        if (++_nodes > _cap) {
          throw Error(ErrorCode::SizeCapExceeded,
                      "act enumeration exceeded " + str(_cap) + " search nodes");
        }
        Index free = 0;
        while (free < _n && phi[free]) {
          ++free;
        }
        if (free == _n) {
          std::vector<Index> flat(_m * _n);
          for (Index x = 0; x < _m; ++x) {
            for (Index s = 0; s < _n; ++s) {
              flat[x * _n + s] = (*phi[s])[x];
            }
          }
          sink(FiniteAct::trusted(_monoid, _m, std::move(flat)));
          return;
        }
        for (auto const& map : _maps) {
          auto next  = phi;
          next[free] = map;
          if (propagate(next)) {
            recurse(next, sink);
          }
        }
      }

      MonoidPtr                                      _monoid;
      std::size_t                                    _n;
      std::size_t                                    _m;
      std::size_t                                    _cap;
      std::size_t                                    _nodes = 0;
      std::vector<std::optional<std::vector<Index>>> _phi;
      std::vector<std::vector<Index>>                _maps;
    };

  }  // namespace

  std::vector<FiniteAct> enumerate_acts(MonoidPtr const& monoid, std::size_t size,
                                        bool up_to_iso, std::size_t node_cap) {
    if (size == 0) {
      throw Error(ErrorCode::ParamOutOfRange, "acts are nonempty");
    }
    if (size > 4) {
      throw Error(ErrorCode::SizeCapExceeded,
                  "enumerate_acts supports sizes up to 4, got " + str(size));
    }
    std::vector<FiniteAct>            out;
    std::set<std::vector<Index>>      seen;
    ActSearch                         search(monoid, size, node_cap);
    search.run([&](FiniteAct act) {
      if (!up_to_iso) {
        out.push_back(std::move(act));
        return;
      }
      auto canon = canonical_act(act);
      auto rows  = canon.rows();
      std::vector<Index> key;
      for (auto const& r : rows) {
        key.insert(key.end(), r.begin(), r.end());
      }
      if (seen.insert(std::move(key)).second) {
        out.push_back(std::move(canon));
      }
    });
    return out;
  }

}  // namespace acta
