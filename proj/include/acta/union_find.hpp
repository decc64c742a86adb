#ifndef ACTA_UNION_FIND_HPP_
#define ACTA_UNION_FIND_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace acta {

  // Disjoint sets with path compression and union by size.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1), _sets(n) {
      std::iota(_parent.begin(), _parent.end(), std::size_t(0));
    }

    std::size_t find(std::size_t x) {
      std::size_t root = x;
      while (_parent[root] != root) {
        root = _parent[root];
      }
      while (_parent[x] != root) {
        std::size_t next = _parent[x];
        _parent[x]       = root;
        x                = next;
      }
      return root;
    }

    // Returns false if x and y were already joined.
    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (_size[x] < _size[y]) {
        std::swap(x, y);
      }
      _parent[y] = x;
      _size[x] += _size[y];
      --_sets;
      return true;
    }

    bool same(std::size_t x, std::size_t y) {
      return find(x) == find(y);
    }

    std::size_t set_count() const noexcept {
      return _sets;
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

    // Dense labels 0..k-1 numbered by least member.
    template <typename Label = std::uint32_t>
    std::vector<Label> labels() {
      std::size_t const  n = _parent.size();
      std::vector<Label> root_label(n, static_cast<Label>(-1));
      std::vector<Label> out(n);
      Label              next = 0;
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t r = find(x);
        if (root_label[r] == static_cast<Label>(-1)) {
          root_label[r] = next++;
        }
        out[x] = root_label[r];
      }
      return out;
    }

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
    std::size_t              _sets;
  };

}  // namespace acta

#endif  // ACTA_UNION_FIND_HPP_
