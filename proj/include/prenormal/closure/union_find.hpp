#pragma once

#include <numeric>
#include <vector>

#include "../core/object.hpp"

namespace prenormal {

  //! Disjoint sets whose root is always the least element of its class.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n) {
      std::iota(_parent.begin(), _parent.end(), Element{0});
    }

    Element find(Element x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    //! Returns true when two distinct classes were merged.
    bool unite(Element x, Element y) {
      auto rx = find(x);
      auto ry = find(y);
      if (rx == ry) return false;
      if (rx < ry) {
        _parent[ry] = rx;
      } else {
        _parent[rx] = ry;
      }
      return true;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _parent.size();
    }

    Table representatives() {
      Table r(_parent.size());
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = find(static_cast<Element>(i));
      return r;
    }

   private:
    Table _parent;
  };

}  // namespace prenormal
