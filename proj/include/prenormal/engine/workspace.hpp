#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "../core/backend.hpp"
#include "../core/homs.hpp"
#include "kernel.hpp"

namespace prenormal {

  //! A catalog arrow with the catalog indices of its ends.
  struct Arrow {
    std::size_t dom = 0;
    std::size_t cod = 0;
    Morphism    f;
  };

  //! A finite full subcategory: catalog objects, every hom between them,
  //! and memoised class membership for arrows and for arbitrary morphisms.
  template <Backend B>
  class Workspace {
   public:
    Workspace(B const& backend, std::vector<ObjectPtr> objects)
        : _b(backend), _objects(std::move(objects)), _homs(_objects.size() * _objects.size()),
          _out(_objects.size()), _in(_objects.size()) {
      for (std::size_t i = 0; i < _objects.size(); ++i) {
        _by_print.emplace(_objects[i]->fingerprint(), i);
        _by_ptr.emplace(_objects[i].get(), i);
      }
      for (std::size_t i = 0; i < _objects.size(); ++i) {
        for (std::size_t j = 0; j < _objects.size(); ++j) {
          for_each_hom(_objects[i], _objects[j], [&](Morphism const& f) {
            auto id = _arrows.size();
            _arrows.push_back(Arrow{i, j, f});
            _homs[i * _objects.size() + j].push_back(id);
            _out[i].push_back(id);
            _in[j].push_back(id);
            _lookup.emplace(key(i, j, f.map), id);
            return true;
          });
        }
      }
    }

    Workspace(B const& backend, CatalogCaps const& caps) : Workspace(backend, backend.catalog(caps)) {}

    [[nodiscard]] B const& backend() const {
      return _b;
    }

    [[nodiscard]] std::vector<ObjectPtr> const& objects() const {
      return _objects;
    }

    [[nodiscard]] std::vector<Arrow> const& arrows() const {
      return _arrows;
    }

    [[nodiscard]] Arrow const& arrow(std::size_t id) const {
      return _arrows[id];
    }

    [[nodiscard]] std::vector<std::size_t> const& hom(std::size_t i, std::size_t j) const {
      return _homs[i * _objects.size() + j];
    }

    [[nodiscard]] std::vector<std::size_t> const& out_of(std::size_t i) const {
      return _out[i];
    }

    [[nodiscard]] std::vector<std::size_t> const& into(std::size_t j) const {
      return _in[j];
    }

    //! Catalog index of an object equal (not merely isomorphic) to x.
    [[nodiscard]] std::optional<std::size_t> index_of(ObjectPtr const& x) const {
      if (auto it = _by_ptr.find(x.get()); it != _by_ptr.end()) return it->second;
      auto [lo, hi] = _by_print.equal_range(x->fingerprint());
      for (auto it = lo; it != hi; ++it) {
        if (same_object(_objects[it->second], x)) return it->second;
      }
      return std::nullopt;
    }

    //! Catalog id of a morphism whose ends are catalog objects.
    [[nodiscard]] std::optional<std::size_t> find(Morphism const& f) const {
      auto i = index_of(f.dom);
      auto j = index_of(f.cod);
      if (!i || !j) return std::nullopt;
      auto it = _lookup.find(key(*i, *j, f.map));
      if (it == _lookup.end()) return std::nullopt;
      return it->second;
    }

    [[nodiscard]] bool normal_epi(std::size_t id) const {
      return cached(_normal_epi, id, [&] { return is_normal_epi(_b, _arrows[id].f); });
    }

    [[nodiscard]] bool trivial_kernel(std::size_t id) const {
      return cached(_trivial_kernel, id, [&] { return has_trivial_kernel(_b, _arrows[id].f); });
    }

    [[nodiscard]] bool iso(std::size_t id) const {
      return cached(_iso, id, [&] { return is_iso(_arrows[id].f); });
    }

    [[nodiscard]] bool normal_mono(std::size_t id) const {
      return cached(_normal_mono, id, [&] { return is_normal_mono(_b, _arrows[id].f); });
    }

    [[nodiscard]] bool trivial_map(std::size_t id) const {
      return cached(_trivial_map, id, [&] { return _b.is_trivial_map(_arrows[id].f); });
    }

    [[nodiscard]] bool epi(std::size_t id) const {
      return cached(_epi, id, [&] { return is_epi(_b, _arrows[id].f, _objects); });
    }

    [[nodiscard]] bool mono(std::size_t id) const {
      return cached(_mono, id, [&] { return is_mono(_b, _arrows[id].f, _objects); });
    }

    //! Regular epi test, or nothing when the backend has no coequalizers.
    [[nodiscard]] std::optional<bool> regular_epi(std::size_t id) const {
      if constexpr (HasQuotient<B>) {
        return cached(_regular_epi, id, [&] { return is_regular_epi(_b, _arrows[id].f); });
      } else {
        return std::nullopt;
      }
    }

    //! Normal epi test for any morphism, using the catalog cache when the
    //! morphism is a catalog arrow.
    [[nodiscard]] bool normal_epi(Morphism const& f) const {
      if (auto id = find(f)) return normal_epi(*id);
      return is_normal_epi(_b, f);
    }

    [[nodiscard]] bool trivial_kernel(Morphism const& f) const {
      if (auto id = find(f)) return trivial_kernel(*id);
      return has_trivial_kernel(_b, f);
    }

    [[nodiscard]] bool epi(Morphism const& f) const {
      if (auto id = find(f)) return epi(*id);
      return is_epi(_b, f, _objects);
    }

    [[nodiscard]] std::optional<bool> regular_epi(Morphism const& f) const {
      if (auto id = find(f)) return regular_epi(*id);
      if constexpr (HasQuotient<B>) {
        return is_regular_epi(_b, f);
      } else {
        return std::nullopt;
      }
    }

    [[nodiscard]] std::string describe(std::size_t id) const {
      auto const& a = _arrows[id];
      return a.f.dom->name + " -> " + a.f.cod->name;
    }

   private:
    using Key = std::pair<std::size_t, Table>;

    struct KeyHash {
      std::size_t operator()(Key const& k) const {
        std::size_t h = k.first * 0x9e3779b97f4a7c15ULL;
        for (auto v : k.second) h ^= static_cast<std::size_t>(v + 1) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
      }
    };

    [[nodiscard]] Key key(std::size_t i, std::size_t j, Table const& t) const {
      return Key{i * _objects.size() + j, t};
    }

    template <typename F>
    bool cached(std::vector<std::int8_t>& memo, std::size_t id, F compute) const {
      if (memo.empty()) memo.assign(_arrows.size(), -1);
      if (memo[id] < 0) memo[id] = compute() ? 1 : 0;
      return memo[id] != 0;
    }

    B                                                 _b;
    std::vector<ObjectPtr>                            _objects;
    std::vector<Arrow>                                _arrows;
    std::vector<std::vector<std::size_t>>             _homs;
    std::vector<std::vector<std::size_t>>             _out;
    std::vector<std::vector<std::size_t>>             _in;
    std::multimap<std::size_t, std::size_t>           _by_print;
    std::unordered_map<Object const*, std::size_t>    _by_ptr;
    std::unordered_map<Key, std::size_t, KeyHash>     _lookup;
    mutable std::vector<std::int8_t>                  _normal_epi;
    mutable std::vector<std::int8_t>                  _trivial_kernel;
    mutable std::vector<std::int8_t>                  _iso;
    mutable std::vector<std::int8_t>                  _normal_mono;
    mutable std::vector<std::int8_t>                  _trivial_map;
    mutable std::vector<std::int8_t>                  _epi;
    mutable std::vector<std::int8_t>                  _mono;
    mutable std::vector<std::int8_t>                  _regular_epi;
  };

}  // namespace prenormal
