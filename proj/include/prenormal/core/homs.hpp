#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "morphism.hpp"

namespace prenormal {

  struct HomSearchOptions {
    bool        injective_only = false;
    std::size_t limit          = 0;  // 0 means no limit
  };

  namespace detail {

    //! Backtracking search for structure-preserving maps with forced-value
    //! propagation through the operations of the domain.
    class HomSearch {
     public:
      HomSearch(Object const& a, Object const& b, HomSearchOptions opts)
          : _a(a), _b(b), _opts(opts), _f(a.size, undefined), _involving(a.size),
            _used(b.size, 0) {
        std::size_t op_index = 0;
        for (auto const& [key, t] : a.unary) {
          _unary_b.push_back(&b.unary.at(key));
          for (std::size_t x = 0; x < a.size; ++x) {
            if (t[x] == undefined) continue;
            add({Kind::unary, op_index, static_cast<Element>(x), undefined, t[x]});
          }
          ++op_index;
        }
        op_index = 0;
        for (auto const& [key, t] : a.binary) {
          _binary_b.push_back(&b.binary.at(key));
          for (std::size_t x = 0; x < a.size; ++x) {
            for (std::size_t y = 0; y < a.size; ++y) {
              auto r = t[x * a.size + y];
              if (r == undefined) continue;
              add({Kind::binary, op_index, static_cast<Element>(x), static_cast<Element>(y), r});
            }
          }
          ++op_index;
        }
        op_index = 0;
        for (auto const& [key, t] : a.relations) {
          _relation_b.push_back(&b.relations.at(key));
          for (std::size_t x = 0; x < a.size; ++x) {
            for (std::size_t y = 0; y < a.size; ++y) {
              if (!t[x * a.size + y]) continue;
              add({Kind::relation, op_index, static_cast<Element>(x), static_cast<Element>(y),
                   undefined});
            }
          }
          ++op_index;
        }
        for (auto const& [key, t] : a.predicates) {
          _predicates.emplace_back(&t, &b.predicates.at(key));
        }
      }

      void run(std::function<bool(Table const&)> const& visit) {
        _visit = &visit;
        if (!same_signature(_a, _b)) return;
        if (_opts.injective_only && _a.size > _b.size) return;
        for (auto const& [key, c] : _a.constants) {
          auto target = _b.constants.at(key);
          if (_f[c] == undefined) {
            if (!assign(c, target)) return;
          } else if (_f[c] != target) {
            return;
          }
        }
        search(0);
      }

     private:
      enum class Kind { unary, binary, relation };
      struct Constraint {
        Kind        kind;
        std::size_t op;
        Element     x;
        Element     y;
        Element     result;
      };

      void add(Constraint c) {
        auto idx = _constraints.size();
        _constraints.push_back(c);
        _involving[c.x].push_back(idx);
        if (c.y != undefined && c.y != c.x) _involving[c.y].push_back(idx);
        if (c.result != undefined && c.result != c.x && c.result != c.y) {
          _involving[c.result].push_back(idx);
        }
      }

      bool allowed(Element x, Element v) const {
        if (_a.labelled() && _a.labels[x] != _b.labels[v]) return false;
        for (auto const& [pa, pb] : _predicates) {
          if ((*pa)[x] && !(*pb)[v]) return false;
        }
        if (_opts.injective_only && _used[v]) return false;
        return true;
      }

      bool set(Element x, Element v) {
        if (!allowed(x, v)) return false;
        _f[x] = v;
        if (_opts.injective_only) _used[v] = 1;
        _trail.push_back(x);
        _queue.push_back(x);
        return true;
      }

      bool assign(Element x, Element v) {
        _queue.clear();
        if (!set(x, v)) return false;
        while (!_queue.empty()) {
          auto y = _queue.back();
          _queue.pop_back();
          for (auto idx : _involving[y]) {
            if (!check(_constraints[idx])) return false;
          }
        }
        return true;
      }

      bool check(Constraint const& c) {
        auto const m = _b.size;
        switch (c.kind) {
          case Kind::unary: {
            if (_f[c.x] == undefined) return true;
            auto w = (*_unary_b[c.op])[_f[c.x]];
            if (w == undefined) return false;
            if (_f[c.result] == undefined) return set(c.result, w);
            return _f[c.result] == w;
          }
          case Kind::binary: {
            if (_f[c.x] == undefined || _f[c.y] == undefined) return true;
            auto w = (*_binary_b[c.op])[_f[c.x] * m + _f[c.y]];
            if (w == undefined) return false;
            if (_f[c.result] == undefined) return set(c.result, w);
            return _f[c.result] == w;
          }
          case Kind::relation: {
            if (_f[c.x] == undefined || _f[c.y] == undefined) return true;
            return (*_relation_b[c.op])[_f[c.x] * m + _f[c.y]] != 0;
          }
        }
        return false;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          auto x = _trail.back();
          _trail.pop_back();
          if (_opts.injective_only) _used[_f[x]] = 0;
          _f[x] = undefined;
        }
      }

      bool search(std::size_t from) {
        while (from < _a.size && _f[from] != undefined) ++from;
        if (from == _a.size) {
          ++_found;
          if (!(*_visit)(_f)) return false;
          return _opts.limit == 0 || _found < _opts.limit;
        }
        auto const x = static_cast<Element>(from);
        for (std::size_t v = 0; v < _b.size; ++v) {
          auto mark = _trail.size();
          bool ok   = assign(x, static_cast<Element>(v));
          if (ok && !search(from + 1)) {
            undo(mark);
            return false;
          }
          undo(mark);
        }
        return true;
      }

      Object const&                    _a;
      Object const&                    _b;
      HomSearchOptions                 _opts;
      Table                            _f;
      std::vector<std::vector<std::size_t>> _involving;
      std::vector<Constraint>          _constraints;
      std::vector<Table const*>        _unary_b;
      std::vector<Table const*>        _binary_b;
      std::vector<BitRows const*>      _relation_b;
      std::vector<std::pair<BitRows const*, BitRows const*>> _predicates;
      std::vector<std::uint8_t>        _used;
      std::vector<Element>             _trail;
      std::vector<Element>             _queue;
      std::function<bool(Table const&)> const* _visit = nullptr;
      std::size_t                      _found = 0;
    };

  }  // namespace detail

  //! Calls `visit` with the table of every structure-preserving map a -> b;
  //! stop early by returning false.
  inline void for_each_hom(ObjectPtr const& a, ObjectPtr const& b,
                           std::function<bool(Morphism const&)> const& visit,
                           HomSearchOptions opts = {}) {
    detail::HomSearch search(*a, *b, opts);
    std::function<bool(Table const&)> raw = [&](Table const& t) {
      return visit(Morphism{a, b, t});
    };
    search.run(raw);
  }

  inline std::vector<Morphism> homs(ObjectPtr const& a, ObjectPtr const& b,
                                    HomSearchOptions opts = {}) {
    std::vector<Morphism> out;
    for_each_hom(
        a, b,
        [&](Morphism const& f) {
          out.push_back(f);
          return true;
        },
        opts);
    return out;
  }

  inline std::optional<Morphism> find_isomorphism(ObjectPtr const& a, ObjectPtr const& b) {
    if (a->size != b->size || !same_signature(*a, *b)) return std::nullopt;
    std::optional<Morphism> found;
    for_each_hom(
        a, b,
        [&](Morphism const& f) {
          if (is_iso(f)) {
            found = f;
            return false;
          }
          return true;
        },
        HomSearchOptions{true, 0});
    return found;
  }

  inline bool isomorphic(ObjectPtr const& a, ObjectPtr const& b) {
    return find_isomorphism(a, b).has_value();
  }

  //! Keeps the first representative of every isomorphism class.
  inline std::vector<ObjectPtr> dedup_up_to_iso(std::vector<ObjectPtr> const& objs) {
    std::vector<ObjectPtr> out;
    for (auto const& x : objs) {
      bool fresh = true;
      for (auto const& y : out) {
        if (isomorphic(x, y)) {
          fresh = false;
          break;
        }
      }
      if (fresh) out.push_back(x);
    }
    return out;
  }

}  // namespace prenormal
