#pragma once

#include <string>
#include <utility>
#include <vector>

#include "morphism.hpp"

namespace prenormal {

  //! A pullback (or product) object with its two projections.  The carrier
  //! consists of the pairs (a, b) with matching images, in lexicographic
  //! order; `index` maps a pair to its element or `undefined`.
  struct PullbackResult {
    ObjectPtr object;
    Morphism  left;
    Morphism  right;
    Table     index;
    std::size_t right_size = 0;

    [[nodiscard]] Element pair(Element a, Element b) const {
      return index[a * right_size + b];
    }

    //! The mediating map T -> object of a cone (u, v), or nothing when the
    //! cone does not land in the pullback.
    [[nodiscard]] std::optional<Morphism> mediator(Morphism const& u, Morphism const& v) const {
      Table t(u.map.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = pair(u.map[i], v.map[i]);
        if (t[i] == undefined) return std::nullopt;
      }
      return Morphism{u.dom, object, std::move(t)};
    }
  };

  namespace detail {
    template <typename Keep>
    PullbackResult pair_object(ObjectPtr const& pa, ObjectPtr const& pb, Keep keep,
                               std::string name) {
      auto const& a = *pa;
      auto const& b = *pb;
      if (!same_signature(a, b)) {
        fail(ErrorKind::unsupported_limit,
             "cannot form a limit of objects with different signatures");
      }
      auto const n = a.size;
      auto const m = b.size;
      Table index(n * m, undefined);
      Table first;
      Table second;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
          if (keep(static_cast<Element>(x), static_cast<Element>(y))) {
            index[x * m + y] = static_cast<Element>(first.size());
            first.push_back(static_cast<Element>(x));
            second.push_back(static_cast<Element>(y));
          }
        }
      }
      auto const k = first.size();
      Object p;
      p.backend = a.backend;
      p.name    = std::move(name);
      p.size    = k;
      p.names.reserve(k);
      for (std::size_t i = 0; i < k; ++i) {
        p.names.push_back("(" + a.element_name(first[i]) + "," + b.element_name(second[i]) + ")");
      }
      if (a.labelled()) {
        for (std::size_t i = 0; i < k; ++i) {
          if (a.labels[first[i]] != b.labels[second[i]]) {
            fail(ErrorKind::backend_bug, "pair with mismatched labels");
          }
          p.labels.push_back(a.labels[first[i]]);
        }
      }
      auto pair_of = [&](Element x, Element y) -> Element {
        if (x == undefined || y == undefined) return undefined;
        return index[x * m + y];
      };
      for (auto const& [key, c] : a.constants) {
        auto e = pair_of(c, b.constants.at(key));
        if (e == undefined) {
          fail(ErrorKind::unsupported_limit, "constant " + key + " has no pair in the limit");
        }
        p.constants[key] = e;
      }
      for (auto const& [key, t] : a.unary) {
        auto const& u = b.unary.at(key);
        Table r(k, undefined);
        for (std::size_t i = 0; i < k; ++i) {
          r[i] = pair_of(t[first[i]], u[second[i]]);
        }
        p.unary[key] = std::move(r);
      }
      for (auto const& [key, t] : a.binary) {
        auto const& u = b.binary.at(key);
        Table r(k * k, undefined);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            r[i * k + j] = pair_of(t[first[i] * n + first[j]], u[second[i] * m + second[j]]);
          }
        }
        p.binary[key] = std::move(r);
      }
      for (auto const& [key, t] : a.relations) {
        auto const& u = b.relations.at(key);
        BitRows r(k * k, 0);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            r[i * k + j] = t[first[i] * n + first[j]] && u[second[i] * m + second[j]];
          }
        }
        p.relations[key] = std::move(r);
      }
      for (auto const& [key, t] : a.predicates) {
        auto const& u = b.predicates.at(key);
        BitRows r(k, 0);
        for (std::size_t i = 0; i < k; ++i) r[i] = t[first[i]] && u[second[i]];
        p.predicates[key] = std::move(r);
      }
      auto obj = make_object(std::move(p));
      PullbackResult res{obj,
                         Morphism{obj, pa, std::move(first)},
                         Morphism{obj, pb, std::move(second)},
                         std::move(index),
                         m};
      return res;
    }
  }  // namespace detail

  //! Binary product.  Labelled objects pair only elements with equal labels
  //! (the product in the slice or functor category).
  inline PullbackResult product(ObjectPtr const& a, ObjectPtr const& b) {
    auto const& la = a->labels;
    auto const& lb = b->labels;
    bool labelled  = a->labelled();
    return detail::pair_object(
        a, b,
        [&](Element x, Element y) { return !labelled || la[x] == lb[y]; },
        a->name + "×" + b->name);
  }

  //! Pullback of a cospan f : A -> C <- B : g.
  inline PullbackResult pullback(Morphism const& f, Morphism const& g) {
    if (!same_object(f.cod, g.cod)) {
      fail(ErrorKind::composition, "pullback of morphisms with different codomains");
    }
    return detail::pair_object(
        f.dom, g.dom, [&](Element x, Element y) { return f.map[x] == g.map[y]; },
        f.dom->name + "×_" + f.cod->name + g.dom->name);
  }

  //! A commutative square
  //!
  //!     X --top--> B
  //!     |          |
  //!   left       right
  //!     v          v
  //!     A -bottom-> D
  struct Square {
    Morphism top;
    Morphism left;
    Morphism right;
    Morphism bottom;

    [[nodiscard]] bool commutes() const {
      return compose(top, right).map == compose(left, bottom).map;
    }
  };

  //! The comparison X -> A ×_D B of a commutative square.
  inline Morphism pullback_comparison(Square const& s, PullbackResult const& pb) {
    auto m = pb.mediator(s.left, s.top);
    if (!m) fail(ErrorKind::invalid_input, "square does not commute");
    return *m;
  }

  inline bool is_pullback(Square const& s) {
    if (!s.commutes()) fail(ErrorKind::invalid_input, "square does not commute");
    auto const n = s.bottom.dom->size;
    auto const m = s.right.dom->size;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < m; ++b) pairs += s.bottom.map[a] == s.right.map[b];
    }
    if (pairs != s.left.dom->size) return false;
    std::vector<std::uint8_t> hit(n * m, 0);
    for (std::size_t x = 0; x < pairs; ++x) {
      auto& h = hit[s.left.map[x] * m + s.top.map[x]];
      if (h) return false;
      h = 1;
    }
    auto pb = pullback(s.bottom, s.right);
    return is_iso(pullback_comparison(s, pb));
  }

}  // namespace prenormal
