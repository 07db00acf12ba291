#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "object.hpp"

namespace prenormal {

  struct Morphism {
    ObjectPtr dom;
    ObjectPtr cod;
    Table     map;

    Element operator()(Element x) const {
      return map[x];
    }

    friend bool operator==(Morphism const& f, Morphism const& g) {
      return f.map == g.map && same_object(f.dom, g.dom) && same_object(f.cod, g.cod);
    }
  };

  //! Reason why `map` fails to be a structure-preserving map A -> B, or
  //! nothing when it is one.
  inline std::optional<std::string>
  structure_violation(Object const& a, Object const& b, Table const& map) {
    auto const n = a.size;
    auto const m = b.size;
    if (map.size() != n) {
      return "table has " + std::to_string(map.size()) + " entries for a carrier of size "
             + std::to_string(n);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (map[x] < 0 || static_cast<std::size_t>(map[x]) >= m) {
        return "image of " + a.element_name(x) + " is out of range";
      }
    }
    if (!same_signature(a, b)) {
      return "signatures of " + a.name + " and " + b.name + " differ";
    }
    if (a.labelled()) {
      for (std::size_t x = 0; x < n; ++x) {
        if (a.labels[x] != b.labels[map[x]]) {
          return "label of " + a.element_name(x) + " is not preserved";
        }
      }
    }
    for (auto const& [key, c] : a.constants) {
      if (map[c] != b.constants.at(key)) {
        return "constant " + key + " is not preserved";
      }
    }
    for (auto const& [key, t] : a.unary) {
      auto const& u = b.unary.at(key);
      for (std::size_t x = 0; x < n; ++x) {
        if (t[x] == undefined) continue;
        if (u[map[x]] != map[t[x]]) {
          return "operation " + key + " is not preserved at " + a.element_name(x);
        }
      }
    }
    for (auto const& [key, t] : a.binary) {
      auto const& u = b.binary.at(key);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto r = t[x * n + y];
          if (r == undefined) continue;
          if (u[map[x] * m + map[y]] != map[r]) {
            return "operation " + key + " is not preserved at (" + a.element_name(x) + ", "
                   + a.element_name(y) + ")";
          }
        }
      }
    }
    for (auto const& [key, t] : a.relations) {
      auto const& u = b.relations.at(key);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (t[x * n + y] && !u[map[x] * m + map[y]]) {
            return "relation " + key + " is not preserved at (" + a.element_name(x) + ", "
                   + a.element_name(y) + ")";
          }
        }
      }
    }
    for (auto const& [key, t] : a.predicates) {
      auto const& u = b.predicates.at(key);
      for (std::size_t x = 0; x < n; ++x) {
        if (t[x] && !u[map[x]]) {
          return "predicate " + key + " is not preserved at " + a.element_name(x);
        }
      }
    }
    return std::nullopt;
  }

  inline bool preserves_structure(Object const& a, Object const& b, Table const& map) {
    return !structure_violation(a, b, map).has_value();
  }

  //! Builds a morphism after checking it preserves the structure.
  inline Morphism make_morphism(ObjectPtr dom, ObjectPtr cod, Table map) {
    if (auto why = structure_violation(*dom, *cod, map)) {
      fail(ErrorKind::invalid_morphism, *why);
    }
    return Morphism{std::move(dom), std::move(cod), std::move(map)};
  }

  inline Morphism identity(ObjectPtr const& x) {
    Table t(x->size);
    for (std::size_t i = 0; i < x->size; ++i) t[i] = static_cast<Element>(i);
    return Morphism{x, x, std::move(t)};
  }

  //! `f` first, then `g`; the usual g . f.
  inline Morphism compose(Morphism const& f, Morphism const& g) {
    if (!same_object(f.cod, g.dom)) {
      fail(ErrorKind::composition,
           "codomain " + f.cod->name + " does not match domain " + g.dom->name);
    }
    Table t(f.map.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.map[f.map[i]];
    return Morphism{f.dom, g.cod, std::move(t)};
  }

  inline bool is_injective(Morphism const& f) {
    std::vector<std::uint8_t> seen(f.cod->size, 0);
    for (auto v : f.map) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  inline bool is_surjective(Morphism const& f) {
    std::vector<std::uint8_t> seen(f.cod->size, 0);
    std::size_t hit = 0;
    for (auto v : f.map) {
      if (!seen[v]) {
        seen[v] = 1;
        ++hit;
      }
    }
    return hit == f.cod->size;
  }

  inline std::optional<Morphism> inverse(Morphism const& f) {
    if (f.dom->size != f.cod->size || !is_injective(f)) return std::nullopt;
    Table t(f.cod->size);
    for (std::size_t i = 0; i < f.map.size(); ++i) t[f.map[i]] = static_cast<Element>(i);
    if (!preserves_structure(*f.cod, *f.dom, t)) return std::nullopt;
    return Morphism{f.cod, f.dom, std::move(t)};
  }

  inline bool is_iso(Morphism const& f) {
    return inverse(f).has_value();
  }

  //! The morphism g with compose(g, m) == f, when m is injective and the
  //! image of f lies in the image of m and the table preserves structure.
  inline std::optional<Morphism> lift_through(Morphism const& f, Morphism const& m) {
    if (!same_object(f.cod, m.cod)) {
      fail(ErrorKind::composition, "lift_through: codomains differ");
    }
    Table back(m.cod->size, undefined);
    for (std::size_t i = 0; i < m.map.size(); ++i) {
      if (back[m.map[i]] != undefined) return std::nullopt;
      back[m.map[i]] = static_cast<Element>(i);
    }
    Table t(f.map.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = back[f.map[i]];
      if (t[i] == undefined) return std::nullopt;
    }
    if (!preserves_structure(*f.dom, *m.dom, t)) return std::nullopt;
    return Morphism{f.dom, m.dom, std::move(t)};
  }

  //! The morphism g with compose(e, g) == f, when e is surjective, f is
  //! constant on the fibres of e and the table preserves structure.
  inline std::optional<Morphism> descend_along(Morphism const& e, Morphism const& f) {
    if (!same_object(e.dom, f.dom)) {
      fail(ErrorKind::composition, "descend_along: domains differ");
    }
    Table t(e.cod->size, undefined);
    for (std::size_t i = 0; i < e.map.size(); ++i) {
      auto& slot = t[e.map[i]];
      if (slot == undefined) {
        slot = f.map[i];
      } else if (slot != f.map[i]) {
        return std::nullopt;
      }
    }
    for (auto v : t) {
      if (v == undefined) return std::nullopt;
    }
    if (!preserves_structure(*e.cod, *f.cod, t)) return std::nullopt;
    return Morphism{e.cod, f.cod, std::move(t)};
  }

  //! The substructure of x on the elements flagged in `members`, with
  //! every table restricted; results leaving the subset become undefined.
  struct Substructure {
    ObjectPtr object;
    Morphism  inclusion;
    Table     index;  // element of x -> element of the substructure or undefined
  };

  inline Substructure substructure(ObjectPtr const& px, std::vector<std::uint8_t> const& keep,
                                   std::string name) {
    auto const& b = *px;
    Table index(b.size, undefined);
    Table members;
    for (std::size_t y = 0; y < b.size; ++y) {
      if (keep[y]) {
        index[y] = static_cast<Element>(members.size());
        members.push_back(static_cast<Element>(y));
      }
    }
    auto const k = members.size();
    Object im;
    im.backend = b.backend;
    im.name    = std::move(name);
    im.size    = k;
    for (auto y : members) im.names.push_back(b.element_name(y));
    if (b.labelled()) {
      for (auto y : members) im.labels.push_back(b.labels[y]);
    }
    for (auto const& [key, c] : b.constants) {
      if (index[c] == undefined) {
        fail(ErrorKind::invalid_input, "substructure misses constant " + key);
      }
      im.constants[key] = index[c];
    }
    for (auto const& [key, t] : b.unary) {
      Table u(k, undefined);
      for (std::size_t i = 0; i < k; ++i) {
        auto r = t[members[i]];
        u[i]   = r == undefined ? undefined : index[r];
      }
      im.unary[key] = std::move(u);
    }
    for (auto const& [key, t] : b.binary) {
      Table u(k * k, undefined);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          auto r       = t[members[i] * b.size + members[j]];
          u[i * k + j] = r == undefined ? undefined : index[r];
        }
      }
      im.binary[key] = std::move(u);
    }
    for (auto const& [key, t] : b.relations) {
      BitRows u(k * k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          u[i * k + j] = t[members[i] * b.size + members[j]];
        }
      }
      im.relations[key] = std::move(u);
    }
    for (auto const& [key, t] : b.predicates) {
      BitRows u(k, 0);
      for (std::size_t i = 0; i < k; ++i) u[i] = t[members[i]];
      im.predicates[key] = std::move(u);
    }
    auto obj = make_object(std::move(im));
    return {obj, Morphism{obj, px, std::move(members)}, std::move(index)};
  }

  struct ImageFactorisation {
    ObjectPtr object;
    Morphism  corestriction;
    Morphism  inclusion;
  };

  //! The image of f as a substructure of f.cod.
  inline ImageFactorisation image(Morphism const& f) {
    std::vector<std::uint8_t> hit(f.cod->size, 0);
    for (auto v : f.map) hit[v] = 1;
    auto sub = substructure(f.cod, hit, "im(" + f.dom->name + "->" + f.cod->name + ")");
    Table co(f.map.size());
    for (std::size_t i = 0; i < co.size(); ++i) co[i] = sub.index[f.map[i]];
    return {sub.object, Morphism{f.dom, sub.object, std::move(co)}, sub.inclusion};
  }

  //! "A -> B: a |-> b, ..." with element names.
  inline std::string describe(Morphism const& f) {
    std::string out = f.dom->name + " -> " + f.cod->name + ":";
    for (std::size_t i = 0; i < f.map.size(); ++i) {
      out += (i ? ", " : " ") + f.dom->element_name(static_cast<Element>(i)) + " |-> "
             + f.cod->element_name(f.map[i]);
    }
    return out;
  }

}  // namespace prenormal
