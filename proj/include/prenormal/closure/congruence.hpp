#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "../core/morphism.hpp"
#include "../core/signature.hpp"
#include "union_find.hpp"

namespace prenormal {

  enum class CongruenceKind {
    equivalence,  // plain equivalence relation on the carrier
    preorder,     // reflexive transitive relation
    algebraic,    // equivalence compatible with every operation
    groupoid,     // congruence of a groupoid induced by a normal subgroupoid
  };

  using PairList = std::vector<std::pair<Element, Element>>;

  struct Congruence {
    CongruenceKind kind = CongruenceKind::equivalence;
    std::size_t    size = 0;
    BitRows        pairs;
    //! Least element of the class, for the symmetric kinds.
    Table representative;

    [[nodiscard]] bool contains(Element a, Element b) const {
      return pairs[a * size + b] != 0;
    }

    [[nodiscard]] bool symmetric() const noexcept {
      return kind != CongruenceKind::preorder;
    }

    [[nodiscard]] std::size_t class_count() const {
      std::size_t c = 0;
      for (std::size_t i = 0; i < representative.size(); ++i) {
        c += representative[i] == static_cast<Element>(i);
      }
      return c;
    }

    [[nodiscard]] std::vector<std::vector<Element>> classes() const {
      std::vector<std::vector<Element>> out;
      Table slot(size, undefined);
      for (std::size_t i = 0; i < size; ++i) {
        auto r = representative[i];
        if (slot[r] == undefined) {
          slot[r] = static_cast<Element>(out.size());
          out.emplace_back();
        }
        out[slot[r]].push_back(static_cast<Element>(i));
      }
      return out;
    }
  };

  inline BitRows transitive_closure(BitRows r, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!r[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (r[k * n + j]) r[i * n + j] = 1;
        }
      }
    }
    return r;
  }

  inline BitRows reflexive_transitive_closure(BitRows r, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
    return transitive_closure(std::move(r), n);
  }

  inline BitRows equivalence_closure(BitRows r, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r[i * n + j]) r[j * n + i] = 1;
      }
    }
    return reflexive_transitive_closure(std::move(r), n);
  }

  namespace detail {
    inline Congruence from_union_find(UnionFind& uf, CongruenceKind kind) {
      Congruence c;
      c.kind           = kind;
      c.size           = uf.size();
      c.representative = uf.representatives();
      c.pairs.assign(c.size * c.size, 0);
      for (std::size_t i = 0; i < c.size; ++i) {
        for (std::size_t j = 0; j < c.size; ++j) {
          c.pairs[i * c.size + j] = c.representative[i] == c.representative[j];
        }
      }
      return c;
    }

    inline void check_seed(Object const& x, PairList const& seed) {
      for (auto const& [a, b] : seed) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= x.size
            || static_cast<std::size_t>(b) >= x.size) {
          fail(ErrorKind::invalid_input, "seed pair outside the carrier");
        }
      }
    }

    inline bool is_identity_arrow(Object const& g, Element a) {
      return g.unary_table(sig::src)[a] == a;
    }
  }  // namespace detail

  //! The normal subgroupoid generated by `arrows`: closed under identities,
  //! inverses, composition and conjugation of vertex loops.
  inline std::vector<std::uint8_t> normal_subgroupoid(Object const& g, Table const& arrows) {
    auto const  n    = g.size;
    auto const& src  = g.unary_table(sig::src);
    auto const& tgt  = g.unary_table(sig::tgt);
    auto const& inv  = g.unary_table(sig::inv);
    auto const& comp = g.binary_table(sig::comp);
    std::vector<std::uint8_t> in(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (src[a] == static_cast<Element>(a)) in[a] = 1;
    }
    for (auto a : arrows) {
      in[a]      = 1;
      in[inv[a]] = 1;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (!in[a]) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (in[b]) {
            auto c = comp[a * n + b];
            if (c != undefined && !in[c]) {
              in[c]   = 1;
              changed = true;
            }
          }
          // conjugate a loop a at x by an arrow b : x -> y
          if (src[a] == tgt[a] && src[b] == src[a]) {
            auto c = comp[comp[inv[b] * n + a] * n + b];
            if (!in[c]) {
              in[c]   = 1;
              changed = true;
            }
          }
        }
      }
    }
    return in;
  }

  //! The congruence of a groupoid whose classes are the double cosets
  //! n . g . n' of a normal subgroupoid.
  inline Congruence groupoid_congruence(Object const& g, std::vector<std::uint8_t> const& normal) {
    auto const  n    = g.size;
    auto const& src  = g.unary_table(sig::src);
    auto const& tgt  = g.unary_table(sig::tgt);
    auto const& comp = g.binary_table(sig::comp);
    UnionFind   uf(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t m = 0; m < n; ++m) {
        if (!normal[m]) continue;
        if (tgt[m] == src[a]) uf.unite(a, comp[m * n + a]);
        if (src[m] == tgt[a]) uf.unite(a, comp[a * n + m]);
      }
    }
    return detail::from_union_find(uf, CongruenceKind::groupoid);
  }

  //! The equivalence relating elements with the same image under f.
  inline Congruence kernel_congruence(Morphism const& f, CongruenceKind kind) {
    UnionFind uf(f.dom->size);
    Table first(f.cod->size, undefined);
    for (std::size_t i = 0; i < f.map.size(); ++i) {
      auto& slot = first[f.map[i]];
      if (slot == undefined) {
        slot = static_cast<Element>(i);
      } else {
        uf.unite(slot, static_cast<Element>(i));
      }
    }
    return detail::from_union_find(uf, kind);
  }

  //! The smallest congruence of the given kind containing `seed`.
  inline Congruence smallest_congruence(Object const& x, PairList const& seed,
                                        CongruenceKind kind) {
    detail::check_seed(x, seed);
    auto const n = x.size;
    switch (kind) {
      case CongruenceKind::equivalence: {
        UnionFind uf(n);
        for (auto const& [a, b] : seed) uf.unite(a, b);
        return detail::from_union_find(uf, kind);
      }
      case CongruenceKind::preorder: {
        BitRows r(n * n, 0);
        for (auto const& [a, b] : seed) r[a * n + b] = 1;
        Congruence c;
        c.kind  = kind;
        c.size  = n;
        c.pairs = reflexive_transitive_closure(std::move(r), n);
        return c;
      }
      case CongruenceKind::algebraic: {
        UnionFind uf(n);
        PairList  pending(seed.rbegin(), seed.rend());
        std::vector<Table const*> unary;
        std::vector<Table const*> binary;
        for (auto const& [k, t] : x.unary) unary.push_back(&t);
        for (auto const& [k, t] : x.binary) binary.push_back(&t);
        while (!pending.empty()) {
          auto [a, b] = pending.back();
          pending.pop_back();
          if (!uf.unite(a, b)) continue;
          for (auto const* t : unary) {
            auto ua = (*t)[a];
            auto ub = (*t)[b];
            if (ua != undefined && ub != undefined) pending.emplace_back(ua, ub);
          }
          for (auto const* t : binary) {
            for (std::size_t c = 0; c < n; ++c) {
              auto ac = (*t)[a * n + c];
              auto bc = (*t)[b * n + c];
              if (ac != undefined && bc != undefined) pending.emplace_back(ac, bc);
              auto ca = (*t)[c * n + a];
              auto cb = (*t)[c * n + b];
              if (ca != undefined && cb != undefined) pending.emplace_back(ca, cb);
            }
          }
        }
        return detail::from_union_find(uf, kind);
      }
      case CongruenceKind::groupoid: {
        Table kill;
        auto const& src = x.unary_table(sig::src);
        auto const& tgt = x.unary_table(sig::tgt);
        auto const& inv = x.unary_table(sig::inv);
        auto const& cmp = x.binary_table(sig::comp);
        for (auto const& [a, b] : seed) {
          if (detail::is_identity_arrow(x, b)) {
            kill.push_back(a);
          } else if (detail::is_identity_arrow(x, a)) {
            kill.push_back(b);
          } else if (src[a] == src[b] && tgt[a] == tgt[b]) {
            kill.push_back(cmp[a * n + inv[b]]);
          } else {
            fail(ErrorKind::unsupported,
                 "groupoid congruence seeded by non-parallel arrows");
          }
        }
        return groupoid_congruence(x, normal_subgroupoid(x, kill));
      }
    }
    fail(ErrorKind::backend_bug, "unknown congruence kind");
  }

  //! Whether `c` is compatible with every operation of `x` (where defined on
  //! both sides).
  inline std::optional<std::string> compatibility_violation(Object const& x, Congruence const& c) {
    auto const n = x.size;
    for (auto const& [key, t] : x.unary) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!c.contains(a, b) || t[a] == undefined || t[b] == undefined) continue;
          if (!c.contains(t[a], t[b])) {
            return key + " separates " + x.element_name(a) + " ~ " + x.element_name(b);
          }
        }
      }
    }
    for (auto const& [key, t] : x.binary) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!c.contains(a, b)) continue;
          for (std::size_t z = 0; z < n; ++z) {
            auto az = t[a * n + z];
            auto bz = t[b * n + z];
            if (az != undefined && bz != undefined && !c.contains(az, bz)) {
              return key + " separates " + x.element_name(a) + " ~ " + x.element_name(b)
                     + " on the right by " + x.element_name(z);
            }
            auto za = t[z * n + a];
            auto zb = t[z * n + b];
            if (za != undefined && zb != undefined && !c.contains(za, zb)) {
              return key + " separates " + x.element_name(a) + " ~ " + x.element_name(b)
                     + " on the left by " + x.element_name(z);
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  struct QuotientResult {
    ObjectPtr  object;
    Morphism   projection;
    Congruence congruence;
    //! Set when a closure step on a relation of the quotient added pairs.
    bool       relation_closure_added = false;
  };

  //! Quotient by a symmetric congruence.  Operations descend along
  //! representatives (and must be well defined), relations and predicates
  //! take their existential image, labels must be constant on classes.
  //! Classes are numbered by their least element.
  inline QuotientResult quotient(ObjectPtr const& px, Congruence const& c) {
    auto const& x = *px;
    if (!c.symmetric()) {
      fail(ErrorKind::congruence_invalid, "quotient by a non-symmetric relation");
    }
    if (c.size != x.size) {
      fail(ErrorKind::invalid_input, "congruence size does not match the carrier");
    }
    auto const n = x.size;
    Table cls(n, undefined);
    Table reps;
    std::vector<std::size_t> class_size;
    for (std::size_t i = 0; i < n; ++i) {
      auto r = c.representative[i];
      if (r == static_cast<Element>(i)) {
        cls[i] = static_cast<Element>(reps.size());
        reps.push_back(static_cast<Element>(i));
        class_size.push_back(0);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      cls[i] = cls[c.representative[i]];
      ++class_size[cls[i]];
    }
    auto const k = reps.size();
    Object q;
    q.backend = x.backend;
    q.name    = x.name + "/~";
    q.size    = k;
    for (std::size_t i = 0; i < k; ++i) {
      auto nm = x.element_name(reps[i]);
      q.names.push_back(class_size[i] > 1 ? "[" + nm + "]" : nm);
    }
    if (x.labelled()) {
      q.labels.assign(k, undefined);
      for (std::size_t i = 0; i < n; ++i) {
        auto& l = q.labels[cls[i]];
        if (l == undefined) {
          l = x.labels[i];
        } else if (l != x.labels[i]) {
          fail(ErrorKind::congruence_invalid,
               "class of " + x.element_name(i) + " mixes labels");
        }
      }
    }
    for (auto const& [key, e] : x.constants) q.constants[key] = cls[e];
    auto descend = [&](Element r) { return r == undefined ? undefined : cls[r]; };
    for (auto const& [key, t] : x.unary) {
      Table u(k, undefined);
      std::vector<std::uint8_t> seen(k, 0);
      for (std::size_t a = 0; a < n; ++a) {
        auto v = descend(t[a]);
        auto i = cls[a];
        if (!seen[i]) {
          seen[i] = 1;
          u[i]    = v;
        } else if (u[i] != v) {
          fail(ErrorKind::congruence_invalid,
               key + " is not well defined on the class of " + x.element_name(a));
        }
      }
      q.unary[key] = std::move(u);
    }
    for (auto const& [key, t] : x.binary) {
      Table u(k * k, undefined);
      std::vector<std::uint8_t> seen(k * k, 0);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          auto v    = descend(t[a * n + b]);
          auto slot = cls[a] * k + cls[b];
          if (!seen[slot]) {
            seen[slot] = 1;
            u[slot]    = v;
          } else if (u[slot] != v) {
            fail(ErrorKind::congruence_invalid,
                 key + " is not well defined at (" + x.element_name(a) + ", "
                     + x.element_name(b) + ")");
          }
        }
      }
      q.binary[key] = std::move(u);
    }
    for (auto const& [key, t] : x.relations) {
      BitRows u(k * k, 0);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (t[a * n + b]) u[cls[a] * k + cls[b]] = 1;
        }
      }
      q.relations[key] = std::move(u);
    }
    for (auto const& [key, t] : x.predicates) {
      BitRows u(k, 0);
      for (std::size_t a = 0; a < n; ++a) {
        if (t[a]) u[cls[a]] = 1;
      }
      q.predicates[key] = std::move(u);
    }
    auto obj = make_object(std::move(q));
    return QuotientResult{obj, Morphism{px, obj, std::move(cls)}, c, false};
  }

  //! Replaces relation `key` of `r.object` by its closure (`close` maps a
  //! relation matrix and size to the closed matrix) and records whether the
  //! closure added anything.
  template <typename Close>
  QuotientResult close_relation(QuotientResult r, std::string const& key, Close close) {
    Object q        = *r.object;
    auto const& old = q.relations.at(key);
    auto closed     = close(old, q.size);
    bool added      = closed != old;
    q.relations[key] = std::move(closed);
    auto obj         = make_object(std::move(q));
    r.relation_closure_added = r.relation_closure_added || added;
    r.projection.cod          = obj;
    r.object                  = obj;
    return r;
  }

}  // namespace prenormal
