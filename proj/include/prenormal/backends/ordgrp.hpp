#pragma once

#include <string>
#include <utility>
#include <vector>

#include "../core/homs.hpp"
#include "common.hpp"
#include "groupoid.hpp"

namespace prenormal {

  //! Finite preordered groups as pairs (G, M) with M a submonoid closed
  //! under conjugation (the predicate `positive`).  The trivial objects
  //! are the pairs (G, 0).
  class OrdGrp {
   public:
    static constexpr char const* tag_name = "ordgrp";

    [[nodiscard]] std::string tag() const {
      return tag_name;
    }

    void validate_object(Object const& x) const {
      detail::require(x.backend == tag_name, x, "backend tag is not ordgrp");
      detail::require_signature(x, {sig::unit}, {sig::inv}, {sig::op}, {}, {sig::positive});
      detail::require_monoid(x, false);
      auto const  n   = x.size;
      auto const& t   = x.binary_table(sig::op);
      auto const& inv = x.unary_table(sig::inv);
      auto const& pos = x.predicate(sig::positive);
      auto e          = x.constant(sig::unit);
      detail::require(pos[e] != 0, x, "the unit is not positive");
      for (std::size_t a = 0; a < n; ++a) {
        detail::require(inv[a] != undefined && t[a * n + inv[a]] == e, x, "inv is not an inverse");
        for (std::size_t b = 0; b < n; ++b) {
          if (!pos[a]) continue;
          if (pos[b]) detail::require(pos[t[a * n + b]] != 0, x, "positives not closed under op");
          detail::require(pos[t[t[inv[b] * n + a] * n + b]] != 0, x,
                          "positives not closed under conjugation");
        }
      }
    }

    [[nodiscard]] bool is_trivial(Object const& x) const {
      auto const& pos = x.predicate(sig::positive);
      for (std::size_t a = 0; a < x.size; ++a) {
        if (pos[a] && static_cast<Element>(a) != x.constant(sig::unit)) return false;
      }
      return true;
    }

    [[nodiscard]] Coreflection coreflection(ObjectPtr const& x) const {
      auto g = with_positive(x, {x->constant(sig::unit)}, "(" + x->name + ",0)");
      return Coreflection{g, identity_on_carrier(g, x)};
    }

    //! Positive elements go to the unit.
    [[nodiscard]] bool is_trivial_map(Morphism const& f) const {
      auto const& pos = f.dom->predicate(sig::positive);
      auto e          = f.cod->constant(sig::unit);
      for (std::size_t a = 0; a < f.dom->size; ++a) {
        if (pos[a] && f.map[a] != e) return false;
      }
      return true;
    }

    //! H modulo the normal subgroup generated by f(M), with the image of N
    //! as positive cone.
    [[nodiscard]] QuotientResult cokernel(Morphism const& f) const {
      auto const& pos = f.dom->predicate(sig::positive);
      auto e          = f.cod->constant(sig::unit);
      PairList seed;
      for (std::size_t a = 0; a < f.dom->size; ++a) {
        if (pos[a] && f.map[a] != e) seed.emplace_back(f.map[a], e);
      }
      return quotient(f.cod, seed);
    }

    [[nodiscard]] QuotientResult quotient(ObjectPtr const& x, PairList const& seed) const {
      return prenormal::quotient(x, smallest_congruence(*x, seed, CongruenceKind::algebraic));
    }

    //! (G, M meet ker f) with the identity of G.
    [[nodiscard]] Morphism kernel_formula(Morphism const& f) const {
      auto const& pos = f.dom->predicate(sig::positive);
      auto e          = f.cod->constant(sig::unit);
      Table keep;
      for (std::size_t a = 0; a < f.dom->size; ++a) {
        if (pos[a] && f.map[a] == e) keep.push_back(static_cast<Element>(a));
      }
      return identity_on_carrier(with_positive(f.dom, keep, "ker"), f.dom);
    }

    [[nodiscard]] std::vector<Element> triviality_witness(Object const& x) const {
      auto const& pos = x.predicate(sig::positive);
      for (std::size_t a = 0; a < x.size; ++a) {
        if (pos[a] && static_cast<Element>(a) != x.constant(sig::unit)) {
          return {static_cast<Element>(a)};
        }
      }
      return {};
    }

    //! f(G) = H, f(M) = N and ker f is the subgroup generated by the
    //! positive part of the kernel.
    [[nodiscard]] bool normal_epi_characterisation(Morphism const& f) const {
      if (!is_surjective(f)) return false;
      auto const& pm = f.dom->predicate(sig::positive);
      auto const& pn = f.cod->predicate(sig::positive);
      BitRows image(f.cod->size, 0);
      for (std::size_t a = 0; a < f.dom->size; ++a) {
        if (pm[a]) image[f.map[a]] = 1;
      }
      if (image != pn) return false;
      auto e = f.cod->constant(sig::unit);
      Table l;
      for (std::size_t a = 0; a < f.dom->size; ++a) {
        if (pm[a] && f.map[a] == e) l.push_back(static_cast<Element>(a));
      }
      auto generated = generated_subgroup(*f.dom, l);
      for (std::size_t a = 0; a < f.dom->size; ++a) {
        if ((f.map[a] == e) != (generated[a] != 0)) return false;
      }
      return true;
    }

    [[nodiscard]] bool epis_are_surjective() const {
      return false;
    }

    [[nodiscard]] bool monos_are_injective() const {
      return true;
    }

    //! Finite products of elements of `gens` and their inverses, computed
    //! by fixpoint.
    static BitRows generated_subgroup(Object const& g, Table const& gens) {
      auto const  n   = g.size;
      auto const& t   = g.binary_table(sig::op);
      auto const& inv = g.unary_table(sig::inv);
      BitRows in(n, 0);
      in[g.constant(sig::unit)] = 1;
      for (auto a : gens) {
        in[a]      = 1;
        in[inv[a]] = 1;
      }
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
          if (!in[a]) continue;
          for (std::size_t b = 0; b < n; ++b) {
            if (in[b] && !in[t[a * n + b]]) {
              in[t[a * n + b]] = 1;
              changed          = true;
            }
          }
        }
      }
      return in;
    }

    //! The submonoid generated by `gens`, which in a finite group is
    //! already a subgroup.
    static BitRows generated_submonoid(Object const& g, Table const& gens) {
      auto const  n = g.size;
      auto const& t = g.binary_table(sig::op);
      BitRows in(n, 0);
      in[g.constant(sig::unit)] = 1;
      for (auto a : gens) in[a] = 1;
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
          if (!in[a]) continue;
          for (std::size_t b = 0; b < n; ++b) {
            if (in[b] && !in[t[a * n + b]]) {
              in[t[a * n + b]] = 1;
              changed          = true;
            }
          }
        }
      }
      return in;
    }

    //! Cokernel of the normal mono id : (G, M) -> (G, N), checking that the
    //! subgroup generated by M is M itself.
    [[nodiscard]] QuotientResult normal_mono_cokernel(ObjectPtr const& m, ObjectPtr const& n) const {
      if (m->size != n->size || m->binary_table(sig::op) != n->binary_table(sig::op)) {
        fail(ErrorKind::invalid_input, "normal mono of preordered groups must be an identity of G");
      }
      auto const& pm = m->predicate(sig::positive);
      auto const& pn = n->predicate(sig::positive);
      Table gens;
      for (std::size_t a = 0; a < m->size; ++a) {
        if (pm[a] && !pn[a]) fail(ErrorKind::invalid_input, "M is not contained in N");
        if (pm[a]) gens.push_back(static_cast<Element>(a));
      }
      if (generated_subgroup(*m, gens) != pm) {
        fail(ErrorKind::backend_bug, "subgroup generated by M differs from M in a finite group");
      }
      return cokernel(identity_on_carrier(m, n));
    }

    static ObjectPtr make(std::string name, Table op, std::size_t n, Table const& positive,
                          std::vector<std::string> names = {}) {
      auto obj = detail::monoid_object(tag_name, std::move(name), n, std::move(op),
                                       std::move(names));
      Table inv(n, 0);
      auto const& t = obj.binary[sig::op];
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (t[a * n + b] == 0) inv[a] = static_cast<Element>(b);
        }
      }
      obj.unary[sig::inv] = std::move(inv);
      BitRows pos(n, 0);
      pos[0] = 1;
      for (auto a : positive) pos[a] = 1;
      obj.predicates[sig::positive] = std::move(pos);
      auto x = make_object(std::move(obj));
      OrdGrp{}.validate_object(*x);
      return x;
    }

    static ObjectPtr with_positive(ObjectPtr const& g, Table const& positive, std::string name) {
      Object x = *g;
      x.name   = std::move(name);
      BitRows pos(x.size, 0);
      for (auto a : positive) pos[a] = 1;
      x.predicates[sig::positive] = std::move(pos);
      return make_object(std::move(x));
    }

    static Table klein_table() {
      Table t(16);
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) t[a * 4 + b] = static_cast<Element>(a ^ b);
      }
      return t;
    }

    //! Z1, Z2, Z3, Z4, V4 and S3, each with every normal subgroup as
    //! positive cone, up to isomorphism.
    [[nodiscard]] std::vector<ObjectPtr> catalog(CatalogCaps const& caps) const {
      auto const cap = detail::default_cap(caps, 6);
      struct Group {
        std::string              name;
        Table                    table;
        std::size_t              order;
        std::vector<std::string> names;
      };
      std::vector<Group> groups{
          {"Z1", {0}, 1, {}},
          {"Z2", detail::cyclic_table(2), 2, {}},
          {"Z3", detail::cyclic_table(3), 3, {}},
          {"Z4", detail::cyclic_table(4), 4, {}},
          {"V4", klein_table(), 4, {"e", "a", "b", "c"}},
          {"S3", Grpd::s3_table(), 6, {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}},
      };
      std::vector<ObjectPtr> all;
      for (auto const& g : groups) {
        if (g.order > cap) continue;
        auto base = make(g.name, g.table, g.order, {}, g.names);
        for (std::uint32_t mask = 0; mask < (1u << g.order); ++mask) {
          if (!(mask & 1u)) continue;
          Table pos;
          for (std::size_t a = 0; a < g.order; ++a) {
            if ((mask >> a) & 1u) pos.push_back(static_cast<Element>(a));
          }
          auto cand = with_positive(base, pos, g.name);
          if (generated_submonoid(*cand, pos) != cand->predicate(sig::positive)) continue;
          try {
            validate_object(*cand);
          } catch (Error const&) {
            continue;
          }
          std::string label = "(" + g.name + ",";
          if (pos.size() == 1) {
            label += "0)";
          } else if (pos.size() == g.order) {
            label += g.name + ")";
          } else {
            label += "{";
            for (std::size_t i = 0; i < pos.size(); ++i) {
              label += (i ? "," : "") + cand->element_name(pos[i]);
            }
            label += "})";
          }
          all.push_back(with_positive(base, pos, label));
        }
      }
      return detail::apply_object_cap(dedup_up_to_iso(all), caps);
    }

   private:
    static Morphism identity_on_carrier(ObjectPtr const& from, ObjectPtr const& to) {
      Table t(from->size);
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<Element>(i);
      return Morphism{from, to, std::move(t)};
    }
  };

}  // namespace prenormal
