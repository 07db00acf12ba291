#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "../core/homs.hpp"
#include "common.hpp"

namespace prenormal {

  //! Finite groupoids encoded by their arrows: `src` and `tgt` send an arrow
  //! to the identity at its source and target, `inv` is the inverse and
  //! `comp(a, b)` is "a then b", defined when tgt a = src b.  The trivial
  //! objects are the discrete groupoids.
  class Grpd {
   public:
    static constexpr char const* tag_name = "grpd";

    [[nodiscard]] std::string tag() const {
      return tag_name;
    }

    //! Caveats attached to the laws that use cokernels.
    [[nodiscard]] std::vector<std::string> law_notes(std::string const& law) const {
      static std::set<std::string> const uses_cokernels{"subreflectivity", "characterisation", "factorisation",
                                                        "exact-sequences", "product-exactness",
                                                        "pullback-exactness", "noether"};
      if (!uses_cokernels.count(law)) return {};
      return {"groupoid cokernels are validated only through the characterisation and the law suites"};
    }

    void validate_object(Object const& x) const {
      detail::require(x.backend == tag_name, x, "backend tag is not grpd");
      detail::require_signature(x, {}, {sig::inv, sig::src, sig::tgt}, {sig::comp}, {}, {});
      auto const  n    = x.size;
      auto const& src  = x.unary_table(sig::src);
      auto const& tgt  = x.unary_table(sig::tgt);
      auto const& inv  = x.unary_table(sig::inv);
      auto const& comp = x.binary_table(sig::comp);
      for (std::size_t a = 0; a < n; ++a) {
        detail::require(src[a] != undefined && tgt[a] != undefined && inv[a] != undefined, x,
                        "src, tgt and inv must be total");
        detail::require(is_identity(x, src[a]) && is_identity(x, tgt[a]), x,
                        "src and tgt must be identities");
        detail::require(src[inv[a]] == tgt[a] && tgt[inv[a]] == src[a], x,
                        "inverse has the wrong ends");
        detail::require(comp[a * n + inv[a]] == src[a] && comp[inv[a] * n + a] == tgt[a], x,
                        "inv is not an inverse");
        detail::require(comp[src[a] * n + a] == static_cast<Element>(a)
                            && comp[a * n + tgt[a]] == static_cast<Element>(a),
                        x, "identities are not neutral");
        for (std::size_t b = 0; b < n; ++b) {
          auto ab = comp[a * n + b];
          detail::require((ab != undefined) == (tgt[a] == src[b]), x,
                          "composition defined exactly on composable pairs");
          if (ab == undefined) continue;
          detail::require(src[ab] == src[a] && tgt[ab] == tgt[b], x,
                          "composite has the wrong ends");
          for (std::size_t c = 0; c < n; ++c) {
            auto bc = comp[b * n + c];
            if (bc == undefined) continue;
            detail::require(comp[ab * n + c] == comp[a * n + bc], x,
                            "composition is not associative");
          }
        }
      }
    }

    static bool is_identity(Object const& x, Element a) {
      return x.unary_table(sig::src)[a] == a && x.unary_table(sig::tgt)[a] == a;
    }

    [[nodiscard]] bool is_trivial(Object const& x) const {
      for (std::size_t a = 0; a < x.size; ++a) {
        if (!is_identity(x, static_cast<Element>(a))) return false;
      }
      return true;
    }

    //! The discrete groupoid on the objects, with its inclusion.
    [[nodiscard]] Coreflection coreflection(ObjectPtr const& x) const {
      std::vector<std::uint8_t> keep(x->size, 0);
      for (std::size_t a = 0; a < x->size; ++a) keep[a] = is_identity(*x, static_cast<Element>(a));
      auto sub = substructure(x, keep, "disc(" + x->name + ")");
      return Coreflection{sub.object, sub.inclusion};
    }

    [[nodiscard]] bool is_trivial_map(Morphism const& f) const {
      for (auto v : f.map) {
        if (!is_identity(*f.cod, v)) return false;
      }
      return true;
    }

    //! H modulo the normal subgroupoid generated by the image of f.
    [[nodiscard]] QuotientResult cokernel(Morphism const& f) const {
      Table arrows;
      for (auto v : f.map) arrows.push_back(v);
      return quotient_by_normal(f.cod, normal_subgroupoid(*f.cod, arrows));
    }

    [[nodiscard]] std::vector<Element> triviality_witness(Object const& x) const {
      for (std::size_t a = 0; a < x.size; ++a) {
        if (!is_identity(x, static_cast<Element>(a))) return {static_cast<Element>(a)};
      }
      return {};
    }

    //! Surjective on arrows, and F g = F g' implies g then u equals u' then
    //! g' for some arrows u, u' sent to identities.
    [[nodiscard]] bool normal_epi_characterisation(Morphism const& f) const {
      if (!is_surjective(f)) return false;
      auto const& x    = *f.dom;
      auto const  n    = x.size;
      auto const& comp = x.binary_table(sig::comp);
      Table killed;
      for (std::size_t a = 0; a < n; ++a) {
        if (is_identity(*f.cod, f.map[a])) killed.push_back(static_cast<Element>(a));
      }
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
          if (g == h || f.map[g] != f.map[h]) continue;
          bool found = false;
          for (auto u : killed) {
            auto gu = comp[g * n + u];
            if (gu == undefined) continue;
            for (auto v : killed) {
              if (comp[v * n + h] == gu) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (!found) return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool epis_are_surjective() const {
      return false;
    }

    [[nodiscard]] bool monos_are_injective() const {
      return true;
    }

    //! The quotient by a wide normal subgroupoid: arrows are the double
    //! cosets, and two classes compose through a connecting arrow of N.
    static QuotientResult quotient_by_normal(ObjectPtr const& px,
                                             std::vector<std::uint8_t> const& normal) {
      auto const& x    = *px;
      auto const  n    = x.size;
      auto const& src  = x.unary_table(sig::src);
      auto const& tgt  = x.unary_table(sig::tgt);
      auto const& inv  = x.unary_table(sig::inv);
      auto const& comp = x.binary_table(sig::comp);
      auto cong        = groupoid_congruence(x, normal);
      Table cls(n, undefined);
      Table reps;
      for (std::size_t a = 0; a < n; ++a) {
        if (cong.representative[a] == static_cast<Element>(a)) {
          cls[a] = static_cast<Element>(reps.size());
          reps.push_back(static_cast<Element>(a));
        }
      }
      for (std::size_t a = 0; a < n; ++a) cls[a] = cls[cong.representative[a]];
      Table bridge(n * n, undefined);
      for (std::size_t m = 0; m < n; ++m) {
        if (normal[m]) bridge[src[m] * n + tgt[m]] = static_cast<Element>(m);
      }
      auto const k = reps.size();
      Object q;
      q.backend = tag_name;
      q.name    = x.name + "/N";
      q.size    = k;
      Table qs(k);
      Table qt(k);
      Table qi(k);
      Table qc(k * k, undefined);
      for (std::size_t i = 0; i < k; ++i) {
        auto a = reps[i];
        auto sz = std::count(cong.representative.begin(), cong.representative.end(), a);
        q.names.push_back(sz > 1 ? "[" + x.element_name(a) + "]" : x.element_name(a));
        qs[i] = cls[src[a]];
        qt[i] = cls[tgt[a]];
        qi[i] = cls[inv[a]];
        for (std::size_t j = 0; j < k; ++j) {
          auto b  = reps[j];
          auto nb = bridge[tgt[a] * n + src[b]];
          if (nb == undefined) continue;
          qc[i * k + j] = cls[comp[comp[a * n + nb] * n + b]];
        }
      }
      q.unary[sig::src]   = std::move(qs);
      q.unary[sig::tgt]   = std::move(qt);
      q.unary[sig::inv]   = std::move(qi);
      q.binary[sig::comp] = std::move(qc);
      auto obj            = make_object(std::move(q));
      Grpd{}.validate_object(*obj);
      return QuotientResult{obj, Morphism{px, obj, std::move(cls)}, std::move(cong), false};
    }

    //! The connected groupoid G x codiscrete(k): arrows (i, j, g) for
    //! objects i, j and g in the group with the given table (unit 0).
    static ObjectPtr connected(std::string name, Table const& group, std::size_t s, std::size_t k,
                               std::vector<std::string> const& element_names = {}) {
      std::vector<Component> parts{{group, s, k, element_names}};
      return build(std::move(name), parts);
    }

    struct Component {
      Table                    group;
      std::size_t              order   = 1;
      std::size_t              objects = 1;
      std::vector<std::string> element_names;
    };

    //! Disjoint union of connected components.
    static ObjectPtr build(std::string name, std::vector<Component> const& parts) {
      Object x;
      x.backend = tag_name;
      x.name    = std::move(name);
      std::size_t total = 0;
      for (auto const& p : parts) total += p.objects * p.objects * p.order;
      x.size = total;
      Table src(total);
      Table tgt(total);
      Table inv(total);
      Table comp(total * total, undefined);
      std::size_t offset     = 0;
      std::size_t obj_offset = 0;
      for (auto const& p : parts) {
        auto const s = p.order;
        auto const k = p.objects;
        Table ginv(s, 0);
        for (std::size_t g = 0; g < s; ++g) {
          for (std::size_t h = 0; h < s; ++h) {
            if (p.group[g * s + h] == 0) ginv[g] = static_cast<Element>(h);
          }
        }
        auto id = [&](std::size_t i, std::size_t j, std::size_t g) {
          return static_cast<Element>(offset + (i * k + j) * s + g);
        };
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t g = 0; g < s; ++g) {
              auto a = id(i, j, g);
              src[a] = id(i, i, 0);
              tgt[a] = id(j, j, 0);
              inv[a] = id(j, i, ginv[g]);
              auto gname = g < p.element_names.size() ? p.element_names[g] : std::to_string(g);
              if (k > 1) {
                gname += ":" + std::to_string(obj_offset + i) + "->"
                         + std::to_string(obj_offset + j);
              } else if (parts.size() > 1) {
                gname += "@" + std::to_string(obj_offset);
              }
              x.names.push_back(std::move(gname));
              for (std::size_t l = 0; l < k; ++l) {
                for (std::size_t h = 0; h < s; ++h) {
                  comp[a * total + id(j, l, h)] = id(i, l, p.group[g * s + h]);
                }
              }
            }
          }
        }
        offset += k * k * s;
        obj_offset += k;
      }
      x.unary[sig::src]   = std::move(src);
      x.unary[sig::tgt]   = std::move(tgt);
      x.unary[sig::inv]   = std::move(inv);
      x.binary[sig::comp] = std::move(comp);
      auto obj            = make_object(std::move(x));
      Grpd{}.validate_object(*obj);
      return obj;
    }

    static ObjectPtr discrete(std::size_t k) {
      std::vector<Component> parts(k, Component{{0}, 1, 1, {"id"}});
      return build("disc" + std::to_string(k), parts);
    }

    static ObjectPtr codiscrete(std::size_t k) {
      return connected("codisc" + std::to_string(k), {0}, 1, k, {"!"});
    }

    static ObjectPtr group(std::string name, Table const& table, std::size_t order,
                           std::vector<std::string> const& names = {}) {
      return connected(std::move(name), table, order, 1, names);
    }

    //! Symmetric group on three letters, elements in the order
    //! e, (12), (13), (23), (123), (132).
    static Table s3_table() {
      std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                            {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
      Table t(36);
      for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = 0; b < 6; ++b) {
          std::array<int, 3> c{};
          // a then b
          for (int i = 0; i < 3; ++i) c[i] = perms[b][perms[a][i]];
          for (std::size_t r = 0; r < 6; ++r) {
            if (perms[r] == c) t[a * 6 + b] = static_cast<Element>(r);
          }
        }
      }
      return t;
    }

    [[nodiscard]] std::vector<ObjectPtr> catalog(CatalogCaps const& caps) const {
      auto const cap = detail::default_cap(caps, 9);
      std::vector<ObjectPtr> out;
      auto add = [&](ObjectPtr x) {
        if (x->size <= cap) out.push_back(std::move(x));
      };
      add(build("empty", {}));
      add(discrete(1));
      add(discrete(2));
      add(group("Z2", detail::cyclic_table(2), 2));
      add(discrete(3));
      add(group("Z3", detail::cyclic_table(3), 3));
      add(build("Z2+1", {Component{detail::cyclic_table(2), 2, 1, {}}, Component{{0}, 1, 1, {"id"}}}));
      add(codiscrete(2));
      add(group("Z4", detail::cyclic_table(4), 4));
      add(build("codisc2+1", {Component{{0}, 1, 2, {"!"}}, Component{{0}, 1, 1, {"id"}}}));
      add(group("S3", s3_table(), 6, {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}));
      add(connected("Z2xcodisc2", detail::cyclic_table(2), 2, 2));
      add(codiscrete(3));
      return detail::apply_object_cap(std::move(out), caps);
    }
  };

}  // namespace prenormal
