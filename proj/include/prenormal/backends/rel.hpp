#pragma once

#include <string>
#include <utility>
#include <vector>

#include "../core/homs.hpp"
#include "common.hpp"

namespace prenormal {

  enum class RelKind { reflexive, equivalence, preorder };

  //! Sets with a reflexive relation, an equivalence relation or a preorder;
  //! the trivial objects carry the discrete relation.
  template <RelKind Kind>
  class RelBackend {
   public:
    static constexpr char const* tag_name = Kind == RelKind::reflexive     ? "rel-refl"
                                            : Kind == RelKind::equivalence ? "rel-equiv"
                                                                           : "rel-preorder";

    [[nodiscard]] std::string tag() const {
      return tag_name;
    }

    [[nodiscard]] std::vector<std::string> law_notes(std::string const& law) const {
      if (law != "kernels" && law != "kernel-formula") return {};
      return {"kernel relation taken as K_f meet the domain relation; meeting with the codomain relation "
              "would not typecheck"};
    }

    void validate_object(Object const& x) const {
      detail::require(x.backend == tag_name, x, std::string("backend tag is not ") + tag_name);
      detail::require_signature(x, {}, {}, {}, {sig::rel}, {});
      auto const& r = x.relation(sig::rel);
      detail::require(bits::is_reflexive(r, x.size), x, "relation is not reflexive");
      if (Kind != RelKind::reflexive) {
        detail::require(bits::is_transitive(r, x.size), x, "relation is not transitive");
      }
      if (Kind == RelKind::equivalence) {
        detail::require(bits::is_symmetric(r, x.size), x, "relation is not symmetric");
      }
    }

    [[nodiscard]] bool is_trivial(Object const& x) const {
      return x.relation(sig::rel) == bits::diagonal(x.size);
    }

    [[nodiscard]] Coreflection coreflection(ObjectPtr const& x) const {
      Object d             = *x;
      d.name               = "disc(" + x->name + ")";
      d.relations[sig::rel] = bits::diagonal(x->size);
      auto obj             = make_object(std::move(d));
      return Coreflection{obj, identity_on_carrier(obj, x)};
    }

    //! Related elements have equal images.
    [[nodiscard]] bool is_trivial_map(Morphism const& f) const {
      auto const  n = f.dom->size;
      auto const& r = f.dom->relation(sig::rel);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (r[a * n + b] && f.map[a] != f.map[b]) return false;
        }
      }
      return true;
    }

    //! Y modulo the equivalence generated by g(rho), with the image of
    //! sigma closed up to the kind.
    [[nodiscard]] QuotientResult cokernel(Morphism const& g) const {
      auto const  n = g.dom->size;
      auto const& r = g.dom->relation(sig::rel);
      PairList seed;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (r[a * n + b] && g.map[a] != g.map[b]) seed.emplace_back(g.map[a], g.map[b]);
        }
      }
      return quotient(g.cod, seed);
    }

    [[nodiscard]] QuotientResult quotient(ObjectPtr const& x, PairList const& seed) const {
      auto q = prenormal::quotient(x, smallest_congruence(*x, seed, CongruenceKind::equivalence));
      return close_relation(std::move(q), sig::rel, &close);
    }

    //! (X, K_f meet rho) with the identity function.
    [[nodiscard]] Morphism kernel_formula(Morphism const& f) const {
      auto const n = f.dom->size;
      Object k     = *f.dom;
      k.name       = "ker";
      auto& r      = k.relations[sig::rel];
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (f.map[a] != f.map[b]) r[a * n + b] = 0;
        }
      }
      auto obj = make_object(std::move(k));
      return identity_on_carrier(obj, f.dom);
    }

    //! A related pair of distinct elements.
    [[nodiscard]] std::vector<Element> triviality_witness(Object const& x) const {
      auto const  n = x.size;
      auto const& r = x.relation(sig::rel);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b && r[a * n + b]) return {static_cast<Element>(a), static_cast<Element>(b)};
        }
      }
      return {};
    }

    //! f is surjective, sigma is generated by f(rho), and the kernel pair
    //! of f is the equivalence generated by its meet with rho.
    [[nodiscard]] bool normal_epi_characterisation(Morphism const& f) const {
      if (!is_surjective(f)) return false;
      auto const  n = f.dom->size;
      auto const  m = f.cod->size;
      auto const& r = f.dom->relation(sig::rel);
      BitRows image(m * m, 0);
      PairList meet;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!r[a * n + b]) continue;
          image[f.map[a] * m + f.map[b]] = 1;
          if (f.map[a] == f.map[b]) meet.emplace_back(a, b);
        }
      }
      if (close(image, m) != f.cod->relation(sig::rel)) return false;
      auto generated = smallest_congruence(*f.dom, meet, CongruenceKind::equivalence);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if ((f.map[a] == f.map[b]) != generated.contains(a, b)) return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool epis_are_surjective() const {
      return true;
    }

    [[nodiscard]] bool monos_are_injective() const {
      return true;
    }

    static BitRows close(BitRows const& r, std::size_t n) {
      switch (Kind) {
        case RelKind::reflexive: {
          auto out = r;
          for (std::size_t i = 0; i < n; ++i) out[i * n + i] = 1;
          return out;
        }
        case RelKind::equivalence: return equivalence_closure(r, n);
        case RelKind::preorder: return reflexive_transitive_closure(r, n);
      }
      return r;
    }

    //! The kind closure of the given pairs on n points.
    static ObjectPtr make(std::string name, std::size_t n,
                          std::vector<std::pair<int, int>> const& pairs,
                          std::vector<std::string> names = {}) {
      BitRows r(n * n, 0);
      for (auto [a, b] : pairs) r[a * n + b] = 1;
      Object x;
      x.backend              = tag_name;
      x.name                 = std::move(name);
      x.size                 = n;
      x.names                = std::move(names);
      x.relations[sig::rel]  = close(r, n);
      return make_object(std::move(x));
    }

    //! The four-element preorder and two-element codomain of the preorder
    //! counterexample, and its morphism.
    static Morphism counterexample() {
      auto x = make("X", 4, {{0, 1}, {2, 1}, {2, 3}}, {"1", "2", "2'", "3"});
      auto y = make("Y", 2, {{0, 1}, {1, 0}}, {"1", "2"});
      return make_morphism(x, y, {0, 1, 1, 0});
    }

    //! Every relation of the kind on carriers of size up to the cap
    //! (default 3), up to isomorphism; the preorder catalog also holds
    //! the counterexample objects.
    [[nodiscard]] std::vector<ObjectPtr> catalog(CatalogCaps const& caps) const {
      auto const cap = std::min<std::size_t>(detail::default_cap(caps, 3), 3);
      std::vector<ObjectPtr> all;
      if (Kind == RelKind::preorder) {
        auto f = counterexample();
        all.push_back(f.dom);
        all.push_back(f.cod);
      }
      for (std::size_t n = 0; n <= cap; ++n) {
        std::vector<std::size_t> off;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (a != b) off.push_back(a * n + b);
          }
        }
        std::size_t idx = 0;
        for (std::uint32_t mask = 0; mask < (1u << off.size()); ++mask) {
          Object x;
          x.backend = tag_name;
          x.name    = "R" + std::to_string(n) + "." + std::to_string(idx);
          x.size    = n;
          auto r    = bits::diagonal(n);
          for (std::size_t i = 0; i < off.size(); ++i) {
            if ((mask >> i) & 1u) r[off[i]] = 1;
          }
          if (close(r, n) != r) continue;
          x.relations[sig::rel] = std::move(r);
          ++idx;
          all.push_back(make_object(std::move(x)));
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

  using RelRefl     = RelBackend<RelKind::reflexive>;
  using RelEquiv    = RelBackend<RelKind::equivalence>;
  using RelPreorder = RelBackend<RelKind::preorder>;

}  // namespace prenormal
