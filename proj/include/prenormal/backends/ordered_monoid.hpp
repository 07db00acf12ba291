#pragma once

#include <string>
#include <utility>
#include <vector>

#include "../core/homs.hpp"
#include "common.hpp"
#include "monoid.hpp"
#include "monoid_enumeration.hpp"

namespace prenormal {

  //! Preordered (or partially ordered) commutative monoids: a commutative
  //! monoid with a preorder `le` compatible with the operation.
  template <bool PartialOrder>
  class OrderedMonoidBackend {
   public:
    static constexpr char const* tag_name = PartialOrder ? "pocmon" : "preordcmon";

    [[nodiscard]] std::string tag() const {
      return tag_name;
    }

    void validate_object(Object const& x) const {
      detail::require(x.backend == tag_name, x, std::string("backend tag is not ") + tag_name);
      detail::require_signature(x, {sig::unit}, {}, {sig::op}, {sig::le}, {});
      detail::require_monoid(x, true);
      auto const  n  = x.size;
      auto const& le = x.relation(sig::le);
      auto const& t  = x.binary_table(sig::op);
      detail::require(bits::is_reflexive(le, n), x, "order is not reflexive");
      detail::require(bits::is_transitive(le, n), x, "order is not transitive");
      if (PartialOrder) {
        detail::require(bits::is_antisymmetric(le, n), x, "order is not antisymmetric");
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!le[a * n + b]) continue;
          for (std::size_t c = 0; c < n; ++c) {
            detail::require(le[t[a * n + c] * n + t[b * n + c]], x,
                            "order is not compatible with the operation");
          }
        }
      }
    }

    [[nodiscard]] bool is_trivial(Object const& x) const {
      return x.size == 1;
    }

    [[nodiscard]] Coreflection coreflection(ObjectPtr const& x) const {
      return detail::zero_coreflection(x, sig::unit);
    }

    [[nodiscard]] bool is_trivial_map(Morphism const& f) const {
      return detail::constant_at(f, sig::unit);
    }

    //! Existential image of the order, transitively closed; for partial
    //! orders followed by the antisymmetric reflection.
    [[nodiscard]] QuotientResult cokernel(Morphism const& f) const {
      return finish(detail::kill_image(f, sig::unit, CongruenceKind::algebraic));
    }

    [[nodiscard]] QuotientResult quotient(ObjectPtr const& x, PairList const& seed) const {
      return finish(
          prenormal::quotient(x, smallest_congruence(*x, seed, CongruenceKind::algebraic)));
    }

    [[nodiscard]] Morphism kernel_formula(Morphism const& f) const {
      return detail::preimage_of_point(f, sig::unit);
    }

    [[nodiscard]] std::vector<Element> triviality_witness(Object const& x) const {
      return detail::first_other_than(x, x.constant(sig::unit));
    }

    //! The order lifting property: u <= v in the codomain is the image of
    //! some x <= y in the domain.
    static bool order_lifting_property(Morphism const& f) {
      auto const  n  = f.dom->size;
      auto const  m  = f.cod->size;
      auto const& le = f.dom->relation(sig::le);
      auto const& ln = f.cod->relation(sig::le);
      BitRows hit(m * m, 0);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (le[x * n + y]) hit[f.map[x] * m + f.map[y]] = 1;
        }
      }
      for (std::size_t i = 0; i < m * m; ++i) {
        if (ln[i] && !hit[i]) return false;
      }
      return true;
    }

    [[nodiscard]] bool normal_epi_characterisation(Morphism const& f) const {
      if (!is_surjective(f)) return false;
      if constexpr (!PartialOrder) {
        return CMon::kernel_translation_property(f) && order_lifting_property(f);
      } else {
        return reflection_characterisation(f);
      }
    }

    [[nodiscard]] bool epis_are_surjective() const {
      return false;
    }

    [[nodiscard]] bool monos_are_injective() const {
      return true;
    }

    static ObjectPtr make(std::string name, std::size_t n, Table op,
                          std::vector<std::pair<int, int>> const& le,
                          std::vector<std::string> names = {}) {
      auto obj = detail::monoid_object(tag_name, std::move(name), n, std::move(op),
                                       std::move(names));
      obj.relations[sig::le] = bits::diagonal(n);
      for (auto [a, b] : le) obj.relations[sig::le][a * n + b] = 1;
      auto x = make_object(std::move(obj));
      OrderedMonoidBackend{}.validate_object(*x);
      return x;
    }

    static ObjectPtr with_order(ObjectPtr const& monoid, BitRows le, std::string name) {
      Object obj             = *monoid;
      obj.backend            = tag_name;
      obj.name               = std::move(name);
      obj.relations[sig::le] = std::move(le);
      return make_object(std::move(obj));
    }

    //! Every compatible order on every commutative monoid of order up to
    //! the cap (default 3), plus the given extra objects, up to isomorphism.
    [[nodiscard]] std::vector<ObjectPtr> catalog(CatalogCaps const& caps) const {
      auto const cap = std::min<std::size_t>(detail::default_cap(caps, 3), 3);
      std::vector<ObjectPtr> all = extra_objects();
      for (std::size_t n = 1; n <= cap; ++n) {
        std::size_t idx = 0;
        for (auto const& t : enumerate_monoids(n, true)) {
          auto base = make_object(detail::monoid_object(tag_name, "", n, t));
          for (auto const& le : compatible_orders(*base)) {
            auto x = with_order(base, le,
                                std::string(PartialOrder ? "PO" : "PR") + std::to_string(n) + "."
                                    + std::to_string(idx++));
            all.push_back(x);
          }
        }
      }
      return detail::apply_object_cap(dedup_up_to_iso(all), caps);
    }

    //! Preorders (or partial orders) on the carrier compatible with the
    //! operation, by enumerating relations containing the diagonal.
    [[nodiscard]] std::vector<BitRows> compatible_orders(Object const& base) const {
      auto const n = base.size;
      std::vector<std::size_t> off;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b) off.push_back(a * n + b);
        }
      }
      std::vector<BitRows> out;
      for (std::uint32_t mask = 0; mask < (1u << off.size()); ++mask) {
        auto le = bits::diagonal(n);
        for (std::size_t i = 0; i < off.size(); ++i) {
          if ((mask >> i) & 1u) le[off[i]] = 1;
        }
        Object x             = base;
        x.backend            = tag_name;
        x.relations[sig::le] = le;
        try {
          validate_object(x);
        } catch (Error const&) {
          continue;
        }
        out.push_back(std::move(le));
      }
      return out;
    }

    //! The objects of the preordered-monoid counterexample, plus a few
    //! four-element seeds.
    static std::vector<ObjectPtr> extra_objects() {
      std::vector<ObjectPtr> out;
      // A = {0, 1, 1', 2} with join along 0 < 1 < 1' < 2 and 0 <= 1, 1' <= 2
      out.push_back(make("A", 4, detail::join_table(4), {{0, 1}, {2, 3}}, {"0", "1", "1'", "2"}));
      out.push_back(make("B", 3, detail::join_table(3), {{0, 1}, {1, 2}, {0, 2}}));
      out.push_back(make("C", 2, detail::join_table(2), {{0, 1}}, {"0", "2"}));
      out.push_back(make("D", 2, detail::join_table(2), {}, {"0", "2"}));
      out.push_back(make("Z4", 4, detail::cyclic_table(4), {}));
      out.push_back(make("J4", 4, detail::join_table(4), {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3},
                                                          {0, 3}}));
      return out;
    }

   private:
    static QuotientResult finish(QuotientResult q) {
      q = close_relation(std::move(q), sig::le, [](BitRows const& r, std::size_t n) {
        return reflexive_transitive_closure(r, n);
      });
      if constexpr (PartialOrder) {
        auto const& x  = *q.object;
        auto const  n  = x.size;
        auto const& le = x.relation(sig::le);
        PairList    seed;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = a + 1; b < n; ++b) {
            if (le[a * n + b] && le[b * n + a]) seed.emplace_back(a, b);
          }
        }
        if (!seed.empty()) {
          auto r     = prenormal::quotient(q.object, smallest_congruence(x, seed,
                                                                      CongruenceKind::equivalence));
          auto total = compose(q.projection, r.projection);
          QuotientResult out{r.object, total, kernel_congruence(total, CongruenceKind::algebraic),
                             q.relation_closure_added};
          return out;
        }
      }
      return q;
    }

    //! f factors as the canonical quotient by the kernel congruence
    //! x + a = y + b (a, b in the kernel) with the image order, followed by
    //! the antisymmetric reflection.
    static bool reflection_characterisation(Morphism const& f) {
      auto const& x  = *f.dom;
      auto const  n  = x.size;
      auto const& t  = x.binary_table(sig::op);
      auto const& le = x.relation(sig::le);
      auto const& ln = f.cod->relation(sig::le);
      auto const  m  = f.cod->size;
      auto z         = f.cod->constant(sig::unit);
      Table k;
      for (std::size_t a = 0; a < n; ++a) {
        if (f.map[a] == z) k.push_back(static_cast<Element>(a));
      }
      BitRows theta(n * n, 0);
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          for (auto a : k) {
            for (auto b : k) {
              if (t[p * n + a] == t[q * n + b]) theta[p * n + q] = 1;
            }
          }
        }
      }
      BitRows order(n * n, 0);
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          for (std::size_t p2 = 0; p2 < n && !order[p * n + q]; ++p2) {
            if (!theta[p * n + p2]) continue;
            for (std::size_t q2 = 0; q2 < n; ++q2) {
              if (theta[q * n + q2] && le[p2 * n + q2]) {
                order[p * n + q] = 1;
                break;
              }
            }
          }
        }
      }
      order = reflexive_transitive_closure(std::move(order), n);
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          bool same   = f.map[p] == f.map[q];
          bool mutual = order[p * n + q] && order[q * n + p];
          if (same != mutual) return false;
          if ((ln[f.map[p] * m + f.map[q]] != 0) != (order[p * n + q] != 0)) return false;
        }
      }
      return true;
    }
  };

  using PreordCMon = OrderedMonoidBackend<false>;
  using POCMon     = OrderedMonoidBackend<true>;

}  // namespace prenormal
