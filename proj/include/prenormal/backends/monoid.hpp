#pragma once

#include <string>
#include <vector>

#include "../core/homs.hpp"
#include "common.hpp"
#include "monoid_enumeration.hpp"

namespace prenormal {

  //! Finite monoids (commutative or not) with the zero object as the only
  //! trivial object.
  template <bool Commutative>
  class MonoidBackend {
   public:
    static constexpr char const* tag_name = Commutative ? "cmon" : "mon";

    [[nodiscard]] std::string tag() const {
      return tag_name;
    }

    void validate_object(Object const& x) const {
      detail::require(x.backend == tag_name, x, "backend tag is not " + tag());
      detail::require_signature(x, {sig::unit}, {}, {sig::op}, {}, {});
      detail::require_monoid(x, Commutative);
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

    [[nodiscard]] QuotientResult cokernel(Morphism const& f) const {
      return detail::kill_image(f, sig::unit, CongruenceKind::algebraic);
    }

    [[nodiscard]] QuotientResult quotient(ObjectPtr const& x, PairList const& seed) const {
      return prenormal::quotient(x, smallest_congruence(*x, seed, CongruenceKind::algebraic));
    }

    [[nodiscard]] Morphism kernel_formula(Morphism const& f) const {
      return detail::preimage_of_point(f, sig::unit);
    }

    [[nodiscard]] std::vector<Element> triviality_witness(Object const& x) const {
      return detail::first_other_than(x, x.constant(sig::unit));
    }

    //! Surjective, and f(x) = f(y) implies x + a = y + b for some a, b in
    //! the preimage of zero.
    [[nodiscard]] bool normal_epi_characterisation(Morphism const& f) const
      requires Commutative
    {
      return is_surjective(f) && kernel_translation_property(f);
    }

    static bool kernel_translation_property(Morphism const& f) {
      auto const& x = *f.dom;
      auto const  n = x.size;
      auto const& t = x.binary_table(sig::op);
      auto z        = f.cod->constant(sig::unit);
      Table k;
      for (std::size_t a = 0; a < n; ++a) {
        if (f.map[a] == z) k.push_back(static_cast<Element>(a));
      }
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          if (f.map[p] != f.map[q]) continue;
          bool found = false;
          for (auto a : k) {
            for (auto b : k) {
              if (t[p * n + a] == t[q * n + b]) {
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
      return true;
    }

    [[nodiscard]] bool monos_are_injective() const {
      return true;
    }

    static ObjectPtr make(std::string name, std::size_t n, Table op,
                          std::vector<std::string> names = {}) {
      auto x = make_object(detail::monoid_object(tag_name, std::move(name), n, std::move(op),
                                                 std::move(names)));
      MonoidBackend{}.validate_object(*x);
      return x;
    }

    static ObjectPtr cyclic(std::size_t n) {
      return make("Z" + std::to_string(n), n, detail::cyclic_table(n));
    }

    static ObjectPtr truncated(std::size_t n) {
      return make("T" + std::to_string(n - 1), n, detail::truncated_table(n));
    }

    static ObjectPtr join_chain(std::size_t n) {
      return make("J" + std::to_string(n), n, detail::join_table(n));
    }

    static ObjectPtr product(ObjectPtr const& a, ObjectPtr const& b) {
      auto t = detail::product_table(a->binary_table(sig::op), a->size,
                                     b->binary_table(sig::op), b->size);
      std::vector<std::string> names;
      for (std::size_t i = 0; i < a->size; ++i) {
        for (std::size_t j = 0; j < b->size; ++j) {
          names.push_back("(" + a->element_name(i) + "," + b->element_name(j) + ")");
        }
      }
      return make(a->name + "x" + b->name, a->size * b->size, std::move(t), std::move(names));
    }

    //! Named seeds first, then every monoid of order up to the cap (at
    //! most 4) not isomorphic to an earlier entry.
    [[nodiscard]] std::vector<ObjectPtr> catalog(CatalogCaps const& caps) const {
      auto const cap = detail::default_cap(caps, 4);
      std::vector<ObjectPtr> seeds{make("0", 1, {0})};
      auto add = [&](ObjectPtr x) {
        if (x->size <= cap) seeds.push_back(std::move(x));
      };
      add(cyclic(2));
      add(truncated(2));
      add(cyclic(3));
      add(truncated(3));
      add(join_chain(3));
      add(cyclic(4));
      add(product(cyclic(2), cyclic(2)));
      add(product(truncated(2), truncated(2)));
      add(truncated(4));
      add(join_chain(4));
      std::vector<ObjectPtr> all = seeds;
      for (std::size_t n = 1; n <= std::min<std::size_t>(cap, 4); ++n) {
        std::size_t idx = 0;
        for (auto const& t : enumerate_monoids(n, Commutative)) {
          all.push_back(make(std::string(Commutative ? "C" : "M") + std::to_string(n) + "."
                                 + std::to_string(idx++),
                             n, t));
        }
      }
      return detail::apply_object_cap(dedup_up_to_iso(all), caps);
    }
  };

  using CMon = MonoidBackend<true>;
  using Mon  = MonoidBackend<false>;

}  // namespace prenormal
