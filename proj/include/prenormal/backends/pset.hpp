#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace prenormal {

  //! Finite pointed sets.
  class PSet {
   public:
    static constexpr char const* tag_name = "pset";

    [[nodiscard]] std::string tag() const {
      return tag_name;
    }

    void validate_object(Object const& x) const {
      detail::require(x.backend == tag_name, x, "backend tag is not pset");
      detail::require_signature(x, {sig::base}, {}, {}, {}, {});
      detail::require(x.size >= 1, x, "empty carrier");
    }

    [[nodiscard]] bool is_trivial(Object const& x) const {
      return x.size == 1;
    }

    [[nodiscard]] Coreflection coreflection(ObjectPtr const& x) const {
      return detail::zero_coreflection(x, sig::base);
    }

    [[nodiscard]] bool is_trivial_map(Morphism const& f) const {
      return detail::constant_at(f, sig::base);
    }

    [[nodiscard]] QuotientResult cokernel(Morphism const& f) const {
      return detail::kill_image(f, sig::base, CongruenceKind::equivalence);
    }

    [[nodiscard]] QuotientResult quotient(ObjectPtr const& x, PairList const& seed) const {
      return prenormal::quotient(x, smallest_congruence(*x, seed, CongruenceKind::equivalence));
    }

    [[nodiscard]] Morphism kernel_formula(Morphism const& f) const {
      return detail::preimage_of_point(f, sig::base);
    }

    [[nodiscard]] std::vector<Element> triviality_witness(Object const& x) const {
      return detail::first_other_than(x, x.constant(sig::base));
    }

    //! Surjective with every fibre over a non-basepoint a singleton.
    [[nodiscard]] bool normal_epi_characterisation(Morphism const& f) const {
      if (!is_surjective(f)) return false;
      std::vector<std::size_t> fibre(f.cod->size, 0);
      for (auto v : f.map) ++fibre[v];
      auto base = f.cod->constant(sig::base);
      for (std::size_t y = 0; y < fibre.size(); ++y) {
        if (static_cast<Element>(y) != base && fibre[y] != 1) return false;
      }
      return true;
    }

    [[nodiscard]] bool epis_are_surjective() const {
      return true;
    }

    [[nodiscard]] bool monos_are_injective() const {
      return true;
    }

    //! The pointed set {0, ..., n-1} based at 0.
    static ObjectPtr make(std::size_t n, std::string name = {}) {
      Object x;
      x.backend              = tag_name;
      x.name                 = name.empty() ? std::to_string(n) : std::move(name);
      x.size                 = n;
      x.constants[sig::base] = 0;
      auto obj               = make_object(std::move(x));
      PSet{}.validate_object(*obj);
      return obj;
    }

    [[nodiscard]] std::vector<ObjectPtr> catalog(CatalogCaps const& caps) const {
      std::vector<ObjectPtr> out;
      for (std::size_t n = 1; n <= detail::default_cap(caps, 4); ++n) out.push_back(make(n));
      return detail::apply_object_cap(std::move(out), caps);
    }
  };

}  // namespace prenormal
