#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "../closure/congruence.hpp"
#include "morphism.hpp"

namespace prenormal {

  //! The mono-coreflection of an object onto the trivial objects.
  struct Coreflection {
    ObjectPtr object;
    Morphism  counit;
  };

  struct CatalogCaps {
    std::size_t max_order   = 0;  // 0 lets the backend pick its default
    std::size_t max_objects = 0;  // 0 means no cap
  };

  template <typename B>
  concept Backend = requires(B const& b, Object const& x, ObjectPtr const& p, Morphism const& f,
                             CatalogCaps const& caps) {
    { b.tag() } -> std::convertible_to<std::string>;
    b.validate_object(x);
    { b.is_trivial(x) } -> std::same_as<bool>;
    { b.coreflection(p) } -> std::same_as<Coreflection>;
    { b.is_trivial_map(f) } -> std::same_as<bool>;
    { b.cokernel(f) } -> std::same_as<QuotientResult>;
    { b.catalog(caps) } -> std::same_as<std::vector<ObjectPtr>>;
    { b.epis_are_surjective() } -> std::same_as<bool>;
    { b.monos_are_injective() } -> std::same_as<bool>;
  };

  //! Coequalizers of arbitrary pairs, as the quotient by the smallest
  //! congruence containing the given pairs.
  template <typename B>
  concept HasQuotient = requires(B const& b, ObjectPtr const& p, PairList const& s) {
    { b.quotient(p, s) } -> std::same_as<QuotientResult>;
  };

  //! A concrete description of the normal epimorphisms.
  template <typename B>
  concept HasNormalEpiCharacterisation = requires(B const& b, Morphism const& f) {
    { b.normal_epi_characterisation(f) } -> std::same_as<bool>;
  };

  //! A concrete description of the kernel as a subobject of the domain.
  template <typename B>
  concept HasKernelFormula = requires(B const& b, Morphism const& f) {
    { b.kernel_formula(f) } -> std::same_as<Morphism>;
  };

  //! Elements exhibiting that an object is not trivial.
  template <typename B>
  concept HasTrivialityWitness = requires(B const& b, Object const& x) {
    { b.triviality_witness(x) } -> std::same_as<std::vector<Element>>;
  };

  //! Caveats a backend attaches to the report of a law.
  template <typename B>
  concept HasLawNotes = requires(B const& b, std::string const& law) {
    { b.law_notes(law) } -> std::same_as<std::vector<std::string>>;
  };

  template <Backend B>
  void validate_morphism(B const& b, Morphism const& f) {
    b.validate_object(*f.dom);
    b.validate_object(*f.cod);
    if (auto why = structure_violation(*f.dom, *f.cod, f.map)) {
      fail(ErrorKind::invalid_morphism, *why);
    }
  }

  template <Backend B>
  std::vector<Element> triviality_witness(B const& b, Object const& x) {
    if constexpr (HasTrivialityWitness<B>) {
      return b.triviality_witness(x);
    } else {
      return {};
    }
  }

}  // namespace prenormal
