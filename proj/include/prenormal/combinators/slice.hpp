#pragma once

#include <string>
#include <utility>
#include <vector>

#include "../core/backend.hpp"
#include "../core/homs.hpp"
#include "../engine/kernel.hpp"

namespace prenormal {

  //! The slice of a base backend over a fixed object C.  An object (X, x)
  //! is the base object X labelled by the table of x : X -> C, so
  //! label-preserving maps are exactly the commuting triangles.  Trivial
  //! objects are those with trivial underlying object.
  template <Backend Base>
  class SliceBackend {
   public:
    static constexpr std::size_t default_object_cap = 64;

    SliceBackend(Base base, ObjectPtr over) : _base(std::move(base)), _over(std::move(over)) {
      _base.validate_object(*_over);
    }

    [[nodiscard]] std::string tag() const {
      return _base.tag() + "/" + _over->name;
    }

    [[nodiscard]] Base const& base() const {
      return _base;
    }

    [[nodiscard]] ObjectPtr const& over() const {
      return _over;
    }

    //! The slice object (X, x).
    [[nodiscard]] ObjectPtr object(Morphism const& x) const {
      if (!same_object(x.cod, _over)) fail(ErrorKind::invalid_input, "structure map has the wrong codomain");
      validate_morphism(_base, x);
      return relabel(*x.dom, x.map, tag());
    }

    [[nodiscard]] ObjectPtr underlying(Object const& x) const {
      return relabel(x, {}, _base.tag());
    }

    [[nodiscard]] Morphism underlying(Morphism const& f) const {
      return Morphism{underlying(*f.dom), underlying(*f.cod), f.map};
    }

    [[nodiscard]] Morphism structure_map(Object const& x) const {
      return Morphism{underlying(x), _over, x.labels};
    }

    //! The slice morphism with the given underlying table.
    [[nodiscard]] Morphism lift(ObjectPtr const& dom, ObjectPtr const& cod, Table map) const {
      return make_morphism(dom, cod, std::move(map));
    }

    void validate_object(Object const& x) const {
      detail::require(x.backend == tag(), x, "backend tag is not " + tag());
      detail::require(x.labels.size() == x.size, x, "missing structure map");
      auto u = underlying(x);
      _base.validate_object(*u);
      if (auto why = structure_violation(*u, *_over, x.labels)) {
        fail(ErrorKind::invalid_object, x.name + ": structure map is not a morphism: " + *why);
      }
    }

    [[nodiscard]] bool is_trivial(Object const& x) const {
      return _base.is_trivial(*underlying(x));
    }

    [[nodiscard]] Coreflection coreflection(ObjectPtr const& x) const {
      auto cr = _base.coreflection(underlying(*x));
      auto z  = relabel(*cr.object, compose(cr.counit, structure_map(*x)).map, tag());
      return Coreflection{z, Morphism{z, x, cr.counit.map}};
    }

    [[nodiscard]] bool is_trivial_map(Morphism const& f) const {
      return _base.is_trivial_map(underlying(f));
    }

    //! The base cokernel q of f with structure map induced on its codomain;
    //! it exists exactly when f followed by the structure map of cod f is
    //! trivial in the base.
    [[nodiscard]] QuotientResult cokernel(Morphism const& f) const {
      return with_structure(f.cod, _base.cokernel(underlying(f)));
    }

    [[nodiscard]] QuotientResult quotient(ObjectPtr const& x, PairList const& seed) const
      requires HasQuotient<Base>
    {
      for (auto [a, b] : seed) {
        if (x->labels[a] != x->labels[b]) {
          fail(ErrorKind::invalid_input, "coequalized pair lies over different points of the base object");
        }
      }
      return with_structure(x, _base.quotient(underlying(*x), seed));
    }

    //! Normal epis of the slice are the maps that are normal epis in the base.
    [[nodiscard]] bool normal_epi_characterisation(Morphism const& f) const {
      return is_normal_epi(_base, underlying(f));
    }

    [[nodiscard]] bool epis_are_surjective() const {
      return _base.epis_are_surjective();
    }

    [[nodiscard]] bool monos_are_injective() const {
      return _base.monos_are_injective();
    }

    //! Every base catalog object with every structure map into C, up to
    //! the object cap (default 64).
    [[nodiscard]] std::vector<ObjectPtr> catalog(CatalogCaps const& caps) const {
      auto cap = caps.max_objects ? caps.max_objects : default_object_cap;
      std::vector<ObjectPtr> out;
      for (auto const& x : _base.catalog(CatalogCaps{caps.max_order, 0})) {
        for_each_hom(x, _over, [&](Morphism const& s) {
          out.push_back(relabel(*x, s.map, tag()));
          return out.size() < cap;
        });
        if (out.size() >= cap) break;
      }
      return out;
    }

   private:
    QuotientResult with_structure(ObjectPtr const& cod, QuotientResult q) const {
      auto p = descend_along(q.projection, structure_map(*cod));
      if (!p) {
        fail(ErrorKind::unsupported,
             "no cokernel over " + _over->name + ": the structure map of " + cod->name
                 + " does not descend along the base cokernel");
      }
      auto obj     = relabel(*q.object, p->map, tag());
      q.object     = obj;
      q.projection = Morphism{cod, obj, q.projection.map};
      return q;
    }

    Base      _base;
    ObjectPtr _over;
  };

}  // namespace prenormal
