#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "../core/backend.hpp"
#include "../core/homs.hpp"
#include "../core/limits.hpp"

namespace prenormal {

  //! The kernel of f as the pullback of the coreflection counit of cod f
  //! along f.  `to_coreflection` is the other leg of the pullback square.
  struct KernelResult {
    ObjectPtr    object;
    Morphism     k;
    Morphism     to_coreflection;
    Coreflection coreflection;
  };

  template <Backend B>
  KernelResult kernel(B const& b, Morphism const& f) {
    auto cr = b.coreflection(f.cod);
    auto pb = pullback(f, cr.counit);
    // the pullback of a mono is a mono, so elements can carry the names of
    // their images in dom f
    Object named = *pb.object;
    named.name   = "ker(" + f.dom->name + "->" + f.cod->name + ")";
    for (std::size_t i = 0; i < named.size; ++i) {
      named.names[i] = f.dom->element_name(pb.left.map[i]);
    }
    auto obj = make_object(std::move(named));
    return KernelResult{obj,
                        Morphism{obj, f.dom, pb.left.map},
                        Morphism{obj, cr.object, pb.right.map},
                        std::move(cr)};
  }

  //! The universal map out of cod f killing f.
  template <Backend B>
  QuotientResult cokernel(B const& b, Morphism const& f) {
    auto q = b.cokernel(f);
    if (!same_object(q.projection.dom, f.cod)) {
      fail(ErrorKind::backend_bug, "cokernel projection does not start at the codomain");
    }
    return q;
  }

  //! Whether f factors through the counit of the coreflection of its
  //! codomain (the generic definition of a trivial map).
  template <Backend B>
  bool factors_through_coreflection(B const& b, Morphism const& f) {
    auto cr = b.coreflection(f.cod);
    return lift_through(f, cr.counit).has_value();
  }

  //! The comparison f = m . e where e is the cokernel of the kernel of f.
  struct Comparison {
    KernelResult   ker;
    QuotientResult coker;
    Morphism       e;
    Morphism       m;
  };

  template <Backend B>
  Comparison canonical_comparison(B const& b, Morphism const& f) {
    auto ker   = kernel(b, f);
    auto coker = cokernel(b, ker.k);
    auto m     = descend_along(coker.projection, f);
    if (!m) {
      fail(ErrorKind::backend_bug,
           "f does not descend along the cokernel of its kernel (" + f.dom->name + " -> "
               + f.cod->name + ")");
    }
    return Comparison{std::move(ker), coker, coker.projection, std::move(*m)};
  }

  template <Backend B>
  bool is_normal_epi(B const& b, Morphism const& f) {
    return is_iso(canonical_comparison(b, f).m);
  }

  template <Backend B>
  bool has_trivial_kernel(B const& b, Morphism const& f) {
    return b.is_trivial(*kernel(b, f).object);
  }

  struct Factorisation {
    Morphism       e;
    Morphism       m;
    KernelResult   kernel;
    QuotientResult cokernel;
    bool           e_is_normal_epi      = false;
    bool           m_has_trivial_kernel = false;
    //! Elements of dom m lying in the non-trivial kernel of m, when there is one.
    std::vector<Element> witness;
  };

  template <Backend B>
  Factorisation factorise(B const& b, Morphism const& f) {
    auto cmp = canonical_comparison(b, f);
    Factorisation out{cmp.e, cmp.m, cmp.ker, cmp.coker};
    out.e_is_normal_epi = is_iso(canonical_comparison(b, cmp.e).m);
    auto km             = kernel(b, cmp.m);
    out.m_has_trivial_kernel = b.is_trivial(*km.object);
    if (!out.m_has_trivial_kernel) {
      for (auto x : triviality_witness(b, *km.object)) out.witness.push_back(km.k.map[x]);
    }
    return out;
  }

  //! Whether m is (isomorphic to) the kernel of its cokernel.
  template <Backend B>
  bool is_normal_mono(B const& b, Morphism const& m) {
    QuotientResult q;
    try {
      q = cokernel(b, m);
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::unsupported) throw;
      return false;
    }
    auto ker = kernel(b, q.projection);
    auto cmp = lift_through(m, ker.k);
    return cmp && is_iso(*cmp);
  }

  //! Whether f is the coequalizer of its kernel pair.
  template <Backend B>
  bool is_regular_epi(B const& b, Morphism const& f) {
    if constexpr (HasQuotient<B>) {
      auto kp = pullback(f, f);
      PairList seed;
      for (std::size_t i = 0; i < kp.object->size; ++i) {
        if (kp.left.map[i] != kp.right.map[i]) seed.emplace_back(kp.left.map[i], kp.right.map[i]);
      }
      auto q   = b.quotient(f.dom, seed);
      auto cmp = descend_along(q.projection, f);
      return cmp && is_iso(*cmp);
    } else {
      fail(ErrorKind::unsupported, b.tag() + " has no general coequalizers");
    }
  }

  //! Epimorphism test: surjective maps are epi; where the backend certifies
  //! that epis are surjective that settles it, otherwise a pair of distinct
  //! maps out of cod f equalised by f is searched for in the workspace.
  template <Backend B>
  bool is_epi(B const& b, Morphism const& f, std::vector<ObjectPtr> const& workspace) {
    if (is_surjective(f)) return true;
    if (b.epis_are_surjective()) return false;
    for (auto const& t : workspace) {
      std::vector<Table> seen;
      bool separated = false;
      for_each_hom(f.cod, t, [&](Morphism const& h) {
        auto c = compose(f, h).map;
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) {
          separated = true;
          return false;
        }
        seen.push_back(std::move(c));
        return true;
      });
      if (separated) return false;
    }
    return true;
  }

  template <Backend B>
  bool is_mono(B const& b, Morphism const& f, std::vector<ObjectPtr> const& workspace) {
    if (is_injective(f)) return true;
    if (b.monos_are_injective()) return false;
    auto probe = [&](ObjectPtr const& t) {
      std::vector<Table> seen;
      bool separated = false;
      for_each_hom(t, f.dom, [&](Morphism const& h) {
        auto c = compose(h, f).map;
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) {
          separated = true;
          return false;
        }
        seen.push_back(std::move(c));
        return true;
      });
      return separated;
    };
    if (probe(f.dom)) return false;
    for (auto const& t : workspace) {
      if (probe(t)) return false;
    }
    return true;
  }

  struct ReflectionReport {
    //! False when x admits no map into a trivial object.
    bool                    applicable = true;
    bool                    exists = false;
    std::optional<Morphism> unit;
    bool                    unit_is_epi = false;
    std::string             note;
  };

  //! The reflection of x into the trivial objects, as the cokernel of the
  //! identity.
  template <Backend B>
  ReflectionReport check_subreflectivity(B const& b, ObjectPtr const& x,
                                         std::vector<ObjectPtr> const& workspace) {
    ReflectionReport r;
    QuotientResult   q;
    try {
      q = cokernel(b, identity(x));
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::unsupported) throw;
      r.applicable = false;
      r.note       = "no map into a trivial object";
      return r;
    }
    if (!b.is_trivial(*q.object)) {
      r.note = "cokernel of the identity is not trivial";
      return r;
    }
    r.exists      = true;
    r.unit        = q.projection;
    r.unit_is_epi = is_epi(b, q.projection, workspace);
    return r;
  }

}  // namespace prenormal
