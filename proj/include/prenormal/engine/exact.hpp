#pragma once

#include <optional>
#include <string>
#include <vector>

#include "../core/backend.hpp"
#include "../core/homs.hpp"
#include "../core/limits.hpp"
#include "kernel.hpp"

namespace prenormal {

  //! f x g : dom f x dom g -> cod f x cod g.
  inline Morphism product_of(Morphism const& f, Morphism const& g) {
    auto s = product(f.dom, g.dom);
    auto t = product(f.cod, g.cod);
    Table map(s.object->size);
    for (std::size_t i = 0; i < map.size(); ++i) {
      map[i] = t.pair(f.map[s.left.map[i]], g.map[s.right.map[i]]);
      if (map[i] == undefined) fail(ErrorKind::backend_bug, "product of maps leaves the product");
    }
    return Morphism{s.object, t.object, std::move(map)};
  }

  //! A cocone violating the pushout property of a square, found by
  //! enumerating maps into the workspace objects.
  struct PushoutViolation {
    Morphism    x;
    Morphism    y;
    std::size_t mediators = 0;
  };

  //! Checks that the commutative square is a pushout against every
  //! workspace object: each cocone (x out of dom bottom, y out of dom right)
  //! has exactly one mediator out of the corner.
  inline std::optional<PushoutViolation> pushout_violation(Square const& s,
                                                           std::vector<ObjectPtr> const& workspace) {
    bool const top_onto   = is_surjective(s.top);
    bool const right_onto = is_surjective(s.right);
    for (auto const& t : workspace) {
      std::optional<PushoutViolation> bad;
      for_each_hom(s.bottom.dom, t, [&](Morphism const& x) {
        auto target = compose(s.left, x);
        std::vector<Morphism> ys;
        if (top_onto) {
          if (auto y = descend_along(s.top, target)) ys.push_back(std::move(*y));
        } else {
          for_each_hom(s.right.dom, t, [&](Morphism const& y) {
            if (compose(s.top, y).map == target.map) ys.push_back(y);
            return true;
          });
        }
        for (auto const& y : ys) {
          std::size_t count = 0;
          if (right_onto) {
            auto w = descend_along(s.right, y);
            if (w && compose(s.bottom, *w).map == x.map) count = 1;
          } else {
            for_each_hom(s.bottom.cod, t, [&](Morphism const& w) {
              if (compose(s.bottom, w).map == x.map && compose(s.right, w).map == y.map) ++count;
              return true;
            });
          }
          if (count != 1) {
            bad = PushoutViolation{x, y, count};
            return false;
          }
        }
        return true;
      });
      if (bad) return bad;
    }
    return std::nullopt;
  }

  //! Exactness of A -f-> B -g-> C, together with the square
  //!
  //!     A --f--> B
  //!     |        |
  //!     u        g
  //!     v        v
  //!     Z -c---> C
  //!
  //! where c is the coreflection counit of C.
  struct ExactnessReport {
    bool                    kernel_ok   = false;
    bool                    cokernel_ok = false;
    std::optional<Morphism> kernel_comparison;
    std::optional<Morphism> cokernel_comparison;
    Morphism                counit;
    std::optional<Morphism> corner;
    bool                    square_pullback = false;
    bool                    square_pushout  = false;
    bool                    corner_reflection = false;

    [[nodiscard]] bool exact() const {
      return kernel_ok && cokernel_ok;
    }
  };

  //! Whether u : A -> Z is the reflection of A into the trivial objects,
  //! i.e. isomorphic under A to the cokernel of the identity.
  template <Backend B>
  bool is_trivial_reflection(B const& b, Morphism const& u) {
    auto unit = cokernel(b, identity(u.dom));
    auto cmp  = descend_along(unit.projection, u);
    return cmp && is_iso(*cmp);
  }

  //! Whether c : Z -> C is the coreflection of C into the trivial objects.
  template <Backend B>
  bool is_trivial_coreflection(B const& b, Morphism const& c) {
    auto cr  = b.coreflection(c.cod);
    auto cmp = lift_through(c, cr.counit);
    return cmp && is_iso(*cmp);
  }

  template <Backend B>
  ExactnessReport check_exact_sequence(B const& b, Morphism const& f, Morphism const& g,
                                       std::vector<ObjectPtr> const& workspace) {
    if (!same_object(f.cod, g.dom)) {
      fail(ErrorKind::invalid_input, "check_exact_sequence: f and g are not composable");
    }
    ExactnessReport r;
    auto ker = kernel(b, g);
    r.kernel_comparison = lift_through(f, ker.k);
    r.kernel_ok         = r.kernel_comparison && is_iso(*r.kernel_comparison);
    auto coker            = cokernel(b, f);
    r.cokernel_comparison = descend_along(coker.projection, g);
    r.cokernel_ok         = r.cokernel_comparison && is_iso(*r.cokernel_comparison);
    r.counit              = ker.coreflection.counit;
    if (!r.exact()) return r;
    r.corner = lift_through(compose(f, g), r.counit);
    if (!r.corner) fail(ErrorKind::backend_bug, "the composite of an exact pair is not trivial");
    Square sq{f, *r.corner, g, r.counit};
    r.square_pullback   = is_pullback(sq);
    r.square_pushout    = !pushout_violation(sq, workspace).has_value();
    r.corner_reflection = is_trivial_reflection(b, *r.corner);
    return r;
  }

  //! One factorisation A -u-> Z -c-> C of the composite of an exact pair
  //! through a trivial object, with the three conditions that must agree:
  //! the square is a pullback and a pushout, c is a coreflection, u is a
  //! reflection.
  struct TrivialFactorisation {
    Morphism u;
    Morphism c;
    bool     bicartesian  = false;
    bool     coreflection = false;
    bool     reflection   = false;

    [[nodiscard]] bool consistent() const {
      return bicartesian == coreflection && coreflection == reflection;
    }
  };

  template <Backend B>
  std::vector<TrivialFactorisation> trivial_factorisations(B const& b, Morphism const& f,
                                                           Morphism const& g,
                                                           std::vector<ObjectPtr> const& workspace) {
    std::vector<TrivialFactorisation> out;
    auto fg = compose(f, g);
    for (auto const& z : workspace) {
      if (!b.is_trivial(*z)) continue;
      for_each_hom(f.dom, z, [&](Morphism const& u) {
        for_each_hom(z, g.cod, [&](Morphism const& c) {
          if (compose(u, c).map != fg.map) return true;
          TrivialFactorisation t{u, c};
          Square sq{f, u, g, c};
          t.bicartesian  = is_pullback(sq) && !pushout_violation(sq, workspace);
          t.coreflection = is_trivial_coreflection(b, c);
          t.reflection   = is_trivial_reflection(b, u);
          out.push_back(std::move(t));
          return true;
        });
        return true;
      });
    }
    return out;
  }

  //! The sequence (ker g, g).
  template <Backend B>
  std::pair<Morphism, Morphism> kernel_sequence(B const& b, Morphism const& g) {
    return {kernel(b, g).k, g};
  }

  //! The pullback of A -f-> B -g-> C along c : C' -> C: the sequence
  //! A' -f'-> B' -g'-> C' with B' = B x_C C' and A' = A x_B B'.
  struct PulledBackSequence {
    Morphism f;
    Morphism g;
    Morphism b;
    Morphism a;
  };

  inline PulledBackSequence pull_back_sequence(Morphism const& f, Morphism const& g,
                                               Morphism const& c) {
    auto pg = pullback(g, c);
    auto pf = pullback(f, pg.left);
    return PulledBackSequence{pf.right, pg.right, pg.left, pf.left};
  }

  //! The Noether diagram for normal monos m : M -> A and n : N -> A with
  //! n factoring through m as j.  p, q, r are the cokernels of m, n, j and
  //! phi : M/N -> A/N, psi : A/N -> A/M the induced maps.
  struct NoetherReport {
    Morphism                m;
    Morphism                n;
    Morphism                j;
    Morphism                p;
    Morphism                q;
    Morphism                r;
    std::optional<Morphism> phi;
    std::optional<Morphism> psi;
    //! The comparison (A/N)/(M/N) -> A/M.
    std::optional<Morphism> comparison;
    bool                    j_normal_mono   = false;
    bool                    phi_normal_mono = false;
    bool                    psi_normal_epi  = false;
    bool                    row_exact       = false;
    std::string             note;

    [[nodiscard]] bool holds() const {
      return phi && psi && comparison && is_iso(*comparison) && j_normal_mono && phi_normal_mono
             && psi_normal_epi && row_exact;
    }
  };

  template <Backend B>
  NoetherReport noether_third(B const& b, Morphism const& m, Morphism const& n,
                              std::vector<ObjectPtr> const& workspace) {
    if (!same_object(m.cod, n.cod)) {
      fail(ErrorKind::invalid_input, "noether_third: m and n have different codomains");
    }
    auto j = lift_through(n, m);
    if (!j) fail(ErrorKind::invalid_input, "noether_third: n does not factor through m");
    auto p = cokernel(b, m).projection;
    auto q = cokernel(b, n).projection;
    auto r = cokernel(b, *j).projection;
    NoetherReport out{m, n, *j, p, q, r};
    out.j_normal_mono = is_normal_mono(b, *j);
    out.phi           = descend_along(r, compose(m, q));
    out.psi           = descend_along(q, p);
    if (!out.phi || !out.psi) {
      out.note = !out.phi ? "m then q does not descend along r" : "p does not descend along q";
      return out;
    }
    out.phi_normal_mono = is_normal_mono(b, *out.phi);
    out.psi_normal_epi  = is_normal_epi(b, *out.psi);
    auto coker_phi      = cokernel(b, *out.phi);
    out.comparison      = descend_along(coker_phi.projection, *out.psi);
    out.row_exact       = check_exact_sequence(b, *out.phi, *out.psi, workspace).exact();
    if (!out.comparison) out.note = "psi does not descend along the cokernel of phi";
    return out;
  }

}  // namespace prenormal
