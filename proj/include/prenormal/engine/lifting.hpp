#pragma once

#include <optional>
#include <string>
#include <vector>

#include "../core/homs.hpp"
#include "../core/morphism.hpp"

namespace prenormal {

  //! Diagonals d : cod e -> dom m of the square
  //!
  //!     A --top--> C
  //!     |          |
  //!     e          m
  //!     v          v
  //!     B -bottom-> D
  //!
  //! with e then d equal to top and d then m equal to bottom.
  struct LiftResult {
    std::optional<Morphism> diagonal;
    std::size_t             count = 0;
    std::string             note;

    [[nodiscard]] bool unique() const {
      return count == 1;
    }
  };

  inline LiftResult lift_diagonal(Morphism const& e, Morphism const& m, Morphism const& top,
                                  Morphism const& bottom) {
    if (!same_object(e.dom, top.dom) || !same_object(top.cod, m.dom)
        || !same_object(e.cod, bottom.dom) || !same_object(bottom.cod, m.cod)) {
      fail(ErrorKind::invalid_input, "lift_diagonal: the square is not well typed");
    }
    if (compose(top, m).map != compose(e, bottom).map) {
      fail(ErrorKind::invalid_input, "lift_diagonal: the square does not commute");
    }
    LiftResult r;
    if (is_surjective(e)) {
      auto d = descend_along(e, top);
      if (!d) {
        r.note = "top is not constant on the fibres of e or the induced table is not a morphism";
        return r;
      }
      if (compose(*d, m).map != bottom.map) {
        r.note = "the map induced on cod e does not reach bottom through m";
        return r;
      }
      r.diagonal = std::move(d);
      r.count    = 1;
      return r;
    }
    for_each_hom(e.cod, m.dom, [&](Morphism const& d) {
      if (compose(e, d).map == top.map && compose(d, m).map == bottom.map) {
        if (!r.diagonal) r.diagonal = d;
        ++r.count;
      }
      return true;
    });
    if (r.count == 0) r.note = "no diagonal exists";
    if (r.count > 1) r.note = std::to_string(r.count) + " diagonals exist";
    return r;
  }

}  // namespace prenormal
