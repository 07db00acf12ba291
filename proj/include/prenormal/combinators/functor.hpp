#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "../core/backend.hpp"
#include "../core/homs.hpp"
#include "../engine/exact.hpp"
#include "../engine/kernel.hpp"
#include "../engine/report.hpp"
#include "../engine/workspace.hpp"

namespace prenormal {

  //! A finite poset used as the index category of diagrams; `arrows` lists
  //! every strict comparison i < j as (i, j).
  struct Shape {
    std::string                                     name;
    std::size_t                                     size = 1;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;

    static Shape single() {
      return {"single", 1, {}};
    }

    static Shape arrow() {
      return {"arrow", 2, {{0, 1}}};
    }

    static Shape discrete(std::size_t n) {
      return {"discrete" + std::to_string(n), n, {}};
    }

    static Shape chain(std::size_t n) {
      Shape s{"chain" + std::to_string(n), n, {}};
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) s.arrows.emplace_back(i, j);
      }
      return s;
    }

    [[nodiscard]] std::optional<std::size_t> arrow_index(std::size_t i, std::size_t j) const {
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (arrows[a] == std::pair{i, j}) return a;
      }
      return std::nullopt;
    }
  };

  //! Diagrams of shape S in a base backend.  A diagram is one object: the
  //! disjoint union of its fibres, labelled by shape object, with every base
  //! operation acting inside fibres, constants suffixed by "@i" and the
  //! image of i < j as the partial unary operation "@i>j".  Maps preserving
  //! this structure are the natural transformations; limits, kernels and
  //! cokernels are computed fibrewise.
  template <Backend Base>
  class FunctorBackend {
   public:
    static constexpr std::size_t default_object_cap = 40;
    static constexpr std::size_t default_fibre_cap  = 3;

    FunctorBackend(Base base, Shape shape) : _base(std::move(base)), _shape(std::move(shape)) {
      for (auto [i, j] : _shape.arrows) {
        if (i >= j || j >= _shape.size) fail(ErrorKind::invalid_input, "shape arrows must go up");
      }
    }

    [[nodiscard]] std::string tag() const {
      return _shape.name + "(" + _base.tag() + ")";
    }

    [[nodiscard]] Base const& base() const {
      return _base;
    }

    [[nodiscard]] Shape const& shape() const {
      return _shape;
    }

    static std::string arrow_key(std::size_t i, std::size_t j) {
      return "@" + std::to_string(i) + ">" + std::to_string(j);
    }

    //! The diagram with the given fibres and images of the shape arrows
    //! (in the order of `shape().arrows`), checked for functoriality.
    [[nodiscard]] ObjectPtr diagram(std::vector<ObjectPtr> const& fibres,
                                    std::vector<Morphism> const& maps, std::string name = {}) const {
      if (fibres.size() != _shape.size || maps.size() != _shape.arrows.size()) {
        fail(ErrorKind::invalid_input, "diagram does not match the shape " + _shape.name);
      }
      std::vector<Table> tables;
      for (std::size_t a = 0; a < maps.size(); ++a) {
        auto [i, j] = _shape.arrows[a];
        if (!same_object(maps[a].dom, fibres[i]) || !same_object(maps[a].cod, fibres[j])) {
          fail(ErrorKind::invalid_input, "diagram arrow " + arrow_key(i, j) + " has the wrong ends");
        }
        validate_morphism(_base, maps[a]);
        tables.push_back(maps[a].map);
      }
      auto x = assemble(fibres, tables, std::move(name));
      validate_object(*x);
      return x;
    }

    //! The fibre of a diagram at shape object i, as a base object.
    [[nodiscard]] ObjectPtr fibre(Object const& x, std::size_t i) const {
      auto members = members_of(x, i);
      Table index(x.size, undefined);
      for (std::size_t k = 0; k < members.size(); ++k) index[members[k]] = static_cast<Element>(k);
      auto const k = members.size();
      Object y;
      y.backend = _base.tag();
      y.name    = x.name + "@" + std::to_string(i);
      y.size    = k;
      for (auto m : members) y.names.push_back(x.element_name(m));
      auto suffix = "@" + std::to_string(i);
      for (auto const& [key, c] : x.constants) {
        if (key.size() > suffix.size() && key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0) {
          y.constants[key.substr(0, key.size() - suffix.size())] = index[c];
        }
      }
      auto restrict = [&](Element r) { return r == undefined ? undefined : index[r]; };
      for (auto const& [key, t] : x.unary) {
        if (key.front() == '@') continue;
        Table u(k);
        for (std::size_t a = 0; a < k; ++a) u[a] = restrict(t[members[a]]);
        y.unary[key] = std::move(u);
      }
      for (auto const& [key, t] : x.binary) {
        Table u(k * k);
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) u[a * k + b] = restrict(t[members[a] * x.size + members[b]]);
        }
        y.binary[key] = std::move(u);
      }
      for (auto const& [key, t] : x.relations) {
        BitRows u(k * k);
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) u[a * k + b] = t[members[a] * x.size + members[b]];
        }
        y.relations[key] = std::move(u);
      }
      for (auto const& [key, t] : x.predicates) {
        BitRows u(k);
        for (std::size_t a = 0; a < k; ++a) u[a] = t[members[a]];
        y.predicates[key] = std::move(u);
      }
      return make_object(std::move(y));
    }

    //! The image of shape arrow i < j in the diagram x, as a base morphism.
    [[nodiscard]] Morphism arrow_map(Object const& x, std::size_t i, std::size_t j) const {
      auto from = members_of(x, i);
      auto to   = members_of(x, j);
      Table index(x.size, undefined);
      for (std::size_t k = 0; k < to.size(); ++k) index[to[k]] = static_cast<Element>(k);
      auto const& t = x.unary.at(arrow_key(i, j));
      Table map(from.size());
      for (std::size_t k = 0; k < from.size(); ++k) map[k] = index[t[from[k]]];
      return Morphism{fibre(x, i), fibre(x, j), std::move(map)};
    }

    //! The component at i of a natural transformation.
    [[nodiscard]] Morphism component(Morphism const& f, std::size_t i) const {
      auto from = members_of(*f.dom, i);
      auto to   = members_of(*f.cod, i);
      Table index(f.cod->size, undefined);
      for (std::size_t k = 0; k < to.size(); ++k) index[to[k]] = static_cast<Element>(k);
      Table map(from.size());
      for (std::size_t k = 0; k < from.size(); ++k) map[k] = index[f.map[from[k]]];
      return Morphism{fibre(*f.dom, i), fibre(*f.cod, i), std::move(map)};
    }

    //! The natural transformation with the given components.
    [[nodiscard]] Morphism natural(ObjectPtr const& dom, ObjectPtr const& cod,
                                   std::vector<Morphism> const& components) const {
      Table map(dom->size, undefined);
      for (std::size_t i = 0; i < _shape.size; ++i) {
        auto from = members_of(*dom, i);
        auto to   = members_of(*cod, i);
        for (std::size_t k = 0; k < from.size(); ++k) map[from[k]] = to[components[i].map[k]];
      }
      return make_morphism(dom, cod, std::move(map));
    }

    void validate_object(Object const& x) const {
      detail::require(x.backend == tag(), x, "backend tag is not " + tag());
      detail::require(x.labels.size() == x.size, x, "missing fibre labels");
      std::vector<ObjectPtr> fibres;
      std::vector<Table>     tables;
      for (std::size_t i = 0; i < _shape.size; ++i) {
        fibres.push_back(fibre(x, i));
        _base.validate_object(*fibres.back());
      }
      for (auto [i, j] : _shape.arrows) {
        detail::require(x.unary.count(arrow_key(i, j)) == 1, x, "missing arrow " + arrow_key(i, j));
        auto m = arrow_map(x, i, j);
        if (auto why = structure_violation(*m.dom, *m.cod, m.map)) {
          fail(ErrorKind::invalid_object, x.name + ": arrow " + arrow_key(i, j) + ": " + *why);
        }
        tables.push_back(m.map);
      }
      for (auto [i, j] : _shape.arrows) {
        for (auto [j2, k] : _shape.arrows) {
          if (j2 != j) continue;
          auto ik = _shape.arrow_index(i, k);
          detail::require(ik.has_value(), x, "shape is not transitively closed");
          auto composite = compose(arrow_map(x, i, j), arrow_map(x, j, k));
          detail::require(composite.map == arrow_map(x, i, k).map, x,
                          "diagram is not functorial at " + arrow_key(i, k));
        }
      }
      detail::require(*assemble(fibres, tables, x.name) == x, x, "not in fibrewise normal form");
    }

    [[nodiscard]] bool is_trivial(Object const& x) const {
      for (std::size_t i = 0; i < _shape.size; ++i) {
        if (!_base.is_trivial(*fibre(x, i))) return false;
      }
      return true;
    }

    [[nodiscard]] Coreflection coreflection(ObjectPtr const& x) const {
      std::vector<Coreflection> parts;
      std::vector<ObjectPtr>    fibres;
      for (std::size_t i = 0; i < _shape.size; ++i) {
        parts.push_back(_base.coreflection(fibre(*x, i)));
        fibres.push_back(parts.back().object);
      }
      std::vector<Table> tables;
      for (auto [i, j] : _shape.arrows) {
        auto lifted = lift_through(compose(parts[i].counit, arrow_map(*x, i, j)), parts[j].counit);
        if (!lifted) fail(ErrorKind::backend_bug, "coreflection is not functorial");
        tables.push_back(lifted->map);
      }
      auto z = assemble(fibres, tables, "Z(" + x->name + ")");
      std::vector<Morphism> comps;
      for (auto const& p : parts) comps.push_back(p.counit);
      return Coreflection{z, natural(z, x, comps)};
    }

    [[nodiscard]] bool is_trivial_map(Morphism const& f) const {
      for (std::size_t i = 0; i < _shape.size; ++i) {
        if (!_base.is_trivial_map(component(f, i))) return false;
      }
      return true;
    }

    [[nodiscard]] QuotientResult cokernel(Morphism const& f) const {
      std::vector<QuotientResult> parts;
      for (std::size_t i = 0; i < _shape.size; ++i) parts.push_back(_base.cokernel(component(f, i)));
      return glue(f.cod, parts);
    }

    //! Fibrewise coequalizer: the seed is closed under the arrow maps
    //! until the fibre quotients are compatible with them.
    [[nodiscard]] QuotientResult quotient(ObjectPtr const& x, PairList const& seed) const
      requires HasQuotient<Base>
    {
      std::vector<ObjectPtr> fibres;
      std::vector<Table>     local(x->size);
      std::vector<PairList>  seeds(_shape.size);
      Table                  where(x->size);
      for (std::size_t i = 0; i < _shape.size; ++i) {
        fibres.push_back(fibre(*x, i));
        auto m = members_of(*x, i);
        for (std::size_t k = 0; k < m.size(); ++k) where[m[k]] = static_cast<Element>(k);
      }
      for (auto [a, b] : seed) {
        if (x->labels[a] != x->labels[b]) {
          fail(ErrorKind::invalid_input, "coequalized pair lies in different fibres");
        }
        seeds[x->labels[a]].emplace_back(where[a], where[b]);
      }
      std::vector<QuotientResult> parts;
      while (true) {
        parts.clear();
        for (std::size_t i = 0; i < _shape.size; ++i) parts.push_back(_base.quotient(fibres[i], seeds[i]));
        bool grown = false;
        for (auto [i, j] : _shape.arrows) {
          auto m  = arrow_map(*x, i, j);
          auto pi = parts[i].projection.map;
          auto pj = parts[j].projection.map;
          for (std::size_t a = 0; a < pi.size(); ++a) {
            for (std::size_t b = a + 1; b < pi.size(); ++b) {
              if (pi[a] == pi[b] && pj[m.map[a]] != pj[m.map[b]]) {
                seeds[j].emplace_back(m.map[a], m.map[b]);
                grown = true;
              }
            }
          }
        }
        if (!grown) break;
      }
      return glue(x, parts);
    }

    //! Normal epis are the natural transformations with normal-epi components.
    [[nodiscard]] bool normal_epi_characterisation(Morphism const& f) const {
      for (std::size_t i = 0; i < _shape.size; ++i) {
        if (!is_normal_epi(_base, component(f, i))) return false;
      }
      return true;
    }

    [[nodiscard]] bool epis_are_surjective() const {
      return _base.epis_are_surjective();
    }

    [[nodiscard]] bool monos_are_injective() const {
      return _base.monos_are_injective();
    }

    //! Diagrams whose fibres are base catalog objects with at most
    //! `max_order` elements (default 3), smallest total size first, up to
    //! the object cap (default 40).
    [[nodiscard]] std::vector<ObjectPtr> catalog(CatalogCaps const& caps) const {
      auto cap       = caps.max_objects ? caps.max_objects : default_object_cap;
      auto fibre_cap = caps.max_order ? caps.max_order : default_fibre_cap;
      std::vector<ObjectPtr> pool;
      for (auto const& x : _base.catalog({})) {
        if (x->size <= fibre_cap) pool.push_back(x);
      }
      std::vector<std::vector<std::size_t>> tuples{{}};
      for (std::size_t i = 0; i < _shape.size; ++i) {
        std::vector<std::vector<std::size_t>> next;
        for (auto const& t : tuples) {
          for (std::size_t p = 0; p < pool.size(); ++p) {
            next.push_back(t);
            next.back().push_back(p);
          }
        }
        tuples = std::move(next);
      }
      auto total = [&](std::vector<std::size_t> const& t) {
        std::size_t s = 0;
        for (auto p : t) s += pool[p]->size;
        return s;
      };
      std::stable_sort(tuples.begin(), tuples.end(),
                       [&](auto const& a, auto const& b) { return total(a) < total(b); });
      std::vector<ObjectPtr> out;
      for (auto const& t : tuples) {
        std::vector<ObjectPtr> fibres;
        for (auto p : t) fibres.push_back(pool[p]);
        extend(fibres, {}, out, cap);
        if (out.size() >= cap) break;
      }
      return out;
    }

   private:
    static std::vector<Element> members_of(Object const& x, std::size_t i) {
      std::vector<Element> m;
      for (std::size_t k = 0; k < x.size; ++k) {
        if (x.labels[k] == static_cast<Element>(i)) m.push_back(static_cast<Element>(k));
      }
      return m;
    }

    void extend(std::vector<ObjectPtr> const& fibres, std::vector<Morphism> maps,
                std::vector<ObjectPtr>& out, std::size_t cap) const {
      if (out.size() >= cap) return;
      if (maps.size() == _shape.arrows.size()) {
        for (auto [i, j] : _shape.arrows) {
          for (auto [j2, k] : _shape.arrows) {
            if (j2 != j) continue;
            auto ij = *_shape.arrow_index(i, j);
            auto jk = *_shape.arrow_index(j, k);
            auto ik = *_shape.arrow_index(i, k);
            if (compose(maps[ij], maps[jk]).map != maps[ik].map) return;
          }
        }
        std::vector<Table> tables;
        for (auto const& m : maps) tables.push_back(m.map);
        std::string name;
        for (std::size_t i = 0; i < fibres.size(); ++i) name += (i ? "," : "") + fibres[i]->name;
        out.push_back(assemble(fibres, tables, _shape.name + "(" + name + ")#" + std::to_string(out.size())));
        return;
      }
      auto [i, j] = _shape.arrows[maps.size()];
      for (auto const& m : homs(fibres[i], fibres[j])) {
        auto next = maps;
        next.push_back(m);
        extend(fibres, std::move(next), out, cap);
        if (out.size() >= cap) return;
      }
    }

    [[nodiscard]] ObjectPtr assemble(std::vector<ObjectPtr> const& fibres,
                                     std::vector<Table> const& maps, std::string name) const {
      std::vector<std::size_t> offset(fibres.size() + 1, 0);
      for (std::size_t i = 0; i < fibres.size(); ++i) offset[i + 1] = offset[i] + fibres[i]->size;
      auto const n = offset.back();
      Object x;
      x.backend = tag();
      x.name    = name.empty() ? _shape.name + "-diagram" : std::move(name);
      x.size    = n;
      for (std::size_t i = 0; i < fibres.size(); ++i) {
        auto const& f = *fibres[i];
        auto const o  = offset[i];
        auto shift    = [o](Element r) { return r == undefined ? undefined : static_cast<Element>(r + o); };
        for (std::size_t a = 0; a < f.size; ++a) {
          x.names.push_back(f.element_name(a) + "@" + std::to_string(i));
          x.labels.push_back(static_cast<Element>(i));
        }
        for (auto const& [key, c] : f.constants) x.constants[key + "@" + std::to_string(i)] = shift(c);
        for (auto const& [key, t] : f.unary) {
          auto& u = x.unary[key];
          u.resize(n, undefined);
          for (std::size_t a = 0; a < f.size; ++a) u[o + a] = shift(t[a]);
        }
        for (auto const& [key, t] : f.binary) {
          auto& u = x.binary[key];
          u.resize(n * n, undefined);
          for (std::size_t a = 0; a < f.size; ++a) {
            for (std::size_t b = 0; b < f.size; ++b) u[(o + a) * n + o + b] = shift(t[a * f.size + b]);
          }
        }
        for (auto const& [key, t] : f.relations) {
          auto& u = x.relations[key];
          u.resize(n * n, 0);
          for (std::size_t a = 0; a < f.size; ++a) {
            for (std::size_t b = 0; b < f.size; ++b) u[(o + a) * n + o + b] = t[a * f.size + b];
          }
        }
        for (auto const& [key, t] : f.predicates) {
          auto& u = x.predicates[key];
          u.resize(n, 0);
          for (std::size_t a = 0; a < f.size; ++a) u[o + a] = t[a];
        }
      }
      for (std::size_t a = 0; a < _shape.arrows.size(); ++a) {
        auto [i, j] = _shape.arrows[a];
        Table u(n, undefined);
        for (std::size_t e = 0; e < fibres[i]->size; ++e) {
          u[offset[i] + e] = static_cast<Element>(offset[j] + maps[a][e]);
        }
        x.unary[arrow_key(i, j)] = std::move(u);
      }
      return make_object(std::move(x));
    }

    //! Reassembles fibrewise quotients of x into a quotient diagram.
    [[nodiscard]] QuotientResult glue(ObjectPtr const& x, std::vector<QuotientResult> const& parts) const {
      std::vector<ObjectPtr> fibres;
      std::vector<Table>     tables;
      for (auto const& p : parts) fibres.push_back(p.object);
      for (auto [i, j] : _shape.arrows) {
        auto induced = descend_along(parts[i].projection,
                                     compose(arrow_map(*x, i, j), parts[j].projection));
        if (!induced) fail(ErrorKind::backend_bug, "fibrewise quotient is not functorial");
        tables.push_back(induced->map);
      }
      auto q = assemble(fibres, tables, x->name + "/~");
      std::vector<Morphism> comps;
      for (auto const& p : parts) comps.push_back(p.projection);
      auto proj = natural(x, q, comps);
      QuotientResult out{q, proj, kernel_congruence(proj, CongruenceKind::equivalence), false};
      for (auto const& p : parts) out.relation_closure_added = out.relation_closure_added || p.relation_closure_added;
      return out;
    }

    Base  _base;
    Shape _shape;
  };

  //! Checks that evaluation at shape object i preserves trivial objects,
  //! coreflections, kernels, trivial maps, both factorisation classes and
  //! the exact sequences (ker g, g), over a workspace of diagrams.
  template <Backend Base>
  LawReport check_evaluation(FunctorBackend<Base> const& fb, Workspace<FunctorBackend<Base>> const& ws,
                             std::size_t i, LawOptions opts = {}) {
    LawRun run("evaluation@" + std::to_string(i), fb.tag(), ws.objects().size(), opts);
    auto const& base = fb.base();
    auto same_sub = [](Morphism const& a, Morphism const& b) {
      auto c = lift_through(a, b);
      return c && is_iso(*c);
    };
    for (auto const& x : ws.objects()) {
      run.next_case();
      run.applicable();
      auto xi = fb.fibre(*x, i);
      if (fb.is_trivial(*x) && !base.is_trivial(*xi)) {
        run.violation({"trivial diagram with a non-trivial fibre", {}});
      }
      auto cr = fb.coreflection(x);
      if (!same_sub(fb.component(cr.counit, i), base.coreflection(xi).counit)) {
        run.violation({"evaluated coreflection differs from the base coreflection",
                       {{"counit", cr.counit}}});
      }
    }
    for (std::size_t id = 0; id < ws.arrows().size(); ++id) {
      run.next_case();
      run.applicable();
      auto const& f = ws.arrow(id).f;
      auto fi       = fb.component(f, i);
      if (!same_sub(fb.component(kernel(fb, f).k, i), kernel(base, fi).k)) {
        run.violation({"evaluated kernel differs from the kernel of the component", {{"f", f}}});
      }
      if (ws.trivial_map(id) && !base.is_trivial_map(fi)) {
        run.violation({"trivial map with a non-trivial component", {{"f", f}}});
      }
      if (ws.normal_epi(id) && !is_normal_epi(base, fi)) {
        run.violation({"normal epi with a component that is not a normal epi", {{"f", f}}});
      }
      if (ws.trivial_kernel(id) && !has_trivial_kernel(base, fi)) {
        run.violation({"trivial-kernel map with a component of non-trivial kernel", {{"f", f}}});
      }
      if (ws.normal_epi(id)) {
        auto k = kernel(fb, f).k;
        if (!check_exact_sequence(base, fb.component(k, i), fi, {}).exact()) {
          run.violation({"evaluated exact sequence is not exact", {{"k", k}, {"g", f}}});
        }
      }
    }
    return run.finish();
  }

}  // namespace prenormal
