#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "exact.hpp"
#include "kernel.hpp"
#include "lifting.hpp"
#include "report.hpp"
#include "workspace.hpp"

namespace prenormal {

  //! Every law id, in the order suites run them.
  inline std::vector<std::string> const& law_ids() {
    static std::vector<std::string> const ids{
        "kernels",          "kernel-formula",    "trivial-retracts",     "kernel-stability",
        "subreflectivity",  "characterisation",  "factorisation",        "orthogonality",
        "iso-intersection", "composition-closure", "class-cancellation", "tker-cancellation",
        "stability",        "stability-normal-monos", "pb-pushout",      "cancellation",
        "barr-kock",        "exact-sequences",   "product-exactness",    "pullback-exactness",
        "noether"};
    return ids;
  }

  inline std::map<std::string, std::vector<std::string>> const& law_groups() {
    static std::map<std::string, std::vector<std::string>> const groups{
        {"core",
         {"kernels", "kernel-formula", "trivial-retracts", "kernel-stability", "subreflectivity",
          "characterisation"}},
        {"fs-axioms",
         {"factorisation", "orthogonality", "iso-intersection", "composition-closure",
          "class-cancellation", "tker-cancellation"}},
        {"prenormality",
         {"factorisation", "orthogonality", "iso-intersection", "composition-closure",
          "class-cancellation", "tker-cancellation", "stability"}},
        {"pullback-lemmas", {"pb-pushout", "cancellation", "barr-kock"}},
        {"exactness", {"exact-sequences", "product-exactness", "pullback-exactness", "noether"}},
        {"all", law_ids()},
    };
    return groups;
  }

  //! Expands a comma-separated list of law ids and group names, keeping
  //! suite order and dropping duplicates.
  inline std::vector<std::string> expand_laws(std::string const& list) {
    std::set<std::string> wanted;
    std::stringstream     in(list);
    std::string           item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      auto const& groups = law_groups();
      if (auto it = groups.find(item); it != groups.end()) {
        wanted.insert(it->second.begin(), it->second.end());
      } else if (std::find(law_ids().begin(), law_ids().end(), item) != law_ids().end()) {
        wanted.insert(item);
      } else {
        fail(ErrorKind::invalid_input, "unknown law or group: " + item);
      }
    }
    if (wanted.empty()) fail(ErrorKind::invalid_input, "no laws selected");
    std::vector<std::string> out;
    for (auto const& id : law_ids()) {
      if (wanted.count(id)) out.push_back(id);
    }
    return out;
  }

  //! Bounded verification of the laws over a workspace.
  template <Backend B>
  class LawSuite {
   public:
    static constexpr std::size_t search_budget = 200000;

    explicit LawSuite(Workspace<B> const& ws, LawOptions opts = {}) : _ws(ws), _opts(opts) {}

    [[nodiscard]] LawReport run(std::string const& law) const {
      static std::map<std::string, LawReport (LawSuite::*)() const> const table{
          {"kernels", &LawSuite::kernels},
          {"kernel-formula", &LawSuite::kernel_formula},
          {"trivial-retracts", &LawSuite::trivial_retracts},
          {"kernel-stability", &LawSuite::kernel_stability},
          {"subreflectivity", &LawSuite::subreflectivity},
          {"characterisation", &LawSuite::characterisation},
          {"factorisation", &LawSuite::factorisation},
          {"orthogonality", &LawSuite::orthogonality},
          {"iso-intersection", &LawSuite::iso_intersection},
          {"composition-closure", &LawSuite::composition_closure},
          {"class-cancellation", &LawSuite::class_cancellation},
          {"tker-cancellation", &LawSuite::tker_cancellation},
          {"stability", &LawSuite::stability},
          {"stability-normal-monos", &LawSuite::stability_normal_monos},
          {"pb-pushout", &LawSuite::pb_pushout},
          {"cancellation", &LawSuite::cancellation},
          {"barr-kock", &LawSuite::barr_kock},
          {"exact-sequences", &LawSuite::exact_sequences},
          {"product-exactness", &LawSuite::product_exactness},
          {"pullback-exactness", &LawSuite::pullback_exactness},
          {"noether", &LawSuite::noether},
      };
      auto it = table.find(law);
      if (it == table.end()) fail(ErrorKind::invalid_input, "unknown law: " + law);
      try {
        return (this->*(it->second))();
      } catch (Error const& e) {
        LawRun run = start(law);
        run.violation({std::string("error: ") + e.what(), {}});
        return run.finish();
      }
    }

    [[nodiscard]] std::vector<LawReport> run_all(std::vector<std::string> const& laws) const {
      std::vector<LawReport> out;
      for (auto const& l : laws) out.push_back(run(l));
      return out;
    }

    //! Coreflections are trivial with mono counits through which every
    //! trivial map factors; kernels are monos killing f through which every
    //! map killed by f factors; trivial maps are those factoring through
    //! the coreflection.
    [[nodiscard]] LawReport kernels() const {
      auto run = start("kernels");
      auto const& objs = _ws.objects();
      for (auto i : run.select(objs.size())) {
        run.next_case();
        run.applicable();
        auto cr = b().coreflection(objs[i]);
        if (!b().is_trivial(*cr.object)) {
          run.violation({"coreflection object is not trivial", {{"counit", cr.counit}}});
        }
        if (!is_mono(b(), cr.counit, objs)) {
          run.violation({"coreflection counit is not a monomorphism", {{"counit", cr.counit}}});
        }
        for (auto t : _ws.into(i)) {
          auto const& tf = _ws.arrow(t).f;
          if (b().is_trivial(*tf.dom) && !lift_through(tf, cr.counit)) {
            run.violation({"map from a trivial object does not factor through the counit",
                           {{"t", tf}, {"counit", cr.counit}}});
          }
        }
      }
      for (auto id : run.select(_ws.arrows().size())) {
        run.next_case();
        run.applicable();
        auto const& f = _ws.arrow(id).f;
        if (_ws.trivial_map(id) != factors_through_coreflection(b(), f)) {
          run.violation({"trivial-map test disagrees with factoring through the coreflection",
                         {{"f", f}}});
        }
        auto ker = kernel(b(), f);
        if (!is_mono(b(), ker.k, objs)) {
          run.violation({"kernel inclusion is not a monomorphism", {{"f", f}, {"k", ker.k}}});
        }
        if (!b().is_trivial_map(compose(ker.k, f))) {
          run.violation({"kernel inclusion followed by f is not trivial", {{"f", f}, {"k", ker.k}}});
        }
        for (auto g : _ws.into(_ws.arrow(id).dom)) {
          auto const& gf = _ws.arrow(g).f;
          if (b().is_trivial_map(compose(gf, f)) && !lift_through(gf, ker.k)) {
            run.violation({"map killed by f does not factor through the kernel",
                           {{"f", f}, {"g", gf}, {"k", ker.k}}});
          }
        }
      }
      return run.finish();
    }

    [[nodiscard]] LawReport kernel_formula() const {
      auto run = start("kernel-formula");
      if constexpr (HasKernelFormula<B>) {
        for (auto id : run.select(_ws.arrows().size())) {
          run.next_case();
          run.applicable();
          auto const& f = _ws.arrow(id).f;
          auto ker      = kernel(b(), f);
          auto formula  = b().kernel_formula(f);
          if (!(*ker.object == *formula.dom) || ker.k.map != formula.map) {
            run.violation({"pullback kernel differs from the backend formula",
                           {{"f", f}, {"k", ker.k}, {"formula", formula}}});
          }
        }
        return run.finish();
      } else {
        return run.unsupported(b().tag() + " has no kernel formula");
      }
    }

    //! A split mono into a trivial object has a trivial domain.
    [[nodiscard]] LawReport trivial_retracts() const {
      auto run = start("trivial-retracts");
      for (auto id : run.select(_ws.arrows().size())) {
        auto const& s = _ws.arrow(id);
        run.next_case();
        if (!b().is_trivial(*s.f.cod)) continue;
        for (auto r : _ws.hom(s.cod, s.dom)) {
          if (compose(s.f, _ws.arrow(r).f).map != identity(s.f.dom).map) continue;
          run.applicable();
          if (!b().is_trivial(*s.f.dom)) {
            run.violation({"retract of a trivial object is not trivial",
                           {{"s", s.f}, {"r", _ws.arrow(r).f}}});
          }
          break;
        }
      }
      return run.finish();
    }

    //! The pullback of ker f along g is the kernel of g then f.
    [[nodiscard]] LawReport kernel_stability() const {
      auto run = start("kernel-stability");
      for (auto id : run.select(_ws.arrows().size())) {
        auto const& f = _ws.arrow(id).f;
        auto ker      = kernel(b(), f);
        for (auto g : _ws.into(_ws.arrow(id).dom)) {
          if (!run.next_case(search_budget)) return run.finish();
          run.applicable();
          auto const& gf = _ws.arrow(g).f;
          auto pb        = pullback(ker.k, gf);
          auto ker_gf    = kernel(b(), compose(gf, f));
          auto cmp       = lift_through(pb.right, ker_gf.k);
          if (!cmp || !is_iso(*cmp)) {
            run.violation({"pulled-back kernel is not the kernel of the composite",
                           {{"f", f}, {"g", gf}, {"pulled back", pb.right}, {"kernel", ker_gf.k}}});
          }
        }
      }
      return run.finish();
    }

    //! Every object reflects into the trivial objects through the cokernel
    //! of its identity, with an epimorphic unit.
    [[nodiscard]] LawReport subreflectivity() const {
      auto run = start("subreflectivity");
      auto const& objs = _ws.objects();
      for (auto i : run.select(objs.size())) {
        run.next_case();
        auto r = check_subreflectivity(b(), objs[i], objs);
        if (!r.applicable) continue;
        run.applicable();
        if (!r.exists || !r.unit_is_epi) {
          Witness w{r.exists ? "reflection unit is not an epimorphism" : r.note, {}};
          if (r.unit) w.arrows.push_back({"unit", *r.unit});
          run.violation(std::move(w));
        }
      }
      return run.finish();
    }

    [[nodiscard]] LawReport characterisation() const {
      auto run = start("characterisation");
      if constexpr (HasNormalEpiCharacterisation<B>) {
        for (auto id : run.select(_ws.arrows().size())) {
          run.next_case();
          run.applicable();
          auto const& f = _ws.arrow(id).f;
          bool engine   = _ws.normal_epi(id);
          if (engine != b().normal_epi_characterisation(f)) {
            run.violation({std::string("engine says ") + (engine ? "normal epi" : "not normal epi")
                               + ", characterisation disagrees",
                           {{"f", f}}});
          }
        }
        return run.finish();
      } else {
        return run.unsupported(b().tag() + " has no normal-epi characterisation");
      }
    }

    //! f = e then m with e a normal epi and m of trivial kernel.
    [[nodiscard]] LawReport factorisation() const {
      auto run = start("factorisation");
      for (auto id : run.select(_ws.arrows().size())) {
        run.next_case();
        run.applicable();
        auto const& f = _ws.arrow(id).f;
        auto fac      = factorise(b(), f);
        std::string why;
        if (compose(fac.e, fac.m).map != f.map) why = "e then m is not f";
        else if (!fac.e_is_normal_epi) why = "e is not a normal epi";
        else if (!fac.m_has_trivial_kernel) why = "m has a non-trivial kernel";
        if (why.empty()) continue;
        if (!fac.witness.empty()) {
          why += " witnessed by (";
          for (std::size_t i = 0; i < fac.witness.size(); ++i) {
            why += (i ? ", " : "") + fac.m.dom->element_name(fac.witness[i]);
          }
          why += ")";
        }
        run.violation({why, {{"f", f}, {"e", fac.e}, {"m", fac.m}}});
      }
      return run.finish();
    }

    //! Every commuting square from a normal epi e to a map m of trivial
    //! kernel has exactly one diagonal.  For surjective e a diagonal is
    //! unique when it exists and exists exactly when top descends along e,
    //! so only squares whose top does not descend need to be examined.
    [[nodiscard]] LawReport orthogonality() const {
      auto run = start("orthogonality");
      for (auto eid : run.select(_ws.arrows().size())) {
        if (!_ws.normal_epi(eid)) continue;
        auto const& ea = _ws.arrow(eid);
        auto const& e  = ea.f;
        bool onto      = is_surjective(e);
        for (auto uid : _ws.out_of(ea.dom)) {
          run.next_case();
          run.applicable();
          auto const& ua = _ws.arrow(uid);
          if (onto && descend_along(e, ua.f)) continue;
          for (auto mid : _ws.out_of(ua.cod)) {
            if (!_ws.trivial_kernel(mid)) continue;
            auto const& m = _ws.arrow(mid).f;
            if (onto) {
              auto v = descend_along(e, compose(ua.f, m));
              if (!v) continue;
              auto lift = lift_diagonal(e, m, ua.f, *v);
              if (!lift.unique()) {
                run.violation({"commuting square without a unique diagonal: " + lift.note,
                               {{"e", e}, {"m", m}, {"top", ua.f}, {"bottom", *v}}});
              }
            } else {
              for (auto vid : _ws.hom(ea.cod, _ws.arrow(mid).cod)) {
                auto const& v = _ws.arrow(vid).f;
                if (compose(ua.f, m).map != compose(e, v).map) continue;
                auto lift = lift_diagonal(e, m, ua.f, v);
                if (!lift.unique()) {
                  run.violation({"commuting square without a unique diagonal: " + lift.note,
                                 {{"e", e}, {"m", m}, {"top", ua.f}, {"bottom", v}}});
                }
              }
            }
          }
        }
      }
      return run.finish();
    }

    //! Normal epis of trivial kernel are exactly the isomorphisms.
    [[nodiscard]] LawReport iso_intersection() const {
      auto run = start("iso-intersection");
      for (auto id : run.select(_ws.arrows().size())) {
        run.next_case();
        run.applicable();
        bool both = _ws.normal_epi(id) && _ws.trivial_kernel(id);
        if (both != _ws.iso(id)) {
          run.violation({both ? "normal epi of trivial kernel that is not an isomorphism"
                              : "isomorphism outside one of the classes",
                         {{"f", _ws.arrow(id).f}}});
        }
      }
      return run.finish();
    }

    [[nodiscard]] LawReport composition_closure() const {
      auto run = start("composition-closure");
      for_composable(run, [&](std::size_t f, std::size_t g, std::size_t fg) {
        if (_ws.normal_epi(f) && _ws.normal_epi(g) && !_ws.normal_epi(fg)) {
          run.violation({"composite of normal epis is not a normal epi", pair_arrows(f, g)});
        }
        if (_ws.trivial_kernel(f) && _ws.trivial_kernel(g) && !_ws.trivial_kernel(fg)) {
          run.violation({"composite of trivial-kernel maps has a non-trivial kernel",
                         pair_arrows(f, g)});
        }
      });
      return run.finish();
    }

    //! f then g in the left class with f in it puts g in it; dually for the
    //! right class.
    [[nodiscard]] LawReport class_cancellation() const {
      auto run = start("class-cancellation");
      for_composable(run, [&](std::size_t f, std::size_t g, std::size_t fg) {
        if (_ws.normal_epi(fg) && _ws.normal_epi(f) && !_ws.normal_epi(g)) {
          run.violation({"f and f then g are normal epis but g is not", pair_arrows(f, g)});
        }
        if (_ws.trivial_kernel(fg) && _ws.trivial_kernel(g) && !_ws.trivial_kernel(f)) {
          run.violation({"g and f then g have trivial kernels but f does not", pair_arrows(f, g)});
        }
      });
      return run.finish();
    }

    //! f has a trivial kernel iff every g with g then f trivial is trivial;
    //! for the converse the kernel inclusion itself is the witness.
    [[nodiscard]] LawReport tker_cancellation() const {
      auto run = start("tker-cancellation");
      std::size_t with = 0;
      std::size_t without = 0;
      for (auto id : run.select(_ws.arrows().size())) {
        run.next_case();
        run.applicable();
        auto const& f = _ws.arrow(id).f;
        if (_ws.trivial_kernel(id)) {
          ++with;
          for (auto g : _ws.into(_ws.arrow(id).dom)) {
            auto const& gf = _ws.arrow(g).f;
            if (b().is_trivial_map(compose(gf, f)) && !_ws.trivial_map(g)) {
              run.violation({"f has a trivial kernel but kills a non-trivial map",
                             {{"f", f}, {"g", gf}}});
            }
          }
        } else {
          ++without;
          auto k = kernel(b(), f).k;
          if (b().is_trivial_map(k) || !b().is_trivial_map(compose(k, f))) {
            run.violation({"the kernel inclusion does not witness the non-trivial kernel",
                           {{"f", f}, {"k", k}}});
          }
        }
      }
      run.note(std::to_string(with) + " maps with trivial kernel, " + std::to_string(without)
               + " without");
      return run.finish();
    }

    [[nodiscard]] LawReport stability() const {
      return stability_along("stability", false);
    }

    [[nodiscard]] LawReport stability_normal_monos() const {
      return stability_along("stability-normal-monos", true);
    }

    //! The pullback of f along a regular epi p, with the pulled-back f a
    //! normal epi and the pulled-back p an epi, is a pushout.
    [[nodiscard]] LawReport pb_pushout() const {
      auto run = start("pb-pushout");
      if constexpr (!HasQuotient<B>) {
        return run.unsupported(b().tag() + " has no coequalizers, so regular epis cannot be certified");
      } else {
        for (auto pid : run.select(_ws.arrows().size())) {
          if (!*_ws.regular_epi(pid)) continue;
          for (auto fid : _ws.into(_ws.arrow(pid).cod)) {
            run.next_case();
            auto w = pb_pushout_case(_ws.arrow(pid).f, _ws.arrow(fid).f);
            if (w.first == Verdict::unsupported) continue;
            run.applicable();
            if (w.first == Verdict::fail) run.violation(std::move(w.second));
          }
        }
        run.note("pushout property checked against every catalog object");
        return run.finish();
      }
    }

    //! One instance: p the regular epi on the right, f the bottom map.
    [[nodiscard]] std::pair<Verdict, Witness> pb_pushout_case(Morphism const& p,
                                                              Morphism const& f) const {
      auto pb = pullback(f, p);
      auto const& q = pb.left;
      auto const& g = pb.right;
      Witness w{"", {{"p", p}, {"f", f}, {"g", g}, {"q", q}}};
      auto reg = _ws.regular_epi(p);
      if (!reg || !*reg) {
        w.note = "p is not a regular epi";
        return {Verdict::unsupported, w};
      }
      if (!_ws.normal_epi(g)) {
        w.note = "the pullback of f is not a normal epi";
        return {Verdict::unsupported, w};
      }
      if (!_ws.epi(q)) {
        w.note = "the pullback of p is not an epi";
        return {Verdict::unsupported, w};
      }
      if (auto bad = pushout_violation(Square{g, q, p, f}, _ws.objects())) {
        w.note = "cocone with " + std::to_string(bad->mediators) + " mediators";
        w.arrows.push_back({"x", bad->x});
        w.arrows.push_back({"y", bad->y});
        return {Verdict::fail, w};
      }
      return {Verdict::pass, w};
    }

    //! Rows A -f-> B -g-> C over A' -f'-> B' -g'-> C' with f' a normal and
    //! regular epi: when the left square and the outer rectangle are
    //! pullbacks so is the right square.  The left square is built as the
    //! pullback of f' along b.  Commuting right squares (b, g) are found by
    //! indexing each hom into dom c by its composite with c.
    [[nodiscard]] LawReport cancellation() const {
      auto run = start("cancellation");
      if constexpr (!HasQuotient<B>) {
        return run.unsupported(b().tag() + " has no coequalizers, so regular epis cannot be certified");
      } else {
        auto const& objs = _ws.objects();
        std::vector<std::vector<std::size_t>> epis_into(objs.size());
        for (auto fid : run.select(_ws.arrows().size())) {
          if (_ws.normal_epi(fid) && *_ws.regular_epi(fid)) epis_into[_ws.arrow(fid).cod].push_back(fid);
        }
        std::unordered_map<Table, std::size_t, TableHash> interned;
        auto composite_id = [&](Arrow const& x, Morphism const& y) {
          auto key = compose(x.f, y).map;
          key.push_back(static_cast<Element>(x.dom));
          return interned.try_emplace(std::move(key), interned.size()).first->second;
        };
        std::map<std::size_t, std::unordered_map<std::size_t, std::vector<std::size_t>>> through;
        auto lifts = [&](std::size_t cid) -> auto const& {
          auto [it, fresh] = through.try_emplace(cid);
          if (fresh) {
            for (auto gid : _ws.into(_ws.arrow(cid).dom)) {
              it->second[composite_id(_ws.arrow(gid), _ws.arrow(cid).f)].push_back(gid);
            }
          }
          return it->second;
        };
        for (std::size_t mid = 0; mid < objs.size(); ++mid) {
          auto const& fs = epis_into[mid];
          if (fs.empty()) continue;
          auto const& bs = _ws.into(mid);
          std::vector<std::vector<Span>> spans(bs.size());
          auto span_row = [&](std::size_t bi) -> std::vector<Span> const& {
            auto& row = spans[bi];
            if (row.empty()) {
              auto const& bm = _ws.arrow(bs[bi]).f.map;
              for (auto fid : fs) {
                auto const& fm = _ws.arrow(fid).f.map;
                Span sp;
                for (std::size_t x = 0; x < fm.size(); ++x) {
                  for (std::size_t z = 0; z < bm.size(); ++z) {
                    if (fm[x] != bm[z]) continue;
                    sp.left.push_back(static_cast<Element>(x));
                    sp.right.push_back(static_cast<Element>(z));
                  }
                }
                row.push_back(std::move(sp));
              }
            }
            return row;
          };
          std::map<std::pair<std::size_t, std::size_t>, PullbackResult> left_of;
          std::vector<char> seen;
          std::vector<std::size_t> b_ids(bs.size());
          for (auto gpid : _ws.out_of(mid)) {
            auto const& gp = _ws.arrow(gpid);
            for (std::size_t bi = 0; bi < bs.size(); ++bi) b_ids[bi] = composite_id(_ws.arrow(bs[bi]), gp.f);
            for (auto cid : _ws.into(gp.cod)) {
              auto const& ca    = _ws.arrow(cid);
              auto const& index = lifts(cid);
              std::vector<std::size_t> outer_size;
              for (auto fid : fs) {
                auto fgp      = compose(_ws.arrow(fid).f, gp.f);
                std::size_t n = 0;
                for (auto u : fgp.map) {
                  for (auto v : ca.f.map) n += u == v;
                }
                outer_size.push_back(n);
              }
              for (std::size_t bi = 0; bi < bs.size(); ++bi) {
                auto hit = index.find(b_ids[bi]);
                if (hit == index.end()) continue;
                auto const& ba  = _ws.arrow(bs[bi]);
                auto const& row = span_row(bi);
                for (auto gid : hit->second) {
                  auto const& g    = _ws.arrow(gid).f;
                  auto const taken = run.take_cases(fs.size(), search_budget);
                  for (std::size_t k = 0; k < taken; ++k) {
                    auto const& sp = row[k];
                    if (sp.left.size() != outer_size[k]) continue;
                    auto const& fa = _ws.arrow(fs[k]);
                    if (!injective_pair(sp, g.map, fa.f.dom->size, ca.f.dom->size, seen)) continue;
                    auto [it, fresh] = left_of.try_emplace({bi, k});
                    if (fresh) it->second = pullback(fa.f, ba.f);
                    auto const& pb = it->second;
                    if (!is_pullback(Square{compose(pb.right, g), pb.left, ca.f, compose(fa.f, gp.f)})) continue;
                    run.applicable();
                    if (!is_pullback(Square{g, ba.f, ca.f, gp.f})) {
                      run.violation({"left square and outer rectangle are pullbacks, right square is not",
                                     {{"f'", fa.f}, {"g'", gp.f}, {"b", ba.f}, {"c", ca.f},
                                      {"g", g}, {"f", pb.right}, {"a", pb.left}}});
                    }
                  }
                  if (taken < fs.size()) return run.finish();
                }
              }
            }
          }
        }
        return run.finish();
      }
    }

    //! f : A -> B a normal and regular epi, g : C -> D, a and b making the
    //! right square commute, R and S the kernel pairs of f and g: if either
    //! left square is a pullback so is the right square.  b is determined
    //! by a and g since f is surjective.
    [[nodiscard]] LawReport barr_kock() const {
      auto run = start("barr-kock");
      if constexpr (!HasQuotient<B>) {
        return run.unsupported(b().tag() + " has no coequalizers, so regular epis cannot be certified");
      } else {
        for (auto fid : run.select(_ws.arrows().size())) {
          if (!_ws.normal_epi(fid) || !*_ws.regular_epi(fid)) continue;
          auto const& fa = _ws.arrow(fid);
          auto r         = pullback(fa.f, fa.f);
          for (auto aid : _ws.out_of(fa.dom)) {
            auto const& a = _ws.arrow(aid);
            for (auto gid : _ws.out_of(a.cod)) {
              auto const& g = _ws.arrow(gid).f;
              auto bmap     = descend_along(fa.f, compose(a.f, g));
              if (!bmap) continue;
              if (!run.next_case(search_budget)) return run.finish();
              Square right{fa.f, a.f, *bmap, g};
              auto s  = pullback(g, g);
              auto rs = s.mediator(compose(r.left, a.f), compose(r.right, a.f));
              if (!rs) fail(ErrorKind::backend_bug, "kernel pair comparison does not exist");
              bool left0 = is_pullback(Square{r.left, *rs, a.f, s.left});
              bool left1 = is_pullback(Square{r.right, *rs, a.f, s.right});
              if (!left0 && !left1) continue;
              run.applicable();
              if (!is_pullback(right)) {
                run.violation({"a kernel-pair square is a pullback, the right square is not",
                               {{"f", fa.f}, {"a", a.f}, {"g", g}, {"b", *bmap}}});
              }
            }
          }
        }
        return run.finish();
      }
    }

    //! (ker g, g) is exact exactly when g is a normal epi; for the exact
    //! ones the square through the coreflection of cod g is a pullback and
    //! a pushout, its corner is the reflection of the domain, and every
    //! factorisation through a trivial object satisfies all three
    //! conditions or none.
    [[nodiscard]] LawReport exact_sequences() const {
      auto run = start("exact-sequences");
      for (auto id : run.select(_ws.arrows().size())) {
        run.next_case();
        run.applicable();
        auto const& g = _ws.arrow(id).f;
        auto k        = kernel(b(), g).k;
        auto rep      = check_exact_sequence(b(), k, g, _ws.objects());
        if (rep.exact() != _ws.normal_epi(id)) {
          run.violation({"exactness of (ker g, g) disagrees with g being a normal epi",
                         {{"k", k}, {"g", g}}});
          continue;
        }
        if (!rep.exact()) continue;
        if (!rep.square_pullback || !rep.square_pushout || !rep.corner_reflection) {
          run.violation({"square through the coreflection fails: pullback "
                             + yes_no(rep.square_pullback) + ", pushout "
                             + yes_no(rep.square_pushout) + ", reflection "
                             + yes_no(rep.corner_reflection),
                         {{"k", k}, {"g", g}, {"u", *rep.corner}, {"c", rep.counit}}});
        }
        for (auto const& t : trivial_factorisations(b(), k, g, _ws.objects())) {
          if (!t.consistent()) {
            run.violation({"trivial factorisation with bicartesian " + yes_no(t.bicartesian)
                               + ", coreflection " + yes_no(t.coreflection) + ", reflection "
                               + yes_no(t.reflection),
                           {{"k", k}, {"g", g}, {"u", t.u}, {"c", t.c}}});
          }
        }
      }
      return run.finish();
    }

    //! The product of the exact sequences (ker g, g) and (ker g', g') is
    //! exact, for every pair of catalog normal epis whose domain product
    //! stays within the size cap (default 16).
    [[nodiscard]] LawReport product_exactness() const {
      auto run = start("product-exactness");
      std::size_t const cap = _opts.max_product ? _opts.max_product : 16;
      std::vector<std::size_t> ne;
      for (std::size_t id = 0; id < _ws.arrows().size(); ++id) {
        if (_ws.normal_epi(id)) ne.push_back(id);
      }
      std::size_t skipped = 0;
      for (auto i : run.select(ne.size())) {
        auto const& g = _ws.arrow(ne[i]).f;
        auto k        = kernel(b(), g).k;
        for (auto j : ne) {
          auto const& h = _ws.arrow(j).f;
          if (g.dom->size * h.dom->size > cap) {
            ++skipped;
            continue;
          }
          run.next_case();
          run.applicable();
          auto kh  = kernel(b(), h).k;
          auto pk  = product_of(k, kh);
          auto pg  = product_of(g, h);
          auto rep = check_exact_sequence(b(), pk, pg, {});
          if (!rep.exact()) {
            run.violation({std::string("product sequence is not exact: ")
                               + (rep.kernel_ok ? "" : "kernel ") + (rep.cokernel_ok ? "" : "cokernel"),
                           {{"g", g}, {"g'", h}, {"k x k'", pk}, {"g x g'", pg}}});
          }
        }
      }
      run.note(std::to_string(skipped) + " pairs skipped with a product domain above "
               + std::to_string(cap) + " elements");
      return run.finish();
    }

    //! Pulling back (ker g, g) along c gives an exact sequence exactly when
    //! c has a trivial kernel; both directions are counted.
    [[nodiscard]] LawReport pullback_exactness() const {
      auto run = start("pullback-exactness");
      std::size_t exact_tk = 0;
      std::size_t inexact_ntk = 0;
      for (auto id : run.select(_ws.arrows().size())) {
        if (!_ws.normal_epi(id)) continue;
        auto const& g = _ws.arrow(id).f;
        auto k        = kernel(b(), g).k;
        for (auto cid : _ws.into(_ws.arrow(id).cod)) {
          run.next_case();
          run.applicable();
          auto const& c = _ws.arrow(cid).f;
          auto pb       = pull_back_sequence(k, g, c);
          auto rep      = check_exact_sequence(b(), pb.f, pb.g, {});
          bool tk       = _ws.trivial_kernel(cid);
          if (rep.exact() == tk) {
            ++(tk ? exact_tk : inexact_ntk);
            continue;
          }
          run.violation({tk ? "c has a trivial kernel but the pulled-back sequence is not exact"
                            : "c has a non-trivial kernel but the pulled-back sequence is exact",
                         {{"k", k}, {"g", g}, {"c", c}, {"f'", pb.f}, {"g'", pb.g}}});
        }
      }
      run.note(std::to_string(exact_tk) + " exact pullbacks along trivial-kernel maps, "
               + std::to_string(inexact_ntk) + " inexact pullbacks along other maps");
      if (exact_tk == 0 || inexact_ntk == 0) run.note("one direction of the equivalence was not exercised");
      return run.finish();
    }

    //! For normal monos n into m into A (kernels of catalog maps out of A),
    //! M/N is a normal subobject of A/N with quotient A/M.
    [[nodiscard]] LawReport noether() const {
      auto run = start("noether");
      auto const& objs = _ws.objects();
      for (auto i : run.select(objs.size())) {
        std::vector<Morphism> subs;
        for (auto f : _ws.out_of(i)) {
          auto k = kernel(b(), _ws.arrow(f).f).k;
          bool seen = false;
          for (auto const& s : subs) {
            auto cmp = lift_through(k, s);
            if (cmp && is_iso(*cmp)) {
              seen = true;
              break;
            }
          }
          if (!seen) subs.push_back(std::move(k));
        }
        for (auto const& m : subs) {
          for (auto const& n : subs) {
            if (!lift_through(n, m)) continue;
            run.next_case();
            run.applicable();
            auto rep = noether_third(b(), m, n, objs);
            if (rep.holds()) continue;
            Witness w{rep.note.empty() ? "Noether diagram fails" : rep.note,
                      {{"m", rep.m}, {"n", rep.n}, {"j", rep.j}, {"p", rep.p}, {"q", rep.q},
                       {"r", rep.r}}};
            if (rep.phi) w.arrows.push_back({"phi", *rep.phi});
            if (rep.psi) w.arrows.push_back({"psi", *rep.psi});
            if (w.note == "Noether diagram fails") {
              w.note += ": j normal mono " + yes_no(rep.j_normal_mono) + ", phi normal mono "
                        + yes_no(rep.phi_normal_mono) + ", psi normal epi "
                        + yes_no(rep.psi_normal_epi) + ", row exact " + yes_no(rep.row_exact)
                        + ", comparison iso "
                        + yes_no(rep.comparison && is_iso(*rep.comparison));
            }
            run.violation(std::move(w));
          }
        }
      }
      return run.finish();
    }

   private:
    struct TableHash {
      std::size_t operator()(Table const& t) const {
        std::size_t h = t.size();
        for (auto v : t) h = h * 1000003u ^ static_cast<std::size_t>(v + 1);
        return h;
      }
    };

    //! Whether x -> (u x, v x) is injective, with v landing in 0..m-1.
    //! The pullback of two maps as matching index pairs, without building
    //! the object.
    struct Span {
      Table left;
      Table right;
    };

    //! Whether the pairs (left, g of right) of a span are distinct, with
    //! left into n and g into m elements; seen is scratch space.
    static bool injective_pair(Span const& sp, Table const& g, std::size_t n, std::size_t m, std::vector<char>& seen) {
      seen.assign(n * m, 0);
      for (std::size_t x = 0; x < sp.left.size(); ++x) {
        auto& slot = seen[static_cast<std::size_t>(sp.left[x]) * m + static_cast<std::size_t>(g[sp.right[x]])];
        if (slot) return false;
        slot = 1;
      }
      return true;
    }

    [[nodiscard]] B const& b() const {
      return _ws.backend();
    }

    [[nodiscard]] LawRun start(std::string law) const {
      LawRun run(law, b().tag(), _ws.objects().size(), _opts);
      if (law == "factorisation" || law == "orthogonality") {
        run.note("checks that every map factors as a normal epi then a trivial-kernel map; the equivalent "
                 "conditions quantifying over all factorisation systems are not finitely checkable");
      }
      if constexpr (HasLawNotes<B>) {
        for (auto const& n : b().law_notes(law)) run.note(n);
      }
      return run;
    }

    static std::string yes_no(bool v) {
      return v ? "yes" : "no";
    }

    [[nodiscard]] std::vector<NamedArrow> pair_arrows(std::size_t f, std::size_t g) const {
      return {{"f", _ws.arrow(f).f}, {"g", _ws.arrow(g).f}};
    }

    template <typename Visit>
    void for_composable(LawRun& run, Visit visit) const {
      for (auto f : run.select(_ws.arrows().size())) {
        auto const& fa = _ws.arrow(f);
        for (auto g : _ws.out_of(fa.cod)) {
          run.next_case();
          run.applicable();
          auto fg = _ws.find(compose(fa.f, _ws.arrow(g).f));
          if (!fg) fail(ErrorKind::backend_bug, "composite of catalog arrows missing from the workspace");
          visit(f, g, *fg);
        }
      }
    }

    [[nodiscard]] LawReport stability_along(std::string law, bool normal_monos) const {
      auto run = start(std::move(law));
      for (auto gid : run.select(_ws.arrows().size())) {
        if (!_ws.normal_epi(gid)) continue;
        auto const& g = _ws.arrow(gid);
        for (auto fid : _ws.into(g.cod)) {
          run.next_case();
          if (normal_monos && !_ws.normal_mono(fid)) continue;
          run.applicable();
          auto const& f = _ws.arrow(fid).f;
          auto pb       = pullback(f, g.f);
          if (!_ws.normal_epi(pb.left)) {
            run.violation({"pullback of a normal epi is not a normal epi",
                           {{"g", g.f}, {"f", f}, {"pulled back", pb.left}}});
          }
        }
      }
      return run.finish();
    }

    Workspace<B> const& _ws;
    LawOptions          _opts;
  };

}  // namespace prenormal
