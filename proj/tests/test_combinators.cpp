#include <catch_amalgamated.hpp>

#include <prenormal/backends/monoid.hpp>
#include <prenormal/backends/pset.hpp>
#include <prenormal/backends/rel.hpp>
#include <prenormal/combinators/functor.hpp>
#include <prenormal/combinators/slice.hpp>
#include <prenormal/engine/laws.hpp>

using namespace prenormal;

namespace {

  template <typename B>
  void require_passes(B const& b, std::string const& laws) {
    Workspace<B> ws(b, CatalogCaps{});
    LawSuite<B>  suite(ws);
    for (auto const& r : suite.run_all(expand_laws(laws))) {
      INFO(b.tag() << " " << r.law << ": " << (r.witnesses.empty() ? "" : r.witnesses[0].note));
      REQUIRE(r.verdict == Verdict::pass);
    }
  }

  Morphism mod2() {
    return make_morphism(CMon::cyclic(4), CMon::cyclic(2), {0, 1, 0, 1});
  }

}  // namespace

TEST_CASE("slicing over the zero object changes nothing", "[combinators][slice]") {
  CMon base;
  SliceBackend<CMon> s(base, CMon::cyclic(1));
  auto objs = s.catalog({});
  REQUIRE(objs.size() == base.catalog({}).size());
  Workspace<SliceBackend<CMon>> ws(s, objs);
  for (std::size_t id = 0; id < ws.arrows().size(); ++id) {
    auto const& f = ws.arrow(id).f;
    auto u        = s.underlying(f);
    INFO(ws.describe(id));
    REQUIRE(ws.normal_epi(id) == is_normal_epi(base, u));
    REQUIRE(ws.trivial_kernel(id) == has_trivial_kernel(base, u));
  }
}

TEST_CASE("slice objects carry their structure map", "[combinators][slice]") {
  SliceBackend<CMon> s(CMon{}, CMon::cyclic(2));
  auto x = s.object(mod2());
  REQUIRE(x->labels == Table{0, 1, 0, 1});
  REQUIRE_NOTHROW(s.validate_object(*x));
  REQUIRE(s.structure_map(*x).map == mod2().map);
  REQUIRE_FALSE(s.is_trivial(*x));
  REQUIRE_THROWS_AS(s.object(identity(CMon::cyclic(4))), Error);
}

TEST_CASE("slice normal epis are the base normal epis", "[combinators][slice]") {
  SliceBackend<CMon> s(CMon{}, CMon::cyclic(2));
  Workspace<SliceBackend<CMon>> ws(s, CatalogCaps{});
  std::size_t ne = 0;
  for (std::size_t id = 0; id < ws.arrows().size(); ++id) {
    auto const& f = ws.arrow(id).f;
    INFO(ws.describe(id));
    REQUIRE(ws.normal_epi(id) == s.normal_epi_characterisation(f));
    ne += ws.normal_epi(id);
  }
  REQUIRE(ne > 0);
}

TEST_CASE("a slice cokernel needs the structure map to descend", "[combinators][slice]") {
  SliceBackend<CMon> s(CMon{}, CMon::cyclic(2));
  auto x = s.object(identity(CMon::cyclic(2)));
  try {
    (void)s.cokernel(identity(x));
    FAIL("cokernel of the identity exists");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::unsupported);
  }
  auto q = s.cokernel(make_morphism(s.object(make_morphism(CMon::cyclic(1), CMon::cyclic(2), {0})), x, {0}));
  REQUIRE(q.object->size == 2);
}

TEST_CASE("slices of prenormal backends pass the prenormality laws", "[combinators][slice][laws]") {
  require_passes(SliceBackend<CMon>(CMon{}, CMon::cyclic(2)), "kernels,trivial-retracts,kernel-stability,subreflectivity,characterisation,prenormality");
  RelEquiv rel;
  require_passes(SliceBackend<RelEquiv>(rel, rel.catalog({})[3]), "prenormality");
}

TEST_CASE("diagrams of the single shape are base objects", "[combinators][functor]") {
  CMon base;
  FunctorBackend<CMon> fb(base, Shape::single());
  Workspace<FunctorBackend<CMon>> ws(fb, CatalogCaps{});
  REQUIRE(ws.objects().size() == 8);
  for (std::size_t id = 0; id < ws.arrows().size(); ++id) {
    auto const& f = ws.arrow(id).f;
    auto c        = fb.component(f, 0);
    INFO(ws.describe(id));
    REQUIRE(c.map == f.map);
    REQUIRE(ws.normal_epi(id) == is_normal_epi(base, c));
    REQUIRE(ws.trivial_kernel(id) == has_trivial_kernel(base, c));
  }
}

TEST_CASE("diagram assembly and evaluation round-trip", "[combinators][functor]") {
  FunctorBackend<CMon> fb(CMon{}, Shape::arrow());
  auto d = fb.diagram({CMon::cyclic(4), CMon::cyclic(2)}, {mod2()}, "D");
  REQUIRE(d->size == 6);
  REQUIRE(*fb.fibre(*d, 0) == *CMon::cyclic(4));
  REQUIRE(*fb.fibre(*d, 1) == *CMon::cyclic(2));
  REQUIRE(fb.arrow_map(*d, 0, 1).map == mod2().map);
  REQUIRE_THROWS_AS(fb.diagram({CMon::cyclic(4)}, {}), Error);
}

TEST_CASE("non-functorial chains are rejected", "[combinators][functor]") {
  FunctorBackend<CMon> fb(CMon{}, Shape::chain(3));
  auto z4 = CMon::cyclic(4);
  auto z2 = CMon::cyclic(2);
  auto zero = make_morphism(z2, z2, {0, 0});
  REQUIRE_NOTHROW(fb.diagram({z4, z2, z2}, {mod2(), mod2(), identity(z2)}));
  REQUIRE_THROWS_AS(fb.diagram({z4, z2, z2}, {mod2(), mod2(), zero}), Error);
}

TEST_CASE("arrow diagrams: normal epis are the componentwise normal epis",
          "[combinators][functor]") {
  FunctorBackend<CMon> fb(CMon{}, Shape::arrow());
  Workspace<FunctorBackend<CMon>> ws(fb, CatalogCaps{});
  REQUIRE(ws.objects().size() == 40);
  for (std::size_t id = 0; id < ws.arrows().size(); ++id) {
    auto const& f = ws.arrow(id).f;
    bool both = is_normal_epi(fb.base(), fb.component(f, 0)) && is_normal_epi(fb.base(), fb.component(f, 1));
    INFO(ws.describe(id));
    REQUIRE(ws.normal_epi(id) == both);
  }
}

TEST_CASE("evaluation preserves the prenormal structure", "[combinators][functor]") {
  FunctorBackend<CMon> fb(CMon{}, Shape::arrow());
  Workspace<FunctorBackend<CMon>> ws(fb, CatalogCaps{});
  for (std::size_t i = 0; i < 2; ++i) {
    auto r = check_evaluation(fb, ws, i);
    INFO(r.law << ": " << (r.witnesses.empty() ? "" : r.witnesses[0].note));
    REQUIRE(r.verdict == Verdict::pass);
    REQUIRE(r.applicable > 0);
  }
  FunctorBackend<RelRefl> fr(RelRefl{}, Shape::arrow());
  Workspace<FunctorBackend<RelRefl>> wr(fr, CatalogCaps{});
  REQUIRE(check_evaluation(fr, wr, 1).verdict == Verdict::pass);
}

TEST_CASE("arrow diagrams inherit the laws of their base", "[combinators][functor][laws]") {
  require_passes(FunctorBackend<CMon>(CMon{}, Shape::arrow()), "kernels,trivial-retracts,kernel-stability,subreflectivity,characterisation,prenormality");
  FunctorBackend<PSet> fp(PSet{}, Shape::arrow());
  Workspace<FunctorBackend<PSet>> ws(fp, CatalogCaps{});
  LawSuite<FunctorBackend<PSet>> suite(ws);
  REQUIRE(suite.run("stability").verdict == Verdict::fail);
  REQUIRE(suite.run("factorisation").verdict == Verdict::pass);
}
