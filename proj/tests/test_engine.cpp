#include <catch_amalgamated.hpp>

#include <prenormal/backends/groupoid.hpp>
#include <prenormal/backends/monoid.hpp>
#include <prenormal/backends/pset.hpp>
#include <prenormal/backends/rel.hpp>
#include <prenormal/engine/laws.hpp>

using namespace prenormal;

namespace {

  //! Pointed sets with the surjectivity shortcut for epis switched off.
  struct CategoricalEpiPSet : PSet {
    [[nodiscard]] bool epis_are_surjective() const {
      return false;
    }

    [[nodiscard]] bool monos_are_injective() const {
      return false;
    }
  };

  template <typename B>
  LawReport run_law(B const& b, std::string const& law, LawOptions opts = {}) {
    Workspace<B> ws(b, CatalogCaps{});
    return LawSuite<B>(ws, opts).run(law);
  }

  bool mentions(LawReport const& r, std::string const& text) {
    for (auto const& w : r.witnesses) {
      if (w.note.find(text) != std::string::npos) return true;
    }
    return false;
  }

  Morphism mod2() {
    return make_morphism(CMon::cyclic(4), CMon::cyclic(2), {0, 1, 0, 1});
  }

  Morphism twice() {
    return make_morphism(CMon::cyclic(2), CMon::cyclic(4), {0, 2});
  }

}  // namespace

TEST_CASE("diagonal through a surjection is unique", "[engine][lifting]") {
  auto e = mod2();
  auto m = identity(CMon::cyclic(2));
  auto r = lift_diagonal(e, m, e, m);
  REQUIRE(r.unique());
  REQUIRE(r.diagonal->map == Table{0, 1});
}

TEST_CASE("diagonals are counted when e is not surjective", "[engine][lifting]") {
  auto one   = PSet::make(1);
  auto two   = PSet::make(2);
  auto three = PSet::make(3);
  auto e     = make_morphism(one, two, {0});
  auto m     = make_morphism(three, one, {0, 0, 0});
  auto top   = make_morphism(one, three, {0});
  auto bot   = make_morphism(two, one, {0, 0});
  auto r     = lift_diagonal(e, m, top, bot);
  REQUIRE(r.count == 3);
  REQUIRE_FALSE(r.unique());
}

TEST_CASE("diagonal search rejects a square that does not commute", "[engine][lifting]") {
  auto e   = mod2();
  auto m   = identity(CMon::cyclic(2));
  auto bad = make_morphism(CMon::cyclic(2), CMon::cyclic(2), {0, 0});
  REQUIRE_THROWS_AS(lift_diagonal(e, m, e, bad), Error);
}

TEST_CASE("the sequence Z2 -> Z4 -> Z2 is exact", "[engine][exact]") {
  CMon b;
  auto ws  = b.catalog({});
  auto rep = check_exact_sequence(b, twice(), mod2(), ws);
  REQUIRE(rep.exact());
  REQUIRE(rep.square_pullback);
  REQUIRE(rep.square_pushout);
  REQUIRE(rep.corner_reflection);
  auto facs = trivial_factorisations(b, twice(), mod2(), ws);
  REQUIRE_FALSE(facs.empty());
  for (auto const& t : facs) REQUIRE(t.consistent());
}

TEST_CASE("a kernel followed by a map that is not a normal epi is not exact", "[engine][exact]") {
  RelPreorder b;
  auto f = RelPreorder::counterexample();
  REQUIRE_FALSE(is_normal_epi(b, f));
  auto seq = kernel_sequence(b, f);
  auto rep = check_exact_sequence(b, seq.first, seq.second, b.catalog({}));
  REQUIRE(rep.kernel_ok);
  REQUIRE_FALSE(rep.exact());
}

TEST_CASE("exactness survives pullback along a trivial-kernel map only", "[engine][exact]") {
  CMon b;
  auto k    = twice();
  auto g    = mod2();
  auto mono = make_morphism(CMon::cyclic(1), CMon::cyclic(2), {0});
  auto pb   = pull_back_sequence(k, g, mono);
  REQUIRE(has_trivial_kernel(b, mono));
  REQUIRE(check_exact_sequence(b, pb.f, pb.g, {}).exact());

  auto pbid = pull_back_sequence(k, g, identity(CMon::cyclic(2)));
  REQUIRE(check_exact_sequence(b, pbid.f, pbid.g, {}).exact());

  auto kill = make_morphism(CMon::cyclic(2), CMon::cyclic(2), {0, 0});
  REQUIRE_FALSE(has_trivial_kernel(b, kill));
  auto pbk = pull_back_sequence(k, g, kill);
  REQUIRE_FALSE(check_exact_sequence(b, pbk.f, pbk.g, {}).exact());
}

TEST_CASE("the product of two exact sequences is exact", "[engine][exact]") {
  CMon b;
  auto pk  = product_of(twice(), twice());
  auto pg  = product_of(mod2(), mod2());
  REQUIRE(pk.dom->size == 4);
  REQUIRE(pg.dom->size == 16);
  REQUIRE(check_exact_sequence(b, pk, pg, {}).exact());
}

TEST_CASE("third isomorphism theorem for Z2 inside Z4 inside Z2 x Z4", "[engine][noether]") {
  CMon b;
  auto a = CMon::product(CMon::cyclic(2), CMon::cyclic(4));
  auto m = make_morphism(CMon::cyclic(4), a, {0, 1, 2, 3});
  auto n = make_morphism(CMon::cyclic(2), a, {0, 2});
  auto rep = noether_third(b, m, n, b.catalog({}));
  INFO(rep.note);
  REQUIRE(rep.holds());
  REQUIRE(rep.comparison->dom->size == 2);
  REQUIRE(rep.comparison->cod->size == 2);

  auto whole = noether_third(b, identity(CMon::cyclic(4)), twice(), b.catalog({}));
  REQUIRE(whole.holds());
}

TEST_CASE("third isomorphism theorem rejects a non-nested pair", "[engine][noether]") {
  CMon b;
  auto a = CMon::product(CMon::cyclic(2), CMon::cyclic(2));
  auto m = make_morphism(CMon::cyclic(2), a, {0, 1});
  auto n = make_morphism(CMon::cyclic(2), a, {0, 2});
  REQUIRE_THROWS_AS(noether_third(b, m, n, {}), Error);
}

TEST_CASE("law ids and groups expand in suite order", "[engine][laws]") {
  REQUIRE(law_ids().size() == 21);
  auto pre = expand_laws("prenormality");
  REQUIRE(pre.size() == 7);
  REQUIRE(pre.back() == "stability");
  REQUIRE(expand_laws("noether,kernels,kernels") == std::vector<std::string>{"kernels", "noether"});
  REQUIRE(expand_laws("all") == law_ids());
  REQUIRE_THROWS_AS(expand_laws("kernels,nonsense"), Error);
  REQUIRE_THROWS_AS(expand_laws(""), Error);
}

TEST_CASE("commutative monoids pass every law", "[engine][laws][cmon]") {
  CMon b;
  Workspace<CMon> ws(b, CatalogCaps{});
  LawSuite<CMon> suite(ws);
  for (auto const& law : law_ids()) {
    auto r = suite.run(law);
    INFO(law << ": " << (r.witnesses.empty() ? "" : r.witnesses[0].note));
    REQUIRE(r.verdict == Verdict::pass);
  }
}

TEST_CASE("pointed sets fail stability but not along normal monos", "[engine][laws][pset]") {
  PSet b;
  auto st = run_law(b, "stability");
  REQUIRE(st.verdict == Verdict::fail);
  REQUIRE(st.violations > 0);
  REQUIRE(run_law(b, "stability-normal-monos").verdict == Verdict::pass);
  REQUIRE(run_law(b, "factorisation").verdict == Verdict::pass);
  REQUIRE(run_law(b, "product-exactness").verdict == Verdict::fail);
}

TEST_CASE("preorders fail factorisation at the pair (1, 3)", "[engine][laws][rel]") {
  RelPreorder b;
  auto r = run_law(b, "factorisation");
  REQUIRE(r.verdict == Verdict::fail);
  REQUIRE(mentions(r, "(1, 3)"));
  REQUIRE(run_law(b, "composition-closure").verdict == Verdict::fail);
  REQUIRE(run_law(b, "orthogonality").verdict == Verdict::pass);
}

TEST_CASE("equivalence relations pass the prenormality group", "[engine][laws][rel]") {
  RelEquiv b;
  Workspace<RelEquiv> ws(b, CatalogCaps{});
  LawSuite<RelEquiv> suite(ws);
  for (auto const& r : suite.run_all(expand_laws("prenormality,exactness"))) {
    INFO(r.law);
    REQUIRE(r.verdict == Verdict::pass);
  }
}

TEST_CASE("laws needing coequalizers are unsupported without them", "[engine][laws][grpd]") {
  Grpd b;
  auto r = run_law(b, "cancellation");
  REQUIRE(r.verdict == Verdict::unsupported);
  REQUIRE_FALSE(r.notes.empty());
}

TEST_CASE("a case budget caps the search and says so", "[engine][laws]") {
  LawOptions opts;
  opts.max_cases = 50;
  auto r = run_law(CMon{}, "barr-kock", opts);
  REQUIRE(r.capped);
  REQUIRE(r.cases == 50);
  REQUIRE(r.notes.back() == "stopped after 50 cases");
}

TEST_CASE("sampled runs are reproducible from the seed", "[engine][laws]") {
  LawOptions opts;
  opts.mode    = Mode::sampled;
  opts.seed    = 7;
  opts.samples = 20;
  auto a = run_law(CMon{}, "orthogonality", opts);
  auto b = run_law(CMon{}, "orthogonality", opts);
  REQUIRE(a.cases == b.cases);
  REQUIRE(a.applicable == b.applicable);
  auto full = run_law(CMon{}, "orthogonality");
  REQUIRE(a.cases < full.cases);
  opts.seed = 8;
  auto c = run_law(CMon{}, "orthogonality", opts);
  REQUIRE(c.verdict == Verdict::pass);
}

TEST_CASE("categorical epi and mono tests agree with surjectivity and injectivity",
          "[engine][epi]") {
  CategoricalEpiPSet b;
  Workspace<CategoricalEpiPSet> ws(b, CatalogCaps{});
  for (std::size_t id = 0; id < ws.arrows().size(); ++id) {
    auto const& f = ws.arrow(id).f;
    INFO(ws.describe(id));
    REQUIRE(ws.epi(id) == is_surjective(f));
    REQUIRE(ws.mono(id) == is_injective(f));
  }
}
