#include <catch_amalgamated.hpp>

#include <prenormal/backends/groupoid.hpp>
#include <prenormal/backends/ordgrp.hpp>
#include <prenormal/backends/rel.hpp>
#include <prenormal/engine/kernel.hpp>

using namespace prenormal;

namespace {

  template <typename B>
  void check_characterisation(B const& b) {
    auto objs = b.catalog({});
    REQUIRE_FALSE(objs.empty());
    for (auto const& x : objs) {
      REQUIRE_NOTHROW(b.validate_object(*x));
      for (auto const& y : objs) {
        for (auto const& f : homs(x, y)) {
          INFO(f.dom->name << " -> " << f.cod->name);
          REQUIRE(is_normal_epi(b, f) == b.normal_epi_characterisation(f));
          if constexpr (HasKernelFormula<B>) {
            auto k  = kernel(b, f);
            auto kf = b.kernel_formula(f);
            REQUIRE(*k.object == *kf.dom);
            REQUIRE(k.k.map == kf.map);
          }
        }
      }
    }
  }

  bool related(Object const& x, Element a, Element b) {
    return x.relation(sig::rel)[a * x.size + b] != 0;
  }

}  // namespace

TEST_CASE("relations: characterisations and kernel formulas agree with the engine",
          "[relative][cross]") {
  check_characterisation(RelRefl{});
  check_characterisation(RelEquiv{});
  check_characterisation(RelPreorder{});
}

TEST_CASE("preorders: the counterexample factorisation", "[relative][rel]") {
  RelPreorder b;
  auto f = RelPreorder::counterexample();
  REQUIRE_NOTHROW(validate_morphism(b, f));

  auto k = kernel(b, f);
  auto expected = bits::diagonal(4);
  expected[2 * 4 + 1] = 1;
  REQUIRE(k.object->relation(sig::rel) == expected);

  auto fac = factorise(b, f);
  auto q   = fac.e.cod;
  REQUIRE(q->size == 3);
  REQUIRE(fac.e.map == Table{0, 1, 1, 2});
  REQUIRE(related(*q, 0, 1));
  REQUIRE(related(*q, 1, 2));
  REQUIRE(related(*q, 0, 2));
  REQUIRE_FALSE(related(*q, 1, 0));
  REQUIRE(fac.m.map == Table{0, 1, 0});
  REQUIRE(fac.e_is_normal_epi);
  REQUIRE_FALSE(fac.m_has_trivial_kernel);
  REQUIRE(fac.witness == std::vector<Element>{0, 2});
  REQUIRE(q->element_name(0) == "1");
  REQUIRE(q->element_name(2) == "3");
}

TEST_CASE("preorders: the m of the counterexample has a non-trivial kernel",
          "[relative][rel]") {
  RelPreorder b;
  auto fac = factorise(b, RelPreorder::counterexample());
  auto km  = kernel(b, fac.m);
  REQUIRE_FALSE(b.is_trivial(*km.object));
  REQUIRE(b.triviality_witness(*km.object) == std::vector<Element>{0, 2});
  REQUIRE_FALSE(is_normal_epi(b, RelPreorder::counterexample()));
}

TEST_CASE("reflexive relations: cokernels only add the diagonal", "[relative][rel]") {
  RelRefl b;
  auto x = RelRefl::make("X", 3, {{0, 1}, {1, 2}});
  Morphism k{RelRefl::make("K", 3, {{0, 1}}), x, {0, 1, 2}};
  auto q = b.cokernel(k);
  REQUIRE(q.object->size == 2);
  REQUIRE(related(*q.object, 0, 1));
  REQUIRE_FALSE(related(*q.object, 1, 0));

  RelEquiv e;
  auto y = RelEquiv::make("Y", 3, {{0, 1}});
  REQUIRE(related(*y, 1, 0));
  REQUIRE(e.normal_epi_characterisation(Morphism{y, RelEquiv::make("1", 1, {}), {0, 0, 0}})
          == false);
}

TEST_CASE("groupoids: normal epis", "[relative][grpd]") {
  Grpd b;
  auto z2    = Grpd::group("Z2", detail::cyclic_table(2), 2);
  auto one   = Grpd::discrete(1);
  auto two   = Grpd::discrete(2);
  auto to_pt = make_morphism(z2, one, {0, 0});
  REQUIRE(is_normal_epi(b, to_pt));
  REQUIRE(b.normal_epi_characterisation(to_pt));

  auto collapse = make_morphism(two, one, {0, 0});
  REQUIRE_FALSE(is_normal_epi(b, collapse));
  REQUIRE_FALSE(b.normal_epi_characterisation(collapse));
  REQUIRE(has_trivial_kernel(b, collapse));

  auto codisc = Grpd::codiscrete(2);
  auto k      = kernel(b, make_morphism(codisc, one, {0, 0, 0, 0}));
  REQUIRE(k.object->size == 4);
}

TEST_CASE("groupoids: characterisation agrees with the engine", "[relative][cross]") {
  Grpd b;
  auto objs = b.catalog({});
  std::size_t morphisms = 0;
  for (auto const& x : objs) {
    REQUIRE_NOTHROW(b.validate_object(*x));
    for (auto const& y : objs) {
      for (auto const& f : homs(x, y)) {
        INFO(f.dom->name << " -> " << f.cod->name);
        REQUIRE(is_normal_epi(b, f) == b.normal_epi_characterisation(f));
        ++morphisms;
      }
    }
  }
  REQUIRE(morphisms > 100);
}

TEST_CASE("groupoids: quotient by a normal subgroupoid", "[relative][grpd]") {
  auto s3 = Grpd::group("S3", Grpd::s3_table(), 6);
  BitRows a3(6, 0);
  a3[0] = a3[4] = a3[5] = 1;
  auto q = Grpd::quotient_by_normal(s3, a3);
  REQUIRE(q.object->size == 2);
  REQUIRE(q.projection.map == Table{0, 1, 1, 1, 0, 0});
}

TEST_CASE("preordered groups: cokernels of normal monos", "[relative][ordgrp]") {
  OrdGrp b;
  auto z4 = OrdGrp::make("Z4", detail::cyclic_table(4), 4, {});
  auto m  = OrdGrp::with_positive(z4, {0, 2}, "(Z4,{0,2})");
  auto n  = OrdGrp::with_positive(z4, {0, 1, 2, 3}, "(Z4,Z4)");
  auto q  = b.normal_mono_cokernel(m, n);
  REQUIRE(q.object->size == 2);
  REQUIRE(q.object->predicate(sig::positive) == BitRows{1, 1});
  REQUIRE(is_normal_mono(b, Morphism{m, n, {0, 1, 2, 3}}));

  auto s3   = OrdGrp::make("S3", Grpd::s3_table(), 6, {});
  auto a3   = OrdGrp::with_positive(s3, {0, 4, 5}, "(S3,A3)");
  auto full = OrdGrp::with_positive(s3, {0, 1, 2, 3, 4, 5}, "(S3,S3)");
  auto r    = b.normal_mono_cokernel(a3, full);
  REQUIRE(r.object->size == 2);
  REQUIRE(r.object->predicate(sig::positive) == BitRows{1, 1});

  REQUIRE_THROWS_AS(b.normal_mono_cokernel(full, a3), Error);
}

TEST_CASE("preordered groups: characterisation and kernel formula", "[relative][cross]") {
  check_characterisation(OrdGrp{});
}
