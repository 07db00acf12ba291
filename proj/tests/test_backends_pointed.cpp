#include <catch_amalgamated.hpp>

#include <prenormal/backends/monoid.hpp>
#include <prenormal/backends/monoid_enumeration.hpp>
#include <prenormal/backends/ordered_monoid.hpp>
#include <prenormal/backends/pset.hpp>
#include <prenormal/engine/kernel.hpp>

using namespace prenormal;

namespace {

  template <typename B>
  std::vector<Morphism> all_morphisms(B const& b) {
    auto objs = b.catalog({});
    std::vector<Morphism> out;
    for (auto const& x : objs) {
      for (auto const& y : objs) {
        for (auto& f : homs(x, y)) out.push_back(std::move(f));
      }
    }
    return out;
  }

  // every associative unital table on {0..n-1} with unit 0, by brute force
  // over all tables, counted up to relabelling by bijections fixing 0
  std::size_t brute_force_monoids(std::size_t n, bool commutative) {
    std::size_t cells = (n - 1) * (n - 1);
    std::vector<Table> found;
    std::vector<Element> free(cells, 0);
    auto table_of = [&] {
      Table t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        t[a]         = static_cast<Element>(a);
        t[a * n]     = static_cast<Element>(a);
      }
      for (std::size_t i = 0; i < cells; ++i) {
        t[(1 + i / (n - 1)) * n + 1 + i % (n - 1)] = free[i];
      }
      return t;
    };
    while (true) {
      auto t  = table_of();
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          if (commutative && t[a * n + b] != t[b * n + a]) ok = false;
          for (std::size_t c = 0; c < n && ok; ++c) {
            ok = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
          }
        }
      }
      if (ok) {
        std::vector<Element> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Element>(i);
        Table best = t;
        do {
          Table u(n * n);
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) u[perm[a] * n + perm[b]] = perm[t[a * n + b]];
          }
          best = std::min(best, u);
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
        if (std::find(found.begin(), found.end(), best) == found.end()) found.push_back(best);
      }
      std::size_t i = 0;
      while (i < cells && ++free[i] == static_cast<Element>(n)) free[i++] = 0;
      if (i == cells) break;
    }
    return found.size();
  }

  Morphism regular_p() {
    auto a = PreordCMon::extra_objects()[0];
    auto b = PreordCMon::extra_objects()[1];
    return make_morphism(a, b, {0, 1, 1, 2});
  }

  Morphism inclusion_i() {
    auto b = PreordCMon::extra_objects()[1];
    auto c = PreordCMon::extra_objects()[2];
    return make_morphism(c, b, {0, 2});
  }

}  // namespace

TEST_CASE("monoid enumeration matches the brute-force count", "[pointed][monoid]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    REQUIRE(enumerate_monoids(n, true).size() == brute_force_monoids(n, true));
    REQUIRE(enumerate_monoids(n, false).size() == brute_force_monoids(n, false));
  }
  REQUIRE(enumerate_monoids(4, true).size() == 19);
  REQUIRE(enumerate_monoids(4, false).size() == 35);
}

TEST_CASE("commutative monoid normal epis", "[pointed][cmon]") {
  CMon b;
  auto z4 = CMon::cyclic(4);
  auto z2 = CMon::cyclic(2);
  auto q  = make_morphism(z4, z2, {0, 1, 0, 1});
  REQUIRE(is_normal_epi(b, q));
  REQUIRE(b.normal_epi_characterisation(q));

  auto t1   = CMon::truncated(2);
  auto t1t1 = CMon::product(t1, t1);
  auto join = make_morphism(t1t1, t1, {0, 1, 1, 1});
  auto fac  = factorise(b, join);
  REQUIRE(fac.kernel.object->size == 1);
  REQUIRE(is_iso(fac.e));
  REQUIRE(fac.m.map == join.map);
  REQUIRE(fac.m_has_trivial_kernel);
  REQUIRE_FALSE(is_normal_epi(b, join));
  REQUIRE_FALSE(b.normal_epi_characterisation(join));
  REQUIRE(has_trivial_kernel(b, join));

  auto sub = make_morphism(CMon::make("{0,2}", 2, {0, 1, 1, 0}), z4, {0, 2});
  REQUIRE(is_normal_mono(b, sub));
  auto coker = cokernel(b, sub);
  REQUIRE(coker.congruence.classes() == std::vector<std::vector<Element>>{{0, 2}, {1, 3}});
  REQUIRE(is_normal_mono(b, b.coreflection(z4).counit));
}

TEST_CASE("characterisations agree with the engine on the cmon and pset catalogs",
          "[pointed][cross]") {
  CMon cm;
  for (auto const& f : all_morphisms(cm)) {
    INFO(f.dom->name << " -> " << f.cod->name);
    REQUIRE(is_normal_epi(cm, f) == cm.normal_epi_characterisation(f));
  }
  PSet ps;
  for (auto const& f : all_morphisms(ps)) {
    REQUIRE(is_normal_epi(ps, f) == ps.normal_epi_characterisation(f));
  }
}

TEST_CASE("pointed sets: the projection 2x2 -> 2 is not a normal epi", "[pointed][pset]") {
  PSet b;
  auto two = PSet::make(2);
  auto one = PSet::make(1);
  Morphism p{two, one, {0, 0}};
  REQUIRE(is_normal_epi(b, p));
  REQUIRE(b.normal_epi_characterisation(p));
  auto pb = pullback(p, p);
  REQUIRE(pb.object->size == 4);
  REQUIRE_FALSE(is_normal_epi(b, pb.left));
  REQUIRE_FALSE(b.normal_epi_characterisation(pb.left));
  REQUIRE(is_epi(b, p, b.catalog({})));

  Morphism f{PSet::make(3), two, {0, 0, 1}};
  auto k = kernel(b, f);
  REQUIRE(k.k.map == Table{0, 1});
  REQUIRE(b.kernel_formula(f).map == k.k.map);
}

TEST_CASE("preordered monoids: the regular epi p is not normal", "[pointed][preordcmon]") {
  PreordCMon b;
  auto p = regular_p();
  auto i = inclusion_i();
  REQUIRE(is_regular_epi(b, p));
  REQUIRE_FALSE(is_normal_epi(b, p));
  REQUIRE_FALSE(b.normal_epi_characterisation(p));
  REQUIRE_FALSE(CMon::kernel_translation_property(p));

  auto pb = pullback(p, i);
  auto d  = pb.object;
  REQUIRE(d->size == 2);
  REQUIRE(d->relation(sig::le) == bits::diagonal(2));
  REQUIRE(d->binary_table(sig::op) == Table{0, 1, 1, 1});
  auto p2 = pb.right;
  REQUIRE(is_mono(b, p2, b.catalog({})));
  REQUIRE_FALSE(is_iso(p2));
  REQUIRE_FALSE(is_regular_epi(b, p2));

  // the coequalizer of the kernel pair of p is A / {1 ~ 1'} with the
  // generated order, which is the chain B
  auto q = b.quotient(p.dom, {{1, 2}});
  REQUIRE(q.object->size == 3);
  REQUIRE(isomorphic(q.object, p.cod));
  REQUIRE_FALSE(b.normal_epi_characterisation(q.projection));
}

TEST_CASE("preordered monoids: quotient order needs no closure for cokernels of kernels",
          "[pointed][preordcmon]") {
  PreordCMon b;
  auto objs = b.catalog({});
  std::size_t checked = 0;
  for (auto const& x : objs) {
    for (auto const& y : objs) {
      for (auto const& f : homs(x, y)) {
        auto k = kernel(b, f);
        auto q = b.cokernel(k.k);
        REQUIRE_FALSE(q.relation_closure_added);
        ++checked;
      }
    }
  }
  REQUIRE(checked > 0);
}

TEST_CASE("preordered and partially ordered monoid characterisations", "[pointed][cross]") {
  PreordCMon pre;
  for (auto const& f : all_morphisms(pre)) {
    REQUIRE(is_normal_epi(pre, f) == pre.normal_epi_characterisation(f));
  }
  POCMon po;
  for (auto const& f : all_morphisms(po)) {
    INFO(f.dom->name << " -> " << f.cod->name);
    REQUIRE(is_normal_epi(po, f) == po.normal_epi_characterisation(f));
  }
}

TEST_CASE("partially ordered quotients reflect cycles", "[pointed][pocmon]") {
  POCMon b;
  // 0 unit, 1 absorbing, 2 idempotent, ordered 1 <= 0 <= 2
  auto x = POCMon::make("X", 3, {0, 1, 2, 1, 1, 1, 2, 1, 2}, {{1, 0}, {0, 2}, {1, 2}});
  auto q = b.quotient(x, {{2, 1}});
  REQUIRE(q.object->size == 1);
  REQUIRE(q.projection.map == Table{0, 0, 0});

  std::size_t merged = 0;
  for (auto const& y : b.catalog({})) {
    for (Element a = 1; a < static_cast<Element>(y->size); ++a) {
      for (Element c = 0; c < a; ++c) {
        auto alg = prenormal::quotient(y, smallest_congruence(*y, {{a, c}}, CongruenceKind::algebraic));
        auto r   = b.quotient(y, {{a, c}});
        REQUIRE(bits::is_antisymmetric(r.object->relation(sig::le), r.object->size));
        b.validate_object(*r.object);
        REQUIRE(descend_along(alg.projection, r.projection));
        if (r.object->size < alg.object->size) ++merged;
      }
    }
  }
  REQUIRE(merged > 0);
}
