#include <catch_amalgamated.hpp>

#include <prenormal/core/homs.hpp>
#include <prenormal/core/limits.hpp>
#include <prenormal/core/signature.hpp>

using namespace prenormal;

namespace {

  ObjectPtr pointed(std::size_t n) {
    Object x;
    x.backend              = "pset";
    x.name                 = "P" + std::to_string(n);
    x.size                 = n;
    x.constants[sig::base] = 0;
    return make_object(std::move(x));
  }

  ObjectPtr cyclic(std::size_t n) {
    Object x;
    x.backend = "cmon";
    x.name    = "Z" + std::to_string(n);
    x.size    = n;
    x.constants[sig::unit] = 0;
    Table t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
    }
    x.binary[sig::op] = t;
    return make_object(std::move(x));
  }

  ObjectPtr relation(std::size_t n, std::vector<std::pair<int, int>> const& pairs) {
    Object x;
    x.backend = "rel-preorder";
    x.size    = n;
    BitRows r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
    for (auto [a, b] : pairs) r[a * n + b] = 1;
    x.relations[sig::rel] = r;
    return make_object(std::move(x));
  }

  // every function table dom -> cod, by counting
  std::vector<Table> all_functions(std::size_t n, std::size_t m) {
    std::vector<Table> out;
    if (m == 0) {
      if (n == 0) out.emplace_back();
      return out;
    }
    Table t(n, 0);
    while (true) {
      out.push_back(t);
      std::size_t i = 0;
      while (i < n && ++t[i] == static_cast<Element>(m)) t[i++] = 0;
      if (i == n) break;
    }
    return out;
  }

}  // namespace

TEST_CASE("composition and identities", "[core]") {
  auto three = pointed(3);
  auto two   = pointed(2);
  auto one   = pointed(1);
  Morphism f{three, two, {0, 0, 1}};
  Morphism g{two, one, {0, 0}};
  REQUIRE(compose(identity(three), f) == f);
  REQUIRE(compose(f, identity(two)) == f);
  auto h = compose(f, g);
  REQUIRE(h.map == Table{0, 0, 0});
  REQUIRE_THROWS_AS(compose(g, f), Error);
  try {
    (void) compose(g, f);
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::composition);
  }
}

TEST_CASE("structural equality ignores names", "[core]") {
  Object a = *cyclic(3);
  Object b = a;
  b.names  = {"e", "g", "gg"};
  b.name   = "other";
  REQUIRE(a == b);
  b.binary[sig::op][4] = 0;
  REQUIRE_FALSE(a == b);
}

TEST_CASE("hom enumeration agrees with brute force", "[core]") {
  std::vector<ObjectPtr> objs{cyclic(1), cyclic(2), cyclic(3), cyclic(4), pointed(1),
                              pointed(2), pointed(3), relation(3, {{0, 1}}),
                              relation(3, {{0, 1}, {1, 2}, {0, 2}}), relation(2, {})};
  for (auto const& a : objs) {
    for (auto const& b : objs) {
      if (a->backend != b->backend) continue;
      std::size_t brute = 0;
      for (auto const& t : all_functions(a->size, b->size)) {
        brute += preserves_structure(*a, *b, t);
      }
      REQUIRE(homs(a, b).size() == brute);
    }
  }
  // group homs Z_m -> Z_n number gcd(m, n)
  REQUIRE(homs(cyclic(4), cyclic(2)).size() == 2);
  REQUIRE(homs(cyclic(3), cyclic(2)).size() == 1);
  REQUIRE(homs(cyclic(4), cyclic(4)).size() == 4);
}

TEST_CASE("pullback carrier and universal property", "[core]") {
  auto two = pointed(2);
  auto one = pointed(1);
  Morphism p{two, one, {0, 0}};
  auto pb = pullback(p, p);
  REQUIRE(pb.object->size == 4);
  REQUIRE(pb.left.map == Table{0, 0, 1, 1});
  REQUIRE(pb.right.map == Table{0, 1, 0, 1});
  REQUIRE(pb.object->element_name(1) == "(0,1)");

  // oracle: pairs with equal images, and every cone factors exactly once
  auto z4 = cyclic(4);
  auto z2 = cyclic(2);
  Morphism q{z4, z2, {0, 1, 0, 1}};
  auto kp = pullback(q, q);
  std::size_t expected = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) expected += q.map[a] == q.map[b];
  }
  REQUIRE(kp.object->size == expected);
  for (auto const& t : {cyclic(1), cyclic(2), cyclic(4)}) {
    for (auto const& u : homs(t, z4)) {
      for (auto const& v : homs(t, z4)) {
        bool cone = compose(u, q).map == compose(v, q).map;
        std::size_t mediators = 0;
        for (auto const& w : homs(t, kp.object)) {
          mediators += compose(w, kp.left).map == u.map && compose(w, kp.right).map == v.map;
        }
        REQUIRE(mediators == (cone ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("pullback along an identity", "[core]") {
  auto z4 = cyclic(4);
  auto z2 = cyclic(2);
  Morphism q{z4, z2, {0, 1, 0, 1}};
  auto pb = pullback(q, identity(z2));
  REQUIRE(pb.object->size == 4);
  REQUIRE(is_iso(pb.left));
  REQUIRE(compose(pb.left, q).map == pb.right.map);
}

TEST_CASE("isomorphisms check the inverse", "[core]") {
  auto chain    = relation(2, {{0, 1}});
  auto discrete = relation(2, {});
  Morphism bij{discrete, chain, {0, 1}};
  REQUIRE(preserves_structure(*discrete, *chain, bij.map));
  REQUIRE_FALSE(is_iso(bij));
  REQUIRE(is_iso(identity(chain)));
  REQUIRE(isomorphic(relation(2, {{0, 1}}), relation(2, {{1, 0}})));
  REQUIRE_FALSE(isomorphic(chain, discrete));
}

TEST_CASE("lifting and descending", "[core]") {
  auto z4 = cyclic(4);
  auto z2 = cyclic(2);
  Morphism q{z4, z2, {0, 1, 0, 1}};
  Morphism twice{z4, z4, {0, 2, 0, 2}};
  auto d = descend_along(q, twice);
  REQUIRE(d);
  REQUIRE(d->map == Table{0, 2});
  REQUIRE_FALSE(descend_along(q, identity(z4)));
  Morphism incl{z2, z4, {0, 2}};
  auto l = lift_through(twice, incl);
  REQUIRE(l);
  REQUIRE(l->map == Table{0, 1, 0, 1});
  auto im = image(twice);
  REQUIRE(im.object->size == 2);
  REQUIRE(compose(im.corestriction, im.inclusion).map == twice.map);
}

TEST_CASE("squares and the pullback test", "[core]") {
  auto z4 = cyclic(4);
  auto z2 = cyclic(2);
  auto z1 = cyclic(1);
  Morphism q{z4, z2, {0, 1, 0, 1}};
  Morphism to0{z2, z1, {0, 0}};
  Morphism z4to0{z4, z1, {0, 0, 0, 0}};
  Square sq{q, identity(z4), to0, z4to0};
  REQUIRE(sq.commutes());
  REQUIRE_FALSE(is_pullback(sq));
  auto pb = pullback(z4to0, to0);
  Square good{pb.right, pb.left, to0, z4to0};
  REQUIRE(is_pullback(good));
}
