#include <catch_amalgamated.hpp>

#include <prenormal/closure/congruence.hpp>
#include <prenormal/core/signature.hpp>

using namespace prenormal;

namespace {

  ObjectPtr monoid(std::string name, std::size_t n, Table t) {
    Object x;
    x.backend = "cmon";
    x.name    = std::move(name);
    x.size    = n;
    x.constants[sig::unit] = 0;
    x.binary[sig::op]      = std::move(t);
    return make_object(std::move(x));
  }

  ObjectPtr cyclic(std::size_t n) {
    Table t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
    }
    return monoid("Z" + std::to_string(n), n, t);
  }

  bool is_equivalence(BitRows const& r, std::size_t n) {
    return bits::is_reflexive(r, n) && bits::is_symmetric(r, n) && bits::is_transitive(r, n);
  }

  bool compatible(Object const& x, BitRows const& r) {
    auto const  n = x.size;
    auto const& t = x.binary_table(sig::op);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!r[a * n + b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (!r[t[a * n + c] * n + t[b * n + c]]) return false;
          if (!r[t[c * n + a] * n + t[c * n + b]]) return false;
        }
      }
    }
    return true;
  }

  // intersection of every relation of the requested kind containing the seed,
  // by enumerating all relations on the carrier
  BitRows brute_force_closure(Object const& x, PairList const& seed, CongruenceKind kind) {
    auto const n = x.size;
    auto const m = n * n;
    BitRows meet(m, 1);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      BitRows r(m);
      for (std::size_t i = 0; i < m; ++i) r[i] = (mask >> i) & 1u;
      bool contains = true;
      for (auto [a, b] : seed) contains = contains && r[a * n + b];
      if (!contains) continue;
      bool ok = false;
      switch (kind) {
        case CongruenceKind::equivalence: ok = is_equivalence(r, n); break;
        case CongruenceKind::preorder:
          ok = bits::is_reflexive(r, n) && bits::is_transitive(r, n);
          break;
        case CongruenceKind::algebraic: ok = is_equivalence(r, n) && compatible(x, r); break;
        default: break;
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < m; ++i) meet[i] = meet[i] && r[i];
    }
    return meet;
  }

}  // namespace

TEST_CASE("empty seed gives the diagonal", "[closure]") {
  auto z3 = cyclic(3);
  for (auto kind : {CongruenceKind::equivalence, CongruenceKind::preorder,
                    CongruenceKind::algebraic}) {
    auto c = smallest_congruence(*z3, {}, kind);
    REQUIRE(c.pairs == bits::diagonal(3));
  }
}

TEST_CASE("monoid congruence on Z4 generated by (0,2)", "[closure]") {
  auto z4 = cyclic(4);
  auto c  = smallest_congruence(*z4, {{0, 2}}, CongruenceKind::algebraic);
  REQUIRE(c.classes() == std::vector<std::vector<Element>>{{0, 2}, {1, 3}});
  auto q = quotient(z4, c);
  REQUIRE(q.object->size == 2);
  REQUIRE(q.object->binary_table(sig::op) == Table{0, 1, 1, 0});
  REQUIRE(q.projection.map == Table{0, 1, 0, 1});
}

TEST_CASE("closure equals the brute-force intersection on small carriers", "[closure]") {
  std::vector<ObjectPtr> objs{cyclic(3), cyclic(4),
                              monoid("T2", 3, {0, 1, 2, 1, 2, 2, 2, 2, 2}),
                              monoid("J3", 3, {0, 1, 2, 1, 1, 2, 2, 2, 2})};
  for (auto const& x : objs) {
    auto const n = x->size;
    std::vector<std::pair<Element, Element>> pairs;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < pairs.size(); i += 3) {
      PairList seed{pairs[i]};
      if (i + 5 < pairs.size()) seed.push_back(pairs[i + 5]);
      for (auto kind : {CongruenceKind::equivalence, CongruenceKind::preorder,
                        CongruenceKind::algebraic}) {
        if (n > 3 && kind != CongruenceKind::algebraic) continue;
        auto c = smallest_congruence(*x, seed, kind);
        REQUIRE(c.pairs == brute_force_closure(*x, seed, kind));
      }
    }
  }
}

TEST_CASE("closure is idempotent and the projection collapses exactly the classes",
          "[closure]") {
  auto z4 = cyclic(4);
  auto c  = smallest_congruence(*z4, {{1, 3}}, CongruenceKind::algebraic);
  PairList again;
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      if (c.contains(a, b)) again.emplace_back(a, b);
    }
  }
  REQUIRE(smallest_congruence(*z4, again, CongruenceKind::algebraic).pairs == c.pairs);
  auto q = quotient(z4, c);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      REQUIRE((q.projection.map[a] == q.projection.map[b]) == c.contains(a, b));
    }
  }
}

TEST_CASE("preorder closure of the merged counterexample relation", "[closure]") {
  // carrier 1, [2], 3 after merging 2 and 2'; image of the relation
  PairList seed{{0, 1}, {1, 1}, {1, 2}};
  Object x;
  x.backend = "rel-preorder";
  x.size    = 3;
  auto c    = smallest_congruence(x, seed, CongruenceKind::preorder);
  REQUIRE(c.contains(0, 2));
  REQUIRE_FALSE(c.contains(2, 0));
  REQUIRE(bits::count(c.pairs) == 6);
}

TEST_CASE("quotient rejects an invalid congruence", "[closure]") {
  auto z4 = cyclic(4);
  auto c  = smallest_congruence(*z4, {{0, 1}}, CongruenceKind::equivalence);
  try {
    (void) quotient(z4, c);
    FAIL("expected an error");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::congruence_invalid);
  }
}

TEST_CASE("groupoid congruence kills a loop", "[closure]") {
  // the group Z2 as a one-object groupoid: arrows e, g
  Object g;
  g.backend = "grpd";
  g.size    = 2;
  g.unary[sig::src]  = {0, 0};
  g.unary[sig::tgt]  = {0, 0};
  g.unary[sig::inv]  = {0, 1};
  g.binary[sig::comp] = {0, 1, 1, 0};
  auto c = smallest_congruence(g, {{1, 0}}, CongruenceKind::groupoid);
  REQUIRE(c.classes().size() == 1);
}
