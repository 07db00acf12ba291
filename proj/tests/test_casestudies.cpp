#include <catch_amalgamated.hpp>

#include <numeric>

#include <prenormal/casestudies/bounded_words.hpp>
#include <prenormal/casestudies/divisibility.hpp>

using namespace prenormal;
using namespace prenormal::casestudies;

TEST_CASE("word enumeration counts", "[casestudies][words]") {
  REQUIRE(all_words("xyz", 0) == std::vector<Word>{""});
  REQUIRE(all_words("xyz", 2).size() == 13);
  REQUIRE(all_words("xy", 3).size() == 15);
  auto r = rewrites("xxz", {{"xx", "yy"}}, 3);
  REQUIRE(r == std::vector<Word>{"yyz"});
  REQUIRE(rewrites("xxxx", {{"xx", "yy"}}, 4).size() == 3);
}

TEST_CASE("bounded monoid classes are rewrite orbits", "[casestudies][words]") {
  auto m = bounded_m(6);
  auto stats = class_stats(m);
  for (auto const& w : m.words()) {
    auto orbit = rewrite_orbit(w, m.relations(), m.max_length());
    auto cls   = m.class_of(w);
    REQUIRE(orbit.size() == m.members(cls).size());
    REQUIRE(orbit_stats(w, m.relations(), m.max_length()) == stats[cls]);
  }
}

TEST_CASE("the chi invariant separates xzx from yzy", "[casestudies][words]") {
  auto m     = bounded_m(8);
  auto stats = class_stats(m);
  REQUIRE(stats[m.class_of("xzx")] == WordClassStats{2, 0});
  REQUIRE(stats[m.class_of("yzy")] == WordClassStats{0, 2});
  REQUIRE(stats[m.class_of("xxz")] == WordClassStats{2, 2});
  REQUIRE_FALSE(m.equal("xzx", "yzy"));
  REQUIRE(m.equal("xxz", "yyz"));
  REQUIRE(bounded_n(8).equal("xx", "yy"));
}

TEST_CASE("the bounded counterexample holds at L = 4 and L = 8", "[casestudies][words]") {
  for (std::size_t l : {4u, 8u}) {
    auto r = mon_counterexample_check(l);
    INFO("L = " << l);
    REQUIRE(r.in_kernel_pair);
    REQUIRE_FALSE(r.in_congruence);
    REQUIRE_FALSE(r.invariant_violation);
    REQUIRE(r.related_pairs_checked > 0);
    REQUIRE(r.passed());
  }
  auto r8 = mon_counterexample_check(8);
  REQUIRE(r8.words == 9841);
}

TEST_CASE("the verdict is stable and the counts grow with the bound", "[casestudies][words]") {
  std::size_t last_classes = 0;
  std::size_t last_pairs   = 0;
  for (std::size_t l = 4; l <= 10; ++l) {
    auto r = mon_counterexample_check(l);
    INFO("L = " << l);
    REQUIRE(r.passed());
    REQUIRE(r.m_classes > last_classes);
    REQUIRE(r.generating_pairs > last_pairs);
    REQUIRE(r.m_prime_classes < r.m_classes);
    last_classes = r.m_classes;
    last_pairs   = r.generating_pairs;
  }
}

TEST_CASE("bounds below four are rejected", "[casestudies][words]") {
  REQUIRE_THROWS_AS(mon_counterexample_check(3), Error);
}

TEST_CASE("divisibility kernels and cokernels", "[casestudies][divisibility]") {
  IdealCategory c;
  REQUIRE(c.kernel(25) == 2u);
  REQUIRE(c.kernel(3) == 10u);
  REQUIRE(c.kernel(10) == 1u);
  REQUIRE(c.cokernel(2) == 5u);
  REQUIRE(c.normal_epis() == std::set<std::uint64_t>{1, 2, 5, 10});
  REQUIRE(IdealCategory::is_trivial(20));
  REQUIRE_FALSE(IdealCategory::is_trivial(25));
  REQUIRE_THROWS_AS(c.kernel(0), Error);
  REQUIRE_THROWS_AS(c.kernel(1001), Error);
  REQUIRE_THROWS_AS(IdealCategory(9), Error);
}

TEST_CASE("brute-force kernels match 10 / gcd(n, 10)", "[casestudies][divisibility]") {
  IdealCategory c;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    INFO("n = " << n);
    REQUIRE(c.kernel(n) == kernel_by_gcd(n));
    REQUIRE(c.kernel(n) == c.cokernel(n));
    REQUIRE(transposed_formula(n) == 10 / std::gcd<std::uint64_t>(n, 10));
  }
  REQUIRE(displayed_formula(25) == 5);
  REQUIRE(transposed_formula(25) == 2);
}

TEST_CASE("25 has no normal-epi, trivial-kernel factorisation", "[casestudies][divisibility]") {
  IdealCategory c;
  auto r = ideal_factorise(c, 25);
  REQUIRE_FALSE(r.exists());
  REQUIRE(r.kernel_of_n == 2);
  REQUIRE(r.forced_e == 5);
  REQUIRE(r.residual_m == 5);
  REQUIRE(r.kernel_of_m == 2);
  REQUIRE(r.obstruction.find("ker(5) = 2") != std::string::npos);
  auto ok = ideal_factorise(c, 10);
  REQUIRE(ok.exists());
}
