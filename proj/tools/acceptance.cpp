#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>

#include <prenormal/casestudies/bounded_words.hpp>
#include <prenormal/casestudies/divisibility.hpp>
#include <prenormal/cli/demos.hpp>
#include <prenormal/cli/suite.hpp>

namespace {

  using namespace prenormal;

  struct Outcome {
    bool        ok = true;
    std::string detail;

    void require(bool cond, std::string const& what) {
      if (!cond) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  struct Criterion {
    int                      id;
    std::string              title;
    double                   limit_s;
    std::function<Outcome()> run;
  };

  LawOptions uncapped() {
    LawOptions o;
    o.max_cases = std::numeric_limits<std::size_t>::max();
    return o;
  }

  //! Runs laws on a backend's default catalog; each must pass, and must be
  //! exhaustive unless allow_capped.
  void require_laws(Outcome& out, std::string const& tag, std::vector<std::string> const& laws, LawOptions opts = {},
                    bool allow_capped = false, std::function<void(LawReport const&)> const& extra = {}) {
    cli::with_backend(tag, [&](auto const& b) {
      using B = std::decay_t<decltype(b)>;
      Workspace<B> ws(b, CatalogCaps{});
      LawSuite<B> suite(ws, opts);
      for (auto const& law : laws) {
        auto r = suite.run(law);
        out.require(r.verdict == Verdict::pass, tag + " " + law + " " + to_string(r.verdict));
        out.require(allow_capped || !r.capped, tag + " " + law + " capped");
        if (extra) extra(r);
      }
      return 0;
    });
  }

  cli::ScenarioOutcome demo(std::string const& name) {
    return cli::run_scenario(cli::find_demo(cli::load_demos(cli::default_data_dir()), name));
  }

  void require_demo(Outcome& out, cli::ScenarioOutcome const& r) {
    for (auto const& c : r.checks) out.require(c.ok, r.scenario.name + ": " + c.label + " = " + c.actual.dump());
    for (std::size_t i = 0; i < r.suite.size(); ++i) {
      out.require(r.suite[i].verdict == r.suite_expected[i], r.scenario.name + ": " + r.suite[i].law + " "
                                                                 + to_string(r.suite[i].verdict));
      out.require(!r.suite[i].capped, r.scenario.name + ": " + r.suite[i].law + " capped");
    }
  }

  Outcome preordcmon_non_regularity() {
    Outcome out;
    auto r = demo("preordcmon-not-regular");
    require_demo(out, r);
    out.require(r.suite.size() == 7, "prenormality suite incomplete");
    if (out.ok) out.detail = "p regular, p' mono and not regular, " + std::to_string(r.suite.size()) + " laws pass";
    return out;
  }

  Outcome pset_stability() {
    Outcome out;
    auto r = demo("pset-stability-failure");
    require_demo(out, r);
    if (out.ok) {
      out.detail = "pullback of 2 -> 1 along itself is not a normal epi; stability along normal monos passes ("
                   + std::to_string(r.suite[1].applicable) + " squares)";
    }
    return out;
  }

  Outcome relation_factorisation() {
    Outcome out;
    require_demo(out, demo("preord-rel-factorisation-failure"));
    std::size_t capped = 0;
    for (auto const* tag : {"rel-refl", "rel-equiv"}) {
      require_laws(out, tag, law_ids(), {}, true, [&](LawReport const& r) { capped += r.capped; });
    }
    if (out.ok) {
      out.detail = "witness (1, 3); rel-refl and rel-equiv pass all " + std::to_string(law_ids().size()) + " laws ("
                   + std::to_string(capped) + " pullback-lemma searches at the default budget)";
    }
    return out;
  }

  Outcome bounded_words() {
    Outcome out;
    auto r = casestudies::mon_counterexample_check(8);
    out.require(r.in_kernel_pair, "(xzx, yzy) not in the kernel pair");
    out.require(!r.in_congruence, "(xzx, yzy) in the congruence");
    out.require(!r.invariant_violation, "chi invariant broken");
    out.require(r.passed(), "check failed");
    if (out.ok) {
      out.detail = std::to_string(r.words) + " words, " + std::to_string(r.related_pairs_checked)
                   + " related pairs keep the invariant";
    }
    return out;
  }

  Outcome divisibility() {
    Outcome out;
    casestudies::IdealCategory cat(1000);
    out.require(cat.kernel(25) == 2u, "ker(25) != 2");
    out.require(cat.normal_epis() == std::set<std::uint64_t>{1, 2, 5, 10}, "normal epis differ");
    out.require(!casestudies::ideal_factorise(cat, 25).exists(), "25 factorises");
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      if (cat.kernel(n) != casestudies::kernel_by_gcd(n)) {
        out.require(false, "oracle differs at " + std::to_string(n));
        break;
      }
    }
    if (out.ok) out.detail = "ker(25) = 2, normal epis {1, 2, 5, 10}, 25 does not factorise, oracle agrees to 1000";
    return out;
  }

  Outcome factorisation_system() {
    Outcome out;
    for (auto const* tag : {"cmon", "preordcmon", "pocmon", "rel-refl", "rel-equiv", "ordgrp"}) {
      require_laws(out, tag, {"factorisation", "orthogonality", "iso-intersection", "composition-closure", "stability"});
    }
    if (out.ok) out.detail = "5 laws exhaustive on 6 catalogs";
    return out;
  }

  Outcome cross_validation() {
    Outcome out;
    std::size_t morphisms = 0;
    std::size_t backends  = 0;
    for (auto const& tag : cli::backend_tags()) {
      if (tag == "mon") continue;
      ++backends;
      require_laws(out, tag, {"characterisation"}, {}, false, [&](LawReport const& r) { morphisms += r.cases; });
    }
    if (out.ok) {
      out.detail = std::to_string(morphisms) + " morphisms on " + std::to_string(backends)
                   + " backends (mon has no characterisation)";
    }
    return out;
  }

  Outcome noether() {
    Outcome out;
    std::size_t pairs = 0;
    for (auto const* tag : {"cmon", "rel-equiv"}) {
      require_laws(out, tag, {"noether"}, {}, false, [&](LawReport const& r) {
        out.require(r.applicable > 0, std::string(tag) + " has no nested pairs");
        pairs += r.applicable;
      });
    }
    if (out.ok) out.detail = std::to_string(pairs) + " nested pairs, each with an explicit comparison iso";
    return out;
  }

  Outcome exact_sequences() {
    Outcome out;
    LawOptions opts;
    opts.max_product = std::numeric_limits<std::size_t>::max();
    std::size_t pairs = 0;
    std::size_t pulls = 0;
    for (auto const* tag : {"cmon", "preordcmon", "pocmon", "rel-refl", "rel-equiv", "ordgrp", "mon", "grpd"}) {
      require_laws(out, tag, {"product-exactness", "pullback-exactness"}, opts, false, [&](LawReport const& r) {
        std::string t = tag;
        if (r.law == "product-exactness") {
          pairs += r.applicable;
          bool none_skipped = false;
          for (auto const& n : r.notes) none_skipped = none_skipped || n.rfind("0 pairs skipped", 0) == 0;
          out.require(none_skipped, t + " skipped product pairs");
        } else {
          pulls += r.applicable;
          for (auto const& n : r.notes) out.require(n.find("not exercised") == std::string::npos, t + " " + n);
        }
      });
    }
    if (out.ok) {
      out.detail = std::to_string(pairs) + " product pairs, " + std::to_string(pulls)
                   + " pulled-back sequences, both directions exercised on 8 catalogs";
    }
    return out;
  }

  Outcome pullback_lemmas() {
    Outcome out;
    std::size_t squares = 0;
    for (auto const* tag : {"pset", "cmon", "mon", "preordcmon", "pocmon", "rel-refl", "rel-equiv", "ordgrp"}) {
      require_laws(out, tag, {"pb-pushout", "cancellation"}, uncapped(), false,
                   [&](LawReport const& r) { squares += r.applicable; });
    }
    if (out.ok) out.detail = std::to_string(squares) + " applicable squares, none skipped";
    return out;
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "preordered monoids: regular epis are not stable", 5, preordcmon_non_regularity},
      {2, "pointed sets: stability failure", 5, pset_stability},
      {3, "preorder relations: factorisation failure", 60, relation_factorisation},
      {4, "bounded-word monoid counterexample", 60, bounded_words},
      {5, "divisibility ideal", 1, divisibility},
      {6, "factorisation system laws", 300, factorisation_system},
      {7, "normal-epi characterisations", 120, cross_validation},
      {8, "third isomorphism theorem", 120, noether},
      {9, "exact-sequence calculus", 120, exact_sequences},
      {10, "pullback lemmas", 300, pullback_lemmas},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (std::exception const& e) {
      r.require(false, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.require(secs < c.limit_s, "over the time limit");
    failures += !r.ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.limit_s);
    std::cout << (r.ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << " (" << timing << "): " << r.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
