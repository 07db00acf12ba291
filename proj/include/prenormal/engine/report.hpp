#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "../core/morphism.hpp"

namespace prenormal {

  enum class Verdict { pass, fail, unsupported };
  enum class Mode { exhaustive, sampled };

  inline std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::pass: return "pass";
      case Verdict::fail: return "fail";
      case Verdict::unsupported: return "unsupported";
    }
    return "?";
  }

  inline std::string to_string(Mode m) {
    return m == Mode::exhaustive ? "exhaustive" : "sampled";
  }

  struct NamedArrow {
    std::string name;
    Morphism    f;
  };

  //! An offending diagram: its arrows by name and what went wrong.
  struct Witness {
    std::string             note;
    std::vector<NamedArrow> arrows;
  };

  struct LawReport {
    std::string          law;
    std::string          backend;
    Verdict              verdict = Verdict::pass;
    Mode                 mode    = Mode::exhaustive;
    std::uint64_t        seed    = 0;
    std::size_t          objects = 0;
    //! Diagrams examined, diagrams meeting the hypotheses, and violations.
    std::size_t          cases      = 0;
    std::size_t          applicable = 0;
    std::size_t          violations = 0;
    //! Set when a case budget stopped the enumeration early.
    bool                 capped = false;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
  };

  struct LawOptions {
    Mode          mode    = Mode::exhaustive;
    std::uint64_t seed    = 0;
    //! Outer-loop items drawn in sampled mode.
    std::size_t   samples = 64;
    //! Case budget; 0 selects the law's own default, which is unlimited
    //! except for the pullback-lemma searches.
    std::size_t   max_cases = 0;
    std::size_t   max_witnesses = 3;
    //! Largest product domain examined by product exactness; 0 means 16.
    std::size_t   max_product = 0;
  };

  //! Accumulates the outcome of one law.
  class LawRun {
   public:
    LawRun(std::string law, std::string backend, std::size_t objects, LawOptions opts)
        : _opts(opts) {
      _r.law     = std::move(law);
      _r.backend = std::move(backend);
      _r.mode    = opts.mode;
      _r.seed    = opts.seed;
      _r.objects = objects;
    }

    //! The positions 0..n-1 of the outer loop: all of them in order, or a
    //! seeded random sample.
    [[nodiscard]] std::vector<std::size_t> select(std::size_t n) const {
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      if (_opts.mode == Mode::sampled) {
        std::mt19937_64 rng(_opts.seed);
        for (std::size_t i = n; i > 1; --i) {
          std::uniform_int_distribution<std::size_t> pick(0, i - 1);
          std::swap(idx[i - 1], idx[pick(rng)]);
        }
        if (idx.size() > _opts.samples) idx.resize(_opts.samples);
        std::sort(idx.begin(), idx.end());
      }
      return idx;
    }

    //! Counts a case; false once the budget is spent.
    bool next_case(std::size_t default_budget = 0) {
      auto budget = _opts.max_cases ? _opts.max_cases : default_budget;
      if (budget && _r.cases >= budget) {
        _r.capped = true;
        return false;
      }
      ++_r.cases;
      return true;
    }

    //! Counts up to n cases at once; returns how many the budget allowed.
    std::size_t take_cases(std::size_t n, std::size_t default_budget = 0) {
      auto budget = _opts.max_cases ? _opts.max_cases : default_budget;
      if (budget && _r.cases + n > budget) {
        n         = budget > _r.cases ? budget - _r.cases : 0;
        _r.capped = true;
      }
      _r.cases += n;
      return n;
    }

    void applicable() {
      ++_r.applicable;
    }

    void violation(Witness w) {
      ++_r.violations;
      if (_r.witnesses.size() < _opts.max_witnesses) _r.witnesses.push_back(std::move(w));
    }

    void note(std::string s) {
      _r.notes.push_back(std::move(s));
    }

    [[nodiscard]] bool capped() const {
      return _r.capped;
    }

    [[nodiscard]] LawReport unsupported(std::string why) {
      _r.verdict = Verdict::unsupported;
      _r.notes.push_back(std::move(why));
      return std::move(_r);
    }

    [[nodiscard]] LawReport finish() {
      _r.verdict = _r.violations ? Verdict::fail : Verdict::pass;
      if (_r.capped) {
        _r.notes.push_back("stopped after " + std::to_string(_r.cases) + " cases");
      }
      return std::move(_r);
    }

   private:
    LawOptions _opts;
    LawReport  _r;
  };

}  // namespace prenormal
