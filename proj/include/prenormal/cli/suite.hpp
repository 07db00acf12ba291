#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "../engine/laws.hpp"
#include "../io/json.hpp"
#include "backends.hpp"

namespace prenormal::cli {

  struct SuiteConfig {
    std::string                  backend;
    std::string                  laws = "all";
    Mode                         mode = Mode::exhaustive;
    std::optional<std::uint64_t> seed;
    std::size_t                  samples     = 64;
    std::size_t                  max_order   = 0;
    std::size_t                  max_objects = 0;
    //! 0 keeps each law's own budget.
    std::size_t                  max_cases = 0;
    //! 0 keeps the product-exactness default of 16 elements.
    std::size_t                  max_product = 0;
    std::string                  format    = "text";
    //! Laws declared to fail on top of the built-in expectations.
    std::vector<std::string>     expect_fail;
    //! Ignore the built-in expectations: every law must pass.
    bool                         strict = false;
  };

  inline void validate(SuiteConfig const& cfg) {
    if (cfg.mode == Mode::sampled && !cfg.seed) fail(ErrorKind::invalid_input, "sampled mode needs --seed");
    if (cfg.mode == Mode::sampled && cfg.samples == 0) fail(ErrorKind::invalid_input, "--samples must be positive");
    if (cfg.format != "text" && cfg.format != "json") {
      fail(ErrorKind::invalid_input, "--format must be text or json, not '" + cfg.format + "'");
    }
    auto const& tags = backend_tags();
    if (std::find(tags.begin(), tags.end(), cfg.backend) == tags.end()) {
      fail(ErrorKind::invalid_input, "unknown backend '" + cfg.backend + "'; known backends: " + backend_listing());
    }
    (void)expand_laws(cfg.laws);
    for (auto const& l : cfg.expect_fail) (void)expand_laws(l);
  }

  struct SuiteOutcome {
    SuiteConfig            config;
    std::size_t            objects = 0;
    std::size_t            arrows  = 0;
    std::vector<LawReport> reports;
    std::vector<Verdict>   expected;

    [[nodiscard]] bool met() const {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].verdict != expected[i]) return false;
      }
      return true;
    }

    [[nodiscard]] int exit_code() const {
      return met() ? 0 : 1;
    }
  };

  inline SuiteOutcome run_suite(SuiteConfig const& cfg) {
    validate(cfg);
    SuiteOutcome out;
    out.config = cfg;
    LawOptions opts;
    opts.mode      = cfg.mode;
    opts.seed      = cfg.seed.value_or(0);
    opts.samples   = cfg.samples;
    opts.max_cases   = cfg.max_cases;
    opts.max_product = cfg.max_product;
    std::set<std::string> declared;
    for (auto const& l : cfg.expect_fail) {
      for (auto const& id : expand_laws(l)) declared.insert(id);
    }
    with_backend(cfg.backend, [&](auto const& b) {
      using B = std::decay_t<decltype(b)>;
      Workspace<B> ws(b, CatalogCaps{cfg.max_order, cfg.max_objects});
      out.objects = ws.objects().size();
      out.arrows  = ws.arrows().size();
      LawSuite<B> suite(ws, opts);
      for (auto const& law : expand_laws(cfg.laws)) {
        out.reports.push_back(suite.run(law));
        auto e = cfg.strict ? Verdict::pass : expected_verdict(cfg.backend, law);
        if (declared.count(law)) e = Verdict::fail;
        out.expected.push_back(e);
      }
      return 0;
    });
    return out;
  }

  inline io::Json to_json(SuiteOutcome const& s) {
    io::Json j;
    j["schema_version"] = io::schema_version;
    j["backend"]        = s.config.backend;
    j["mode"]           = to_string(s.config.mode);
    if (s.config.seed) j["seed"] = *s.config.seed;
    j["max_order"] = s.config.max_order;
    j["catalog"]   = {{"objects", s.objects}, {"arrows", s.arrows}};
    io::Json reports = io::Json::array();
    for (std::size_t i = 0; i < s.reports.size(); ++i) {
      auto r        = io::to_json(s.reports[i]);
      r["expected"] = to_string(s.expected[i]);
      reports.push_back(std::move(r));
    }
    j["reports"]          = std::move(reports);
    j["expectations_met"] = s.met();
    return j;
  }

  inline std::string to_text(SuiteOutcome const& s) {
    std::string out = "backend " + s.config.backend + ": " + std::to_string(s.objects) + " objects, "
                      + std::to_string(s.arrows) + " arrows, " + to_string(s.config.mode);
    if (s.config.seed) out += " seed " + std::to_string(*s.config.seed);
    out += "\n";
    std::size_t unexpected = 0;
    for (std::size_t i = 0; i < s.reports.size(); ++i) {
      auto const& r = s.reports[i];
      bool ok       = r.verdict == s.expected[i];
      unexpected += !ok;
      out += (ok ? "[ok] " : "[UNEXPECTED] ") + io::to_text(r);
      if (!ok) out += "  expected: " + to_string(s.expected[i]) + "\n";
    }
    out += unexpected ? std::to_string(unexpected) + " unexpected verdicts\n" : "all verdicts as expected\n";
    return out;
  }

  inline std::string render(SuiteOutcome const& s) {
    return s.config.format == "json" ? to_json(s).dump(2) + "\n" : to_text(s);
  }

}  // namespace prenormal::cli
