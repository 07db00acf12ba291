#pragma once

#include <string>
#include <vector>

#include "../backends/groupoid.hpp"
#include "../backends/monoid.hpp"
#include "../backends/ordered_monoid.hpp"
#include "../backends/ordgrp.hpp"
#include "../backends/pset.hpp"
#include "../backends/rel.hpp"
#include "../combinators/functor.hpp"
#include "../combinators/slice.hpp"

namespace prenormal::cli {

  //! Every backend tag the front end can run, base backends first.
  inline std::vector<std::string> const& backend_tags() {
    static std::vector<std::string> const tags{
        "cmon",         "mon",          "pset",         "preordcmon",    "pocmon",
        "rel-refl",     "rel-equiv",    "rel-preorder", "grpd",          "ordgrp",
        "single(cmon)", "arrow(cmon)",  "arrow(pset)",  "arrow(rel-refl)", "cmon/Z2"};
    return tags;
  }

  inline std::string backend_listing() {
    std::string out;
    for (auto const& t : backend_tags()) out += (out.empty() ? "" : ", ") + t;
    return out;
  }

  //! Calls f with the backend named by tag; every call must return the
  //! same type.
  template <typename F>
  auto with_backend(std::string const& tag, F&& f) {
    if (tag == "cmon") return f(CMon{});
    if (tag == "mon") return f(Mon{});
    if (tag == "pset") return f(PSet{});
    if (tag == "preordcmon") return f(PreordCMon{});
    if (tag == "pocmon") return f(POCMon{});
    if (tag == "rel-refl") return f(RelRefl{});
    if (tag == "rel-equiv") return f(RelEquiv{});
    if (tag == "rel-preorder") return f(RelPreorder{});
    if (tag == "grpd") return f(Grpd{});
    if (tag == "ordgrp") return f(OrdGrp{});
    if (tag == "single(cmon)") return f(FunctorBackend<CMon>(CMon{}, Shape::single()));
    if (tag == "arrow(cmon)") return f(FunctorBackend<CMon>(CMon{}, Shape::arrow()));
    if (tag == "arrow(pset)") return f(FunctorBackend<PSet>(PSet{}, Shape::arrow()));
    if (tag == "arrow(rel-refl)") return f(FunctorBackend<RelRefl>(RelRefl{}, Shape::arrow()));
    if (tag == "cmon/Z2") return f(SliceBackend<CMon>(CMon{}, CMon::cyclic(2)));
    fail(ErrorKind::invalid_input, "unknown backend '" + tag + "'; known backends: " + backend_listing());
  }

  //! Laws whose verdict on the default catalog of a backend is not a pass.
  inline std::map<std::string, Verdict> const& expected_exceptions(std::string const& tag) {
    static std::map<std::string, std::map<std::string, Verdict>> const table{
        {"pset", {{"stability", Verdict::fail}, {"product-exactness", Verdict::fail}}},
        {"rel-preorder",
         {{"factorisation", Verdict::fail},
          {"composition-closure", Verdict::fail},
          {"stability", Verdict::fail},
          {"stability-normal-monos", Verdict::fail},
          {"pullback-exactness", Verdict::fail}}},
        {"grpd",
         {{"kernel-formula", Verdict::unsupported},
          {"pb-pushout", Verdict::unsupported},
          {"cancellation", Verdict::unsupported},
          {"barr-kock", Verdict::unsupported}}},
        {"mon", {{"characterisation", Verdict::unsupported}}},
        {"single(cmon)", {{"kernel-formula", Verdict::unsupported}}},
        {"arrow(cmon)", {{"kernel-formula", Verdict::unsupported}}},
        {"arrow(pset)",
         {{"kernel-formula", Verdict::unsupported},
          {"stability", Verdict::fail},
          {"product-exactness", Verdict::fail}}},
        {"arrow(rel-refl)", {{"kernel-formula", Verdict::unsupported}}},
        {"cmon/Z2", {{"kernel-formula", Verdict::unsupported}}},
    };
    static std::map<std::string, Verdict> const none;
    auto it = table.find(tag);
    return it == table.end() ? none : it->second;
  }

  inline Verdict expected_verdict(std::string const& tag, std::string const& law) {
    auto const& ex = expected_exceptions(tag);
    auto it        = ex.find(law);
    return it == ex.end() ? Verdict::pass : it->second;
  }

}  // namespace prenormal::cli
