#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <prenormal/cli/demos.hpp>
#include <prenormal/cli/suite.hpp>

using namespace prenormal;
using io::Json;

namespace {

  int run_cli(std::string const& args) {
    std::string cmd = std::string(PRENORMAL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status      = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::filesystem::path scratch(std::string const& name) {
    return std::filesystem::temp_directory_path() / ("prenormal_test_" + name);
  }

  void round_trip(ObjectPtr const& x) {
    auto back = io::object_from_json(Json::parse(io::to_json(*x).dump()));
    REQUIRE(*back == *x);
    REQUIRE(back->name == x->name);
    REQUIRE(back->labels == x->labels);
  }

}  // namespace

TEST_CASE("objects survive a JSON round trip", "[cli][json]") {
  round_trip(CMon::product(CMon::cyclic(2), CMon::cyclic(3)));
  for (auto const& x : PreordCMon::extra_objects()) round_trip(x);
  round_trip(RelPreorder::counterexample().dom);
  round_trip(Grpd::codiscrete(2));
  round_trip(PSet::make(3));
  round_trip(OrdGrp::with_positive(OrdGrp::make("Z4", detail::cyclic_table(4), 4, {}), {0, 2}, "P"));
  FunctorBackend<CMon> fb(CMon{}, Shape::arrow());
  round_trip(fb.diagram({CMon::cyclic(4), CMon::cyclic(2)}, {make_morphism(CMon::cyclic(4), CMon::cyclic(2), {0, 1, 0, 1})}, "D"));
}

TEST_CASE("morphisms survive a JSON round trip", "[cli][json]") {
  auto f    = RelPreorder::counterexample();
  auto back = io::morphism_from_json(Json::parse(io::to_json(f).dump()));
  REQUIRE(*back.dom == *f.dom);
  REQUIRE(*back.cod == *f.cod);
  REQUIRE(back.map == f.map);
}

TEST_CASE("malformed JSON is rejected with a schema error", "[cli][json]") {
  auto j = io::to_json(*CMon::cyclic(2));
  j["colour"] = "red";
  REQUIRE_THROWS_MATCHES(io::object_from_json(j), Error, Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("unknown field 'colour'")));

  auto k = io::to_json(*CMon::cyclic(2));
  k["binary"]["add"][0][0] = 7;
  REQUIRE_THROWS_AS(io::object_from_json(k), Error);

  Json s = {{"schema_version", 1}, {"name", "x"}, {"kind", "diagram"}, {"backend", "cmon"}, {"extra", 1}};
  REQUIRE_THROWS_AS(cli::parse_scenario(s), Error);
  s.erase("extra");
  s["schema_version"] = 2;
  REQUIRE_THROWS_AS(cli::parse_scenario(s), Error);
  s["schema_version"] = 1;
  s["checks"]         = Json::array({{{"predicate", "is_epi"}, {"args", {"nothing"}}}});
  REQUIRE_THROWS_AS(cli::run_scenario(cli::parse_scenario(s)), Error);
}

TEST_CASE("a scenario object must satisfy its backend's axioms", "[cli][scenario]") {
  auto bad = io::to_json(*CMon::cyclic(3));
  bad["binary"]["add"][1][1] = 0;
  Json s = {{"schema_version", 1}, {"name", "x"}, {"backend", "cmon"}, {"objects", Json::array({bad})}};
  REQUIRE_THROWS_AS(cli::run_scenario(cli::parse_scenario(s)), Error);
}

TEST_CASE("every bundled scenario meets its expectations", "[cli][scenario]") {
  auto demos = cli::load_demos(cli::default_data_dir());
  REQUIRE(demos.size() == 9);
  for (auto const& [s, path] : demos) {
    INFO(s.name);
    auto r = cli::run_scenario(s);
    REQUIRE(r.ok());
    REQUIRE_FALSE(r.checks.empty());
  }
}

TEST_CASE("a wrong expectation is reported, not hidden", "[cli][scenario]") {
  auto s = cli::find_demo(cli::load_demos(cli::default_data_dir()), "pset-stability-failure");
  s.suite["expect"] = Json::object();
  auto r            = cli::run_scenario(s);
  REQUIRE_FALSE(r.ok());
  REQUIRE(cli::to_text(r).find("UNEXPECTED") != std::string::npos);
}

TEST_CASE("suite outcomes follow the expectation table", "[cli][suite]") {
  cli::SuiteConfig cfg;
  cfg.backend = "pset";
  cfg.laws    = "stability,stability-normal-monos";
  auto out    = cli::run_suite(cfg);
  REQUIRE(out.met());
  cfg.strict = true;
  REQUIRE(cli::run_suite(cfg).exit_code() == 1);

  cfg.backend = "nope";
  REQUIRE_THROWS_AS(cli::run_suite(cfg), Error);
  cfg.backend = "cmon";
  cfg.mode    = Mode::sampled;
  REQUIRE_THROWS_AS(cli::run_suite(cfg), Error);
}

TEST_CASE("the command line exit codes", "[cli][e2e]") {
  REQUIRE(run_cli("demo list") == 0);
  REQUIRE(run_cli("demo run noether-cmon") == 0);
  REQUIRE(run_cli("demo run no-such-demo") == 2);
  REQUIRE(run_cli("suite run --backend pset --laws stability") == 0);
  REQUIRE(run_cli("suite run --backend pset --laws stability --strict") == 1);
  REQUIRE(run_cli("suite run --backend cmon --laws kernels --expect-fail kernels") == 1);
  REQUIRE(run_cli("suite run --backend no-such-backend") == 2);
  REQUIRE(run_cli("suite run --backend cmon --laws no-such-law") == 2);
  REQUIRE(run_cli("suite run --backend cmon --mode sampled") == 2);
  REQUIRE(run_cli("suite run --backend cmon --format yaml") == 2);
  REQUIRE(run_cli("suite run") == 2);
  REQUIRE(run_cli("frobnicate") == 2);
}

TEST_CASE("sampled runs are byte-identical for a seed", "[cli][e2e]") {
  auto a = scratch("a.json");
  auto b = scratch("b.json");
  auto c = scratch("c.json");
  std::string args = "suite run --backend cmon --laws stability,factorisation --mode sampled --samples 40 --format json --seed ";
  REQUIRE(run_cli(args + "7 --out " + a.string()) == 0);
  REQUIRE(run_cli(args + "7 --out " + b.string()) == 0);
  REQUIRE(run_cli(args + "8 --out " + c.string()) == 0);
  auto ja = slurp(a);
  REQUIRE(ja == slurp(b));
  REQUIRE(ja != slurp(c));
  auto j = Json::parse(ja);
  REQUIRE(j["schema_version"] == 1);
  REQUIRE(j["seed"] == 7);
  REQUIRE(j["reports"].size() == 2);
  REQUIRE(j["expectations_met"] == true);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  std::filesystem::remove(c);
}
