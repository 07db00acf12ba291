#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <prenormal/cli/demos.hpp>
#include <prenormal/cli/suite.hpp>

namespace {

  using namespace prenormal;

  constexpr int exit_usage = 2;

  int emit(std::string const& text, std::string const& out) {
    if (out.empty()) {
      std::cout << text;
      return 0;
    }
    std::ofstream file(out);
    if (!file) fail(ErrorKind::invalid_input, "cannot write " + out);
    file << text;
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks finite categories for prenormality and its consequences"};
  app.require_subcommand(1);

  std::string data_dir = cli::default_data_dir().string();
  std::string format   = "text";
  std::string out;

  auto* demo = app.add_subcommand("demo", "Run the bundled example scenarios");
  demo->require_subcommand(1);
  demo->add_option("--data", data_dir, "Scenario directory");
  auto* demo_list = demo->add_subcommand("list", "List the demos");
  auto* demo_run  = demo->add_subcommand("run", "Run one demo, or all of them");
  std::string demo_name;
  demo_run->add_option("name", demo_name, "Demo name, or 'all'")->required();
  demo_run->add_option("--format", format, "text or json");

  auto* scenario     = app.add_subcommand("scenario", "Run a scenario file");
  std::string scenario_path;
  scenario->add_option("file", scenario_path, "Scenario JSON file")->required();
  scenario->add_option("--format", format, "text or json");

  cli::SuiteConfig cfg;
  std::string      mode = "exhaustive";
  std::uint64_t    seed = 0;
  auto* suite = app.add_subcommand("suite", "Run the law suite on a backend catalog");
  suite->require_subcommand(1);
  auto* suite_list = suite->add_subcommand("list", "List backends and laws");
  auto* suite_run  = suite->add_subcommand("run", "Run laws on one backend");
  suite_run->add_option("--backend", cfg.backend, "Backend tag")->required();
  suite_run->add_option("--laws", cfg.laws, "Comma-separated laws or groups");
  suite_run->add_option("--mode", mode, "exhaustive or sampled");
  auto* seed_opt = suite_run->add_option("--seed", seed, "Seed for sampled mode");
  suite_run->add_option("--samples", cfg.samples, "Cases per law in sampled mode");
  suite_run->add_option("--max-order", cfg.max_order, "Largest catalog object size");
  suite_run->add_option("--max-objects", cfg.max_objects, "Largest catalog");
  suite_run->add_option("--max-cases", cfg.max_cases, "Case budget per law");
  suite_run->add_option("--max-product", cfg.max_product, "Largest product domain for product exactness");
  suite_run->add_option("--format", cfg.format, "text or json");
  suite_run->add_option("--expect-fail", cfg.expect_fail, "Laws expected to fail")->delimiter(',');
  suite_run->add_flag("--strict", cfg.strict, "Expect every law to pass");
  suite_run->add_option("--out", out, "Write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (format != "text" && format != "json") fail(ErrorKind::invalid_input, "--format must be text or json");

    if (demo_list->parsed()) return emit(cli::demo_listing(cli::load_demos(data_dir)), out);

    if (demo_run->parsed() || scenario->parsed()) {
      std::vector<cli::Scenario> todo;
      if (scenario->parsed()) {
        todo.push_back(cli::load_scenario(scenario_path));
      } else {
        auto demos = cli::load_demos(data_dir);
        if (demo_name == "all") {
          for (auto const& [s, p] : demos) todo.push_back(s);
        } else {
          todo.push_back(cli::find_demo(demos, demo_name));
        }
      }
      bool        ok = true;
      std::string text;
      io::Json    all = io::Json::array();
      for (auto const& s : todo) {
        auto r = cli::run_scenario(s);
        ok     = ok && r.ok();
        if (format == "json") all.push_back(cli::to_json(r));
        else text += cli::to_text(r) + "\n";
      }
      if (format == "json") text = (all.size() == 1 ? all[0] : all).dump(2) + "\n";
      emit(text, out);
      return ok ? 0 : 1;
    }

    if (suite_list->parsed()) {
      std::string text = "backends: " + cli::backend_listing() + "\nlaws:";
      for (auto const& l : law_ids()) text += " " + l;
      text += "\ngroups:";
      for (auto const& [g, members] : law_groups()) text += " " + g;
      return emit(text + "\n", out);
    }

    if (mode == "sampled") cfg.mode = Mode::sampled;
    else if (mode != "exhaustive") fail(ErrorKind::invalid_input, "--mode must be exhaustive or sampled");
    if (*seed_opt) cfg.seed = seed;
    auto outcome = cli::run_suite(cfg);
    emit(cli::render(outcome), out);
    return outcome.exit_code();
  } catch (Error const& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::invalid_input || e.kind() == ErrorKind::schema ? exit_usage : 1;
  }
}
