#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "scenario.hpp"

#ifndef PRENORMAL_DATA_DIR
#define PRENORMAL_DATA_DIR "data"
#endif

namespace prenormal::cli {

  inline std::filesystem::path default_data_dir() {
    return std::filesystem::path(PRENORMAL_DATA_DIR) / "scenarios";
  }

  //! Every scenario file of a directory, ordered by scenario name.
  inline std::vector<std::pair<Scenario, std::filesystem::path>> load_demos(std::filesystem::path const& dir) {
    if (!std::filesystem::is_directory(dir)) fail(ErrorKind::invalid_input, "no scenario directory at " + dir.string());
    std::vector<std::pair<Scenario, std::filesystem::path>> out;
    for (auto const& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".json") out.emplace_back(load_scenario(entry.path()), entry.path());
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.first.name < b.first.name; });
    return out;
  }

  inline std::string demo_listing(std::vector<std::pair<Scenario, std::filesystem::path>> const& demos) {
    std::size_t width = 0;
    for (auto const& [s, p] : demos) width = std::max(width, s.name.size());
    std::string out;
    for (auto const& [s, p] : demos) {
      out += s.name + std::string(width + 2 - s.name.size(), ' ') + s.anchor + "\n";
    }
    return out;
  }

  inline Scenario const& find_demo(std::vector<std::pair<Scenario, std::filesystem::path>> const& demos,
                                   std::string const& name) {
    for (auto const& [s, p] : demos) {
      if (s.name == name) return s;
    }
    fail(ErrorKind::invalid_input, "unknown demo '" + name + "'; available demos:\n" + demo_listing(demos));
  }

}  // namespace prenormal::cli
