/*
Copyright 2026 The proflat Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// proflat command-line interface. Uses only the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "proflat/proflat.h"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct CliError {
  proflat_status status;
  std::string message;
};

void check(proflat_status s) {
  if (s != PROFLAT_OK) throw CliError{s, proflat_last_error()};
}

std::string take(char *s) {
  std::string out = s ? s : "";
  proflat_string_free(s);
  return out;
}

using CataloguePtr = std::unique_ptr<proflat_catalogue, decltype(&proflat_catalogue_free)>;
using GroupPtr = std::unique_ptr<proflat_group, decltype(&proflat_group_free)>;
using LatticePtr = std::unique_ptr<proflat_lattice, decltype(&proflat_lattice_free)>;
using TowerPtr = std::unique_ptr<proflat_tower, decltype(&proflat_tower_free)>;

CataloguePtr load_catalogue(const std::vector<std::string> &files) {
  proflat_catalogue *c = nullptr;
  check(proflat_catalogue_builtin(&c));
  CataloguePtr out(c, proflat_catalogue_free);
  for (const auto &f : files) check(proflat_catalogue_add_file(out.get(), f.c_str(), nullptr));
  return out;
}

GroupPtr resolve(const proflat_catalogue *c, const std::string &spec) {
  proflat_group *g = nullptr;
  check(proflat_group_resolve(c, spec.c_str(), &g));
  return GroupPtr(g, proflat_group_free);
}

TowerPtr open_tower(const std::string &source, std::size_t depth) {
  proflat_tower *t = nullptr;
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    check(proflat_tower_builtin(source.substr(prefix.size()).c_str(), depth ? depth : 4, &t));
    return TowerPtr(t, proflat_tower_free);
  }
  check(proflat_tower_load(source.c_str(), &t));
  TowerPtr loaded(t, proflat_tower_free);
  if (depth == 0) return loaded;
  proflat_tower *cut = nullptr;
  check(proflat_tower_truncate(loaded.get(), depth, &cut));
  return TowerPtr(cut, proflat_tower_free);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Subgroup lattices of finite groups and profinite towers"};
  app.require_subcommand(1);
  std::vector<std::string> catalogue_files;
  app.add_option("--catalogue", catalogue_files, "Extra catalogue file(s) of group records")
      ->check(CLI::ExistingFile);

  std::string group_spec, emit = "hasse";
  auto *lattice = app.add_subcommand("lattice", "Compute and emit a subgroup lattice");
  lattice->add_option("group", group_spec, "Catalogue name or inline record")->required();
  lattice->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"hasse", "json"}));

  std::string predicate;
  auto *check_cmd = app.add_subcommand("check", "Evaluate a predicate on a group");
  check_cmd->add_option("predicate", predicate, "Predicate name")->required();
  check_cmd->add_option("group", group_spec, "Catalogue name or inline record")->required();

  std::string tower_source, trajectory = "width";
  std::size_t depth = 0;
  bool tower_json = false;
  auto *tower = app.add_subcommand("tower", "Level-lattice trajectory of a tower");
  tower->add_option("tower", tower_source, "Tower file or builtin:<name>")->required();
  tower->add_option("--trajectory", trajectory, "width, distributive, modular or decomposable");
  tower->add_option("--depth", depth, "Depth (builtin towers are built to it, files truncated)")
      ->check(CLI::PositiveNumber);
  tower->add_flag("--json", tower_json, "Print the trajectory as JSON");

  std::string suite, report_path;
  std::size_t max_order = 0;
  unsigned jobs = 1;
  auto *verify = app.add_subcommand("verify", "Run a verification suite (or all)");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--max-order", max_order, "Skip catalogue groups above this order");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", report_path, "Write the JSON report here instead of stdout");

  auto *catalogue = app.add_subcommand("catalogue", "List or validate catalogue entries");
  catalogue->require_subcommand(1);
  catalogue->add_subcommand("list", "List catalogue entries");
  std::string add_file;
  auto *cat_add = catalogue->add_subcommand("add", "Validate a catalogue file and list its entries");
  cat_add->add_option("file", add_file, "Catalogue file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    CataloguePtr cat = load_catalogue(catalogue_files);

    if (*lattice) {
      GroupPtr g = resolve(cat.get(), group_spec);
      proflat_lattice *l = nullptr;
      check(proflat_lattice_compute(g.get(), &l));
      LatticePtr lp(l, proflat_lattice_free);
      char *out = nullptr;
      check(proflat_lattice_emit(lp.get(), emit.c_str(), &out));
      std::cout << take(out);
      return 0;
    }
    if (*check_cmd) {
      GroupPtr g = resolve(cat.get(), group_spec);
      char *out = nullptr;
      check(proflat_check(g.get(), predicate.c_str(), &out));
      const auto j = nlohmann::ordered_json::parse(take(out));
      std::cout << j["value"].dump() << "\n";
      if (!j["detail"].is_null()) std::cout << j["detail"].dump(2) << "\n";
      return 0;
    }
    if (*tower) {
      TowerPtr t = open_tower(tower_source, depth);
      char *text = nullptr, *json = nullptr;
      check(proflat_tower_trajectory(t.get(), trajectory.c_str(), &text, &json));
      const std::string text_s = take(text), json_s = take(json);
      std::cout << (tower_json ? json_s : text_s) << "\n";
      return 0;
    }
    if (*verify) {
      char *out = nullptr;
      int all_passed = 0;
      check(proflat_verify(cat.get(), suite.c_str(), max_order, jobs, &out, &all_passed));
      const std::string report = take(out);
      if (report_path.empty()) {
        std::cout << report;
      } else {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) throw CliError{PROFLAT_ERR_INVALID_ARGUMENT, "cannot write " + report_path};
        f << report;
        const auto j = nlohmann::ordered_json::parse(report);
        const auto &s = j["summary"];
        std::cout << suite << ": " << s["total"] << " checks, " << s["passed"] << " passed, "
                  << s["failed"] << " failed\n";
      }
      return all_passed ? 0 : kExitFailed;
    }
    if (*catalogue) {
      if (*cat_add) {
        char *before = nullptr;
        check(proflat_catalogue_list(cat.get(), &before));
        const std::string before_s = take(before);
        std::size_t added = 0;
        check(proflat_catalogue_add_file(cat.get(), add_file.c_str(), &added));
        char *after = nullptr;
        check(proflat_catalogue_list(cat.get(), &after));
        // New entries are appended, so the listing only grows at the end.
        std::cout << take(after).substr(before_s.size());
        std::cout << added << " group(s) validated\n";
        return 0;
      }
      char *out = nullptr;
      check(proflat_catalogue_list(cat.get(), &out));
      std::cout << take(out);
      return 0;
    }
  } catch (const CliError &e) {
    std::cerr << "error (" << proflat_status_name(e.status) << "): " << e.message << "\n";
    return kExitError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
