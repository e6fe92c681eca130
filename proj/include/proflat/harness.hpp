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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "proflat/classifiers.hpp"
#include "proflat/group.hpp"
#include "proflat/subgroup_lattice.hpp"
#include "proflat/tower.hpp"

namespace proflat {

struct CatalogueEntry {
  enum class Source { builtin, file };
  std::string name;
  Source source = Source::builtin;
  GroupPtr group;
};

/// Named groups in insertion order; names are unique.
class Catalogue {
public:
  /// Throws DomainError on a duplicate name.
  void add(CatalogueEntry entry);
  const std::vector<CatalogueEntry> &entries() const noexcept { return entries_; }
  const CatalogueEntry *find(std::string_view name) const;

private:
  std::vector<CatalogueEntry> entries_;
};

/// C_n (n <= 64), elementary abelian groups up to order 81, dihedral groups
/// of order 6..32, Q8, M16, S3, S4, A4, A5, C4:C3, S3xC5, C4xC3 and the
/// remaining non-abelian groups of order pq <= 64.
Catalogue builtin_catalogue();
/// Parses catalogue records and appends them; returns the number added.
std::size_t add_catalogue_text(Catalogue &c, std::string_view text);
/// A catalogue name, or an inline record ("name X; degree n; gens ...").
GroupPtr resolve_group(const Catalogue &c, std::string_view spec);

struct CheckResult {
  std::string check_id;
  std::string instance;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json observed;
  bool pass = false;
  nlohmann::ordered_json witness; ///< null when absent
};
nlohmann::ordered_json to_json(const CheckResult &r);
CheckResult make_check(std::string check_id, std::string instance, nlohmann::ordered_json expected,
                       nlohmann::ordered_json observed, nlohmann::ordered_json witness = nullptr);

struct VerifyOptions {
  /// Skip catalogue groups above this order (0: no limit beyond the suite's own).
  std::size_t max_order = 0;
  unsigned jobs = 1;
  std::size_t tower_depth = 4;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> results;
  std::size_t passed() const;
  std::size_t failed() const { return results.size() - passed(); }
};

/// Suites in the order `all` runs them.
std::vector<std::string> suite_names();
/// Runs one suite, or every suite for "all". Throws DomainError for an
/// unknown suite name.
SuiteReport run_suite(std::string_view suite, const Catalogue &catalogue,
                      const VerifyOptions &options = {});
/// {schema: 1, suite, results, summary: {total, passed, failed}}
nlohmann::ordered_json report_json(const SuiteReport &report);

// Per-instance checks, exposed for direct use.
std::vector<CheckResult> check_distributive_iff_cyclic(const std::string &name,
                                                       const SubgroupLatticeView &view);
std::vector<CheckResult> check_modular_iff_structure(const std::string &name,
                                                     const SubgroupLatticeView &view);
std::vector<CheckResult> check_modular_element_theorem(const std::string &name,
                                                       const SubgroupLatticeView &view);
std::vector<CheckResult> check_decomposability(const std::string &name,
                                               const SubgroupLatticeView &view);
std::vector<CheckResult> check_perfect_and_nilpotence(const std::string &name,
                                                      const SubgroupLatticeView &view);
std::vector<CheckResult> check_procyclic_tower(const Tower &t);
std::vector<CheckResult> check_width_tower(const Tower &t);

nlohmann::ordered_json subgroup_json(const SubgroupLatticeView &view, Node v);
nlohmann::ordered_json certificate_json(const SubgroupLatticeView &view,
                                        const ModularElementCertificate &c);

/// Predicates for the `check` command: distributive, modular, cyclic,
/// abelian, nilpotent, perfect, p_group, pstar_group, hamiltonian,
/// modular_p_group, iwasawa, coprime_decomposition, decomposable, width,
/// frattini. Returns {predicate, group, value, detail}. Throws DomainError
/// for an unknown predicate.
nlohmann::ordered_json check_predicate(std::string_view predicate, const GroupPtr &g);
std::vector<std::string> predicate_names();

/// {group, order, nodes: [{node, order, normal, cyclic, abelian, gens}], covers: [[lower, upper]]}
nlohmann::ordered_json lattice_json(const SubgroupLatticeView &view);

} // namespace proflat
