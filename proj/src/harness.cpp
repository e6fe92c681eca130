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

#include "proflat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>

#include "proflat/catalogue_format.hpp"
#include "proflat/constructors.hpp"
#include "proflat/errors.hpp"

namespace proflat {

using json = nlohmann::ordered_json;

// --- catalogue ---------------------------------------------------------------

void Catalogue::add(CatalogueEntry entry) {
  if (find(entry.name)) throw DomainError("duplicate catalogue name '" + entry.name + "'");
  entries_.push_back(std::move(entry));
}

const CatalogueEntry *Catalogue::find(std::string_view name) const {
  for (const auto &e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

Catalogue builtin_catalogue() {
  Catalogue c;
  auto add = [&](GroupPtr g) {
    c.add({g->name(), CatalogueEntry::Source::builtin, std::move(g)});
  };
  for (std::size_t n = 1; n <= 64; ++n) add(cyclic(n));
  const std::pair<unsigned, unsigned> elementary[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                      {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}};
  for (auto [p, k] : elementary) add(elementary_abelian(p, k));
  for (std::size_t n = 6; n <= 32; n += 2) add(dihedral(n));
  add(quaternion8());
  add(modular_group16());
  add(symmetric(3));
  add(symmetric(4));
  add(alternating(4));
  add(alternating(5));
  add(semidirect_cyclic(4, cyclic(3), -1, "C4:C3"));
  add(direct_product(symmetric(3), cyclic(5), "S3xC5"));
  add(direct_product(cyclic(4), cyclic(3), "C4xC3"));
  // Non-abelian groups of order pq (q | p - 1); the dihedral ones are above.
  const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (unsigned p : primes)
    for (unsigned q : primes) {
      if (q >= p || (p - 1) % q || p * q > 64) continue;
      if (q == 2 && 2 * p <= 32) continue;
      add(semidirect_cyclic(q, cyclic(p), power_root_of_unity(p, q),
                            "C" + std::to_string(p) + ":C" + std::to_string(q)));
    }
  return c;
}

std::size_t add_catalogue_text(Catalogue &c, std::string_view text) {
  std::size_t added = 0;
  for (const auto &record : parse_catalogue(text)) {
    GroupPtr g;
    try {
      g = build_group(record);
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(e.what(), record.line);
    }
    c.add({record.name, CatalogueEntry::Source::file, std::move(g)});
    ++added;
  }
  return added;
}

GroupPtr resolve_group(const Catalogue &c, std::string_view spec) {
  if (const auto *e = c.find(spec)) return e->group;
  if (spec.find(';') != std::string_view::npos) return build_group(parse_group_record(spec, 1));
  throw DomainError("unknown group '" + std::string(spec) + "'");
}

// --- results -------------------------------------------------------------------

json to_json(const CheckResult &r) {
  return json{{"check_id", r.check_id}, {"instance", r.instance}, {"expected", r.expected},
              {"observed", r.observed}, {"pass", r.pass},         {"witness", r.witness}};
}

CheckResult make_check(std::string check_id, std::string instance, json expected, json observed,
                       json witness) {
  CheckResult r;
  r.pass = expected == observed;
  r.check_id = std::move(check_id);
  r.instance = std::move(instance);
  r.expected = std::move(expected);
  r.observed = std::move(observed);
  r.witness = std::move(witness);
  return r;
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult &r) { return r.pass; }));
}

json report_json(const SuiteReport &report) {
  json results = json::array();
  for (const auto &r : report.results) results.push_back(to_json(r));
  return json{{"schema", 1},
              {"suite", report.suite},
              {"results", std::move(results)},
              {"summary",
               {{"total", report.results.size()},
                {"passed", report.passed()},
                {"failed", report.failed()}}}};
}

json subgroup_json(const SubgroupLatticeView &view, Node v) {
  const Subgroup &h = view.subgroup(v);
  json gens = json::array();
  for (Elem e : h.generators()) gens.push_back(view.group()->element(e).to_cycles());
  return json{{"node", v}, {"order", h.order()}, {"gens", std::move(gens)}};
}

namespace {

json triple_json(const SubgroupLatticeView &view, const Triple &t) {
  return json{{"x", subgroup_json(view, t.x)},
              {"y", subgroup_json(view, t.y)},
              {"z", subgroup_json(view, t.z)}};
}

json pentagon_json(const SubgroupLatticeView &view, const Pentagon &p) {
  return json{{"bottom", subgroup_json(view, p.bottom)}, {"low", subgroup_json(view, p.low)},
              {"high", subgroup_json(view, p.high)},     {"side", subgroup_json(view, p.side)},
              {"top", subgroup_json(view, p.top)}};
}

json diamond_json(const SubgroupLatticeView &view, const Diamond &d) {
  return json{{"bottom", subgroup_json(view, d.bottom)}, {"a", subgroup_json(view, d.a)},
              {"b", subgroup_json(view, d.b)},           {"c", subgroup_json(view, d.c)},
              {"top", subgroup_json(view, d.top)}};
}

json nodes_json(const SubgroupLatticeView &view, const std::vector<Node> &nodes) {
  json out = json::array();
  for (Node v : nodes) out.push_back(subgroup_json(view, v));
  return out;
}

std::string element_text(const FiniteGroup &g, Elem e) { return g.element(e).to_cycles(); }

std::size_t prime_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t p = 2; n > 1; ++p)
    while (n % p == 0) n /= p, ++c;
  return c;
}

std::vector<Node> sorted_nodes(const SubgroupLatticeView &view, const std::vector<Subgroup> &hs) {
  std::vector<Node> out;
  for (const auto &h : hs) out.push_back(view.node_of(h));
  std::sort(out.begin(), out.end());
  return out;
}

json modular_failure_json(const SubgroupLatticeView &view, const ModularElementCheck &c) {
  if (c.holds) return nullptr;
  return json{{"failed_condition", c.failed_condition}, {"triple", triple_json(view, *c.witness)}};
}

} // namespace

json certificate_json(const SubgroupLatticeView &view, const ModularElementCertificate &c) {
  json pieces = json::array();
  for (const auto &p : c.pieces)
    pieces.push_back(json{{"S", subgroup_json(view, p.s)},
                          {"Q", subgroup_json(view, p.q)},
                          {"p", p.p},
                          {"r", p.r}});
  return json{{"core", subgroup_json(view, c.core)},
              {"pieces", std::move(pieces)},
              {"T", subgroup_json(view, c.t)},
              {"M_cap_T", subgroup_json(view, c.m_cap_t)}};
}

// --- per-instance checks ---------------------------------------------------------

std::vector<CheckResult> check_distributive_iff_cyclic(const std::string &name,
                                                       const SubgroupLatticeView &view) {
  const auto dc = check_distributive(view.lattice());
  json witness = nullptr;
  if (!dc.holds) {
    witness = json{{"triple", triple_json(view, *dc.witness)}};
    if (auto d = find_diamond(view.lattice()))
      witness["diamond"] = diamond_json(view, *d);
    else if (auto p = find_pentagon(view.lattice()))
      witness["pentagon"] = pentagon_json(view, *p);
  }
  return {make_check("distributive_iff_cyclic", name, is_cyclic(*view.group()), dc.holds,
                     std::move(witness))};
}

std::vector<CheckResult> check_modular_iff_structure(const std::string &name,
                                                     const SubgroupLatticeView &view) {
  const GroupPtr &g = view.group();
  const auto mc = check_modular(view.lattice());
  const auto ms = modular_structure(g);
  std::vector<CheckResult> out;

  json factors = json::array();
  for (const auto &f : ms.factors) {
    json fj = subgroup_json(view, view.node_of(f.factor));
    fj["kind"] = to_string(f.kind);
    factors.push_back(std::move(fj));
  }
  json witness{{"factors", std::move(factors)}};
  if (!mc.holds) witness["pentagon"] = pentagon_json(view, *mc.pentagon);
  out.push_back(make_check("modular_iff_structure", name, ms.holds, mc.holds, std::move(witness)));

  if (p_group_prime(g->order())) {
    json w = nullptr;
    bool structural = is_abelian(*g);
    if (structural) {
      w = json{{"abelian", true}};
    } else if (is_hamiltonian(g)) {
      structural = true;
      w = json{{"hamiltonian", true}};
    } else if (auto t = find_iwasawa_triple(g)) {
      structural = true;
      w = json{{"A", subgroup_json(view, view.node_of(t->a))},
               {"b", element_text(*g, t->b)},
               {"s", t->s}};
    }
    out.push_back(
        make_check("modular_p_group_iff_iwasawa", name, structural, mc.holds, std::move(w)));
  }

  if (auto cert = is_P_group(g)) {
    const std::size_t n = prime_count(g->order());
    json expected{{"modular", true}, {"height", n}};
    json observed{{"modular", mc.holds}, {"height", view.lattice().height()}};
    json w{{"kind", cert->kind == PGroupCertificate::Kind::semidirect ? "semidirect"
                                                                       : "elementary_abelian"},
           {"p", cert->p},
           {"q", cert->q}};
    if (cert->kind == PGroupCertificate::Kind::semidirect) {
      const auto model = enumerate_subgroups(elementary_abelian(cert->p, static_cast<unsigned>(n)));
      if (view.size() <= 64 && model.size() <= 64) {
        expected["isomorphic_to_elementary_abelian"] = true;
        observed["isomorphic_to_elementary_abelian"] =
            !find_isomorphisms(view.lattice(), model.lattice(), 1).empty();
      }
      w["A"] = subgroup_json(view, view.node_of(cert->a));
      w["t"] = element_text(*g, cert->t);
      w["exponent"] = cert->exponent;
    }
    out.push_back(make_check("P_group_lattice", name, std::move(expected), std::move(observed),
                             std::move(w)));
  }
  return out;
}

std::vector<CheckResult> check_modular_element_theorem(const std::string &name,
                                                       const SubgroupLatticeView &view) {
  const Lattice &l = view.lattice();
  const std::size_t n = view.size();
  const auto flags = modular_elements(l);

  // Condition on quotients: MN/N modular in L(G/N) for every normal N.
  std::vector<bool> quotient_ok(n, true);
  std::vector<std::optional<Node>> quotient_fail(n);
  for (Node nn : view.normal_nodes()) {
    const Quotient q = quotient(view.subgroup(nn));
    const auto qview = enumerate_subgroups(q.group);
    const auto qflags = modular_elements(qview.lattice());
    for (Node m = 0; m < n; ++m) {
      if (!quotient_ok[m]) continue;
      const Node image = qview.node_of(q.projection.image(view.subgroup(m)));
      if (!qflags[image]) {
        quotient_ok[m] = false;
        quotient_fail[m] = nn;
      }
    }
  }

  std::vector<CheckResult> out;
  for (Node m = 0; m < n; ++m) {
    const std::string inst = name + " M=" + std::to_string(m);
    const bool def = flags[m];
    json def_witness = def ? json(nullptr) : modular_failure_json(view, check_modular_element(l, m));
    const auto s = modular_element_structure_check(view, m);
    json w{{"M", subgroup_json(view, m)}};
    if (s.holds)
      w["certificate"] = certificate_json(view, *s.certificate);
    if (!def) w["definition"] = def_witness;
    out.push_back(make_check("modular_element_def_iff_structure", inst, def, s.holds, std::move(w)));

    json qw{{"M", subgroup_json(view, m)}};
    if (quotient_fail[m]) qw["N"] = subgroup_json(view, *quotient_fail[m]);
    out.push_back(
        make_check("modular_element_def_iff_quotients", inst, def, quotient_ok[m], std::move(qw)));
  }
  return out;
}

std::vector<CheckResult> check_decomposability(const std::string &name,
                                               const SubgroupLatticeView &view) {
  const GroupPtr &g = view.group();
  const auto ld = direct_decompose(view.lattice());
  const auto coprime = finest_coprime_factors(g);
  const bool group_split = coprime.size() >= 2;
  std::vector<Node> lattice_tops =
      ld ? ld->factors : std::vector<Node>{static_cast<Node>(view.size() - 1)};
  std::sort(lattice_tops.begin(), lattice_tops.end());
  const auto group_tops = sorted_nodes(view, coprime);

  std::vector<CheckResult> out;
  out.push_back(make_check("lattice_iff_coprime_decomposable", name, group_split, ld.has_value(),
                           json{{"coprime_factors", nodes_json(view, group_tops)},
                                {"lattice_factors", nodes_json(view, lattice_tops)}}));
  out.push_back(make_check("factor_tops_match", name, group_tops, lattice_tops));

  const Subgroup phi = frattini(view);
  const Quotient q = quotient(phi);
  const auto qview = enumerate_subgroups(q.group);
  const bool quotient_split = direct_decompose(qview.lattice()).has_value();
  out.push_back(make_check("frattini_quotient_decomposable", name, ld.has_value(), quotient_split,
                           json{{"frattini", subgroup_json(view, view.node_of(phi))},
                                {"quotient_order", q.group->order()}}));
  return out;
}

std::vector<CheckResult> check_perfect_and_nilpotence(const std::string &name,
                                                      const SubgroupLatticeView &view) {
  const GroupPtr &g = view.group();
  const auto flags = modular_elements(view.lattice());
  const auto &ann = view.annotations();
  std::vector<CheckResult> out;

  std::vector<Node> modular;
  for (Node v = 0; v < view.size(); ++v)
    if (flags[v]) modular.push_back(v);

  if (is_perfect(g)) {
    std::vector<Node> normal = view.normal_nodes();
    bool ok = std::all_of(modular.begin(), modular.end(), [&](Node v) { return ann[v].normal; });
    out.push_back(make_check("perfect_modular_normal", name, true, ok,
                             json{{"modular", nodes_json(view, modular)},
                                  {"normal", nodes_json(view, normal)}}));
  }

  json nil_fail = nullptr;
  std::size_t nonnormal = 0;
  for (Node v : modular) {
    if (ann[v].normal) continue;
    ++nonnormal;
    const Subgroup &m = view.subgroup(v);
    const Quotient q = quotient(normal_core(m));
    if (!is_nilpotent(as_group(q.projection.image(m)).group)) {
      nil_fail = subgroup_json(view, v);
      break;
    }
  }
  out.push_back(make_check("modular_core_quotient_nilpotent", name, true, nil_fail.is_null(),
                           json{{"modular_subgroups", modular.size()},
                                {"non_normal", nonnormal},
                                {"failure", nil_fail}}));

  json sylow_fail = nullptr;
  std::size_t halls = 0;
  for (Node v : modular) {
    const Subgroup &m = view.subgroup(v);
    if (m.is_trivial() || std::gcd(m.order(), g->order() / m.order()) != 1) continue;
    const Embedded e = as_group(m);
    if (!is_nilpotent(e.group)) continue;
    ++halls;
    for (unsigned p : pi(*e.group)) {
      const Node s = view.node_of(e.inclusion.image(sylow(e.group, p)));
      if (!flags[s]) {
        sylow_fail = json{{"M", subgroup_json(view, v)}, {"sylow", subgroup_json(view, s)}};
        break;
      }
    }
    if (!sylow_fail.is_null()) break;
  }
  out.push_back(make_check("modular_hall_sylow_modular", name, true, sylow_fail.is_null(),
                           json{{"nilpotent_modular_hall_subgroups", halls},
                                {"failure", sylow_fail}}));
  return out;
}

namespace {

json trajectory_json(const TrajectoryReport &r) {
  return json{{"predicate", to_string(r.predicate)},
              {"values", r.values},
              {"verdict", to_string(r.verdict)},
              {"truncated", r.truncated},
              {"certified_depth", r.values.size()},
              {"text", format_trajectory(r)}};
}

} // namespace

std::vector<CheckResult> check_procyclic_tower(const Tower &t) {
  const auto r = level_lattice_trajectory(t, TrajectoryPredicate::distributive);
  const bool all = !r.truncated &&
                   std::all_of(r.values.begin(), r.values.end(), [](auto v) { return v != 0; });
  return {make_check("procyclic_iff_levelwise_distributive", t.name(), is_procyclic(t), all,
                     json{{"trajectory", trajectory_json(r)}})};
}

std::vector<CheckResult> check_width_tower(const Tower &t) {
  const auto r = level_lattice_trajectory(t, TrajectoryPredicate::width);
  json w{{"shape", to_string(t.shape().kind)}, {"trajectory", trajectory_json(r)}};
  if (t.shape().kind == LimitShape::Kind::structure3) w["p"] = t.shape().p;
  return {make_check("width_stabilized_iff_structure3", t.name(),
                     t.shape().kind == LimitShape::Kind::structure3,
                     r.verdict == Verdict::stabilized, std::move(w))};
}

// --- suites ------------------------------------------------------------------------

namespace {

using GroupCheck = std::vector<CheckResult> (*)(const std::string &, const SubgroupLatticeView &);
using TowerCheck = std::vector<CheckResult> (*)(const Tower &);

struct SuiteDef {
  const char *name;
  GroupCheck group_check;
  TowerCheck tower_check;
  std::size_t order_cap; // 0: none
};

const SuiteDef kSuites[] = {
    {"distributive_iff_cyclic", check_distributive_iff_cyclic, nullptr, 0},
    {"procyclic_towers", nullptr, check_procyclic_tower, 0},
    {"modular_iff_iwasawa", check_modular_iff_structure, nullptr, 128},
    {"modular_element", check_modular_element_theorem, nullptr, 60},
    {"decomposability", check_decomposability, nullptr, 0},
    {"width_theorem", nullptr, check_width_tower, 0},
    {"perfect_and_nilpotence", check_perfect_and_nilpotence, nullptr, 0},
};

bool within(std::size_t order, std::size_t cap) { return cap == 0 || order <= cap; }

void run_tasks(std::vector<std::function<void()>> &tasks, unsigned jobs) {
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < n; ++i) threads.emplace_back(worker);
  worker();
  for (auto &t : threads) t.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto &s : kSuites) out.emplace_back(s.name);
  return out;
}

SuiteReport run_suite(std::string_view suite, const Catalogue &catalogue,
                      const VerifyOptions &options) {
  std::vector<const SuiteDef *> selected;
  for (const auto &s : kSuites)
    if (suite == "all" || suite == s.name) selected.push_back(&s);
  if (selected.empty()) throw DomainError("unknown suite '" + std::string(suite) + "'");

  const auto &entries = catalogue.entries();
  const auto towers = builtin_tower_names();
  // results[suite][instance]
  std::vector<std::vector<std::vector<CheckResult>>> results(selected.size());
  for (std::size_t s = 0; s < selected.size(); ++s)
    results[s].resize(selected[s]->group_check ? entries.size() : towers.size());

  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto &e = entries[i];
    const std::size_t order = e.group->order();
    if (!within(order, options.max_order)) continue;
    std::vector<std::size_t> which;
    for (std::size_t s = 0; s < selected.size(); ++s)
      if (selected[s]->group_check && within(order, selected[s]->order_cap)) which.push_back(s);
    if (which.empty()) continue;
    tasks.emplace_back([&, i, which] {
      const auto view = enumerate_subgroups(entries[i].group);
      for (std::size_t s : which) results[s][i] = selected[s]->group_check(entries[i].name, view);
    });
  }
  for (std::size_t t = 0; t < towers.size(); ++t) {
    std::vector<std::size_t> which;
    for (std::size_t s = 0; s < selected.size(); ++s)
      if (selected[s]->tower_check) which.push_back(s);
    if (which.empty()) continue;
    tasks.emplace_back([&, t, which] {
      const auto tower = builtin_tower(towers[t], options.tower_depth);
      for (std::size_t s : which) results[s][t] = selected[s]->tower_check(*tower);
    });
  }
  run_tasks(tasks, options.jobs);

  SuiteReport report;
  report.suite = std::string(suite);
  for (auto &per_suite : results)
    for (auto &per_instance : per_suite)
      for (auto &r : per_instance) report.results.push_back(std::move(r));
  return report;
}

// --- single predicates -------------------------------------------------------------

std::vector<std::string> predicate_names() {
  return {"distributive", "modular",     "cyclic",          "abelian",
          "nilpotent",    "perfect",     "p_group",         "pstar_group",
          "hamiltonian",  "modular_p_group", "iwasawa",     "coprime_decomposition",
          "decomposable", "width",       "frattini"};
}

json check_predicate(std::string_view predicate, const GroupPtr &g) {
  json value = nullptr, detail = nullptr;
  std::optional<SubgroupLatticeView> view_storage;
  auto view = [&]() -> const SubgroupLatticeView & {
    if (!view_storage) view_storage = enumerate_subgroups(g);
    return *view_storage;
  };
  auto iwasawa_detail = [&](const IwasawaTriple &t) {
    return json{{"A", subgroup_json(view(), view().node_of(t.a))},
                {"b", element_text(*g, t.b)},
                {"s", t.s}};
  };

  if (predicate == "distributive") {
    const auto c = check_distributive(view().lattice());
    value = c.holds;
    if (!c.holds) detail = json{{"triple", triple_json(view(), *c.witness)}};
  } else if (predicate == "modular") {
    const auto c = check_modular(view().lattice());
    value = c.holds;
    if (!c.holds)
      detail = json{{"pentagon", pentagon_json(view(), *c.pentagon)},
                    {"triple", triple_json(view(), *c.witness)}};
  } else if (predicate == "cyclic") {
    value = is_cyclic(*g);
  } else if (predicate == "abelian") {
    value = is_abelian(*g);
  } else if (predicate == "nilpotent") {
    value = is_nilpotent(g);
  } else if (predicate == "perfect") {
    value = is_perfect(g);
  } else if (predicate == "p_group") {
    const auto c = is_P_group(g);
    value = c.has_value();
    if (c) {
      detail = json{{"kind", c->kind == PGroupCertificate::Kind::semidirect ? "semidirect"
                                                                            : "elementary_abelian"},
                    {"p", c->p},
                    {"q", c->q},
                    {"A", subgroup_json(view(), view().node_of(c->a))},
                    {"t", element_text(*g, c->t)},
                    {"exponent", c->exponent}};
    }
  } else if (predicate == "pstar_group") {
    const auto c = is_Pstar_group(g);
    value = c.has_value();
    if (c)
      detail = json{{"p", c->p},
                    {"q", c->q},
                    {"A", subgroup_json(view(), view().node_of(c->a))},
                    {"t", element_text(*g, c->t)},
                    {"t_order", c->t_order},
                    {"exponent", c->exponent},
                    {"automorphism_order", c->automorphism_order}};
  } else if (predicate == "hamiltonian") {
    value = is_hamiltonian(g);
  } else if (predicate == "modular_p_group") {
    value = is_modular_p_group_structural(g);
    if (!is_abelian(*g) && !is_hamiltonian(g))
      if (auto t = find_iwasawa_triple(g)) detail = iwasawa_detail(*t);
  } else if (predicate == "iwasawa") {
    const auto t = find_iwasawa_triple(g);
    value = t.has_value();
    if (t) detail = iwasawa_detail(*t);
  } else if (predicate == "coprime_decomposition") {
    const auto f = finest_coprime_factors(g);
    value = f.size() >= 2;
    detail = json{{"factors", nodes_json(view(), sorted_nodes(view(), f))}};
  } else if (predicate == "decomposable") {
    const auto d = direct_decompose(view().lattice());
    value = d.has_value();
    if (d) detail = json{{"factors", nodes_json(view(), d->factors)}};
  } else if (predicate == "width") {
    const auto w = width(view().lattice());
    value = w.width;
    detail = json{{"antichain", nodes_json(view(), w.antichain)}};
  } else if (predicate == "frattini") {
    const Subgroup phi = frattini(view());
    value = phi.order();
    detail = subgroup_json(view(), view().node_of(phi));
  } else {
    throw DomainError("unknown predicate '" + std::string(predicate) + "'");
  }
  return json{{"predicate", predicate}, {"group", g->name()}, {"value", value}, {"detail", detail}};
}

json lattice_json(const SubgroupLatticeView &view) {
  json nodes = json::array();
  for (Node v = 0; v < view.size(); ++v) {
    const auto &a = view.annotations()[v];
    json n = subgroup_json(view, v);
    n["normal"] = a.normal;
    n["cyclic"] = a.cyclic;
    n["abelian"] = a.abelian;
    nodes.push_back(std::move(n));
  }
  json covers = json::array();
  for (auto [lo, hi] : view.lattice().covers()) covers.push_back(json::array({lo, hi}));
  return json{{"group", view.group()->name()},
              {"order", view.group()->order()},
              {"nodes", std::move(nodes)},
              {"covers", std::move(covers)}};
}

} // namespace proflat
