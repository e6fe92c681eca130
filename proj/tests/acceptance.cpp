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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "proflat/classifiers.hpp"
#include "proflat/constructors.hpp"
#include "proflat/harness.hpp"
#include "proflat/lattice.hpp"
#include "proflat/proflat.h"
#include "proflat/subgroup_lattice.hpp"
#include "proflat/tower.hpp"

using namespace proflat;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string &why) {
    if (ok) note = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char *title, double budget_s, const std::function<void(Outcome &)> &body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception &e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > budget_s) out.fail("over time budget");
  if (!out.ok) ++failures;
  std::printf("criterion %2d: %s  %s  (%.2f s, budget %.0f s)%s%s\n", id, out.ok ? "PASS" : "FAIL",
              title, secs, budget_s, out.note.empty() ? "" : "  ", out.note.c_str());
  std::fflush(stdout);
}

void expect_clean(Outcome &o, const SuiteReport &r) {
  if (r.results.empty()) o.fail(r.suite + ": no results");
  for (const auto &c : r.results)
    if (!c.pass) {
      o.fail(r.suite + ": " + c.check_id + " failed on " + c.instance);
      return;
    }
}

const CheckResult *find_check(const SuiteReport &r, const std::string &id, const std::string &inst) {
  for (const auto &c : r.results)
    if (c.check_id == id && c.instance == inst) return &c;
  return nullptr;
}

std::vector<Lattice> level_lattices(const Tower &t) {
  std::vector<Lattice> out;
  for (std::size_t k = 1; k <= t.depth(); ++k) out.push_back(enumerate_subgroups(t.level(k)).lattice());
  return out;
}

oracle::PermSet as_set(const Subgroup &h) {
  oracle::PermSet s;
  for (Elem e : h.elements()) s.insert(h.parent()->element(e));
  return s;
}

} // namespace

int main() {
  const Catalogue corpus = builtin_catalogue();

  criterion(1, "distributive lattice iff cyclic, full corpus", 30, [&](Outcome &o) {
    const auto r = run_suite("distributive_iff_cyclic", corpus);
    expect_clean(o, r);
    if (r.results.size() != corpus.entries().size()) o.fail("corpus not fully covered");
    for (const char *g : {"C12", "C64", "C1"})
      if (auto c = find_check(r, "distributive_iff_cyclic", g); !c || c->observed != true)
        o.fail(std::string(g) + " should be distributive");
    for (const char *g : {"C2^2", "S3", "Q8"})
      if (auto c = find_check(r, "distributive_iff_cyclic", g); !c || c->observed != false)
        o.fail(std::string(g) + " should not be distributive");
  });

  criterion(2, "procyclic iff levelwise distributive, bundled towers at depth 4", 10, [&](Outcome &o) {
    const auto r = run_suite("procyclic_towers", corpus);
    expect_clean(o, r);
    if (r.results.size() != builtin_tower_names().size()) o.fail("missing towers");
    for (const auto &c : r.results)
      if (c.witness["trajectory"]["truncated"] != false || c.witness["trajectory"]["values"].size() != 4)
        o.fail(c.instance + " not evaluated to depth 4");
  });

  criterion(3, "modular lattice iff Iwasawa structure, order <= 128", 120, [&](Outcome &o) {
    VerifyOptions opt;
    opt.max_order = 128;
    const auto r = run_suite("modular_iff_iwasawa", corpus, opt);
    expect_clean(o, r);
    for (const char *g : {"Q8", "M16", "S3", "S3xC5"})
      if (auto c = find_check(r, "modular_iff_structure", g); !c || c->observed != true)
        o.fail(std::string(g) + " should be modular");
    for (const char *g : {"D8", "S4", "A4", "A5"})
      if (auto c = find_check(r, "modular_iff_structure", g); !c || c->observed != false)
        o.fail(std::string(g) + " should not be modular");
    // Independent cross-check of the lattice side on the smaller lattices.
    for (const auto &e : corpus.entries()) {
      if (e.group->order() > 24) continue;
      const auto view = enumerate_subgroups(e.group);
      if (oracle::brute_modular(view.lattice()) != check_modular(view.lattice()).holds)
        o.fail("modularity oracle disagrees on " + e.name);
    }
  });

  criterion(4, "modular element: definition iff structure iff quotients, order <= 60", 180,
            [&](Outcome &o) {
    VerifyOptions opt;
    opt.max_order = 60;
    const auto r = run_suite("modular_element", corpus, opt);
    expect_clean(o, r);
    std::size_t certified = 0;
    for (const auto &c : r.results)
      if (c.check_id == "modular_element_def_iff_structure" && c.observed == true) {
        if (!c.witness.contains("certificate")) o.fail("missing certificate for " + c.instance);
        else ++certified;
      }
    if (certified == 0) o.fail("no certificates serialized");
  });

  criterion(5, "lattice decomposable iff coprime decomposable, and on G/Phi(G)", 60, [&](Outcome &o) {
    const auto r = run_suite("decomposability", corpus);
    expect_clean(o, r);
    if (r.results.size() != 3 * corpus.entries().size()) o.fail("corpus not fully covered");
    if (auto c = find_check(r, "lattice_iff_coprime_decomposable", "C6"); !c || c->observed != true)
      o.fail("C6 should decompose");
    if (auto c = find_check(r, "lattice_iff_coprime_decomposable", "S3"); !c || c->observed != false)
      o.fail("S3 should not decompose");
  });

  criterion(6, "width trajectories: C6^k grows, C5^k x C2 and Zp constant", 30, [&](Outcome &o) {
    const auto c6 = builtin_tower("c6k", 4);
    const auto r = level_lattice_trajectory(*c6, TrajectoryPredicate::width);
    if (r.values != std::vector<std::int64_t>{2, 3, 4, 5}) o.fail("C6^k: " + format_trajectory(r));
    if (r.verdict != Verdict::monotone_unbounded) o.fail("C6^k verdict");
    std::vector<std::int64_t> brute;
    for (const auto &l : level_lattices(*c6)) brute.push_back(static_cast<std::int64_t>(oracle::brute_width(l)));
    if (brute != r.values) o.fail("C6^k brute-force widths disagree");
    for (const char *name : {"z5xc2", "zp2", "zp3"}) {
      const auto t = builtin_tower(name, 4);
      const auto tr = level_lattice_trajectory(*t, TrajectoryPredicate::width);
      if (tr.values.size() != 4 || tr.verdict != Verdict::stabilized)
        o.fail(std::string(name) + ": " + format_trajectory(tr));
      std::vector<std::int64_t> b;
      for (const auto &l : level_lattices(*t)) b.push_back(static_cast<std::int64_t>(oracle::brute_width(l)));
      if (b != tr.values) o.fail(std::string(name) + " brute-force widths disagree");
    }
  });

  criterion(7, "width and enumeration against brute-force oracles", 60, [&](Outcome &o) {
    std::size_t widths = 0, enumerations = 0;
    for (const auto &e : corpus.entries()) {
      const auto view = enumerate_subgroups(e.group);
      if (view.size() <= 20) {
        ++widths;
        const auto w = width(view.lattice());
        if (w.width != oracle::brute_width(view.lattice())) o.fail("width mismatch on " + e.name);
        if (!is_antichain(view.lattice(), w.antichain) || w.antichain.size() != w.width)
          o.fail("bad antichain on " + e.name);
      }
      if (e.group->order() <= 24) {
        ++enumerations;
        std::set<oracle::PermSet> got;
        for (const auto &h : view.subgroups()) got.insert(as_set(h));
        if (got.size() != view.size()) o.fail("duplicate subgroups on " + e.name);
        if (got != oracle::subgroups_by_subsets(*e.group, 4)) o.fail("enumeration mismatch on " + e.name);
      }
    }
    if (widths == 0 || enumerations == 0) o.fail("oracles not exercised");
  });

  criterion(8, "L(S3) and L(C3 x C3) have 24 isomorphisms", 1, [&](Outcome &o) {
    const auto a = enumerate_subgroups(symmetric(3));
    const auto b = enumerate_subgroups(elementary_abelian(3, 2));
    const auto isos = find_isomorphisms(a.lattice(), b.lattice(), 1000);
    // Both lattices are M4: any bijection of the four atoms extends uniquely.
    if (isos.size() != oracle::factorial(4)) o.fail("found " + std::to_string(isos.size()));
  });

  criterion(9, "modular elements of L(A5) are exactly {1, A5}", 30, [&](Outcome &o) {
    const auto view = enumerate_subgroups(alternating(5));
    if (view.size() != 59) o.fail("A5 has " + std::to_string(view.size()) + " subgroups");
    const auto flags = modular_elements(view.lattice());
    std::vector<Node> modular;
    for (Node v = 0; v < view.size(); ++v)
      if (flags[v]) modular.push_back(v);
    if (modular != std::vector<Node>{0, view.lattice().top()}) o.fail("unexpected modular elements");
    if (view.normal_nodes() != modular) o.fail("normal subgroups differ");
  });

  criterion(10, "two verify-all runs give byte-identical reports", 120, [&](Outcome &o) {
    proflat_catalogue *c = nullptr;
    if (proflat_catalogue_builtin(&c) != PROFLAT_OK) {
      o.fail(proflat_last_error());
      return;
    }
    char *first = nullptr, *second = nullptr;
    int ok1 = 0, ok2 = 0;
    if (proflat_verify(c, "all", 0, 1, &first, &ok1) != PROFLAT_OK ||
        proflat_verify(c, "all", 0, 4, &second, &ok2) != PROFLAT_OK)
      o.fail(proflat_last_error());
    else if (std::strcmp(first, second) != 0)
      o.fail("reports differ");
    else if (!ok1 || !ok2)
      o.fail("verify all reported failures");
    proflat_string_free(first);
    proflat_string_free(second);
    proflat_catalogue_free(c);
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
