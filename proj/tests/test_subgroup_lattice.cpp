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

#include <doctest.h>

#include "oracles.hpp"
#include "proflat/constructors.hpp"
#include "proflat/errors.hpp"
#include "proflat/subgroup_lattice.hpp"

using namespace proflat;

namespace {

oracle::PermSet as_set(const Subgroup &h) {
  oracle::PermSet s;
  for (Elem e : h.elements()) s.insert(h.parent()->element(e));
  return s;
}

} // namespace

TEST_CASE("subgroup counts") {
  CHECK(enumerate_subgroups(symmetric(3)).size() == 6);
  CHECK(enumerate_subgroups(cyclic(6)).size() == 4);
  CHECK(enumerate_subgroups(quaternion8()).size() == 6);
  CHECK(enumerate_subgroups(symmetric(4)).size() == 30);
  CHECK(enumerate_subgroups(alternating(5)).size() == 59);
  CHECK(enumerate_subgroups(elementary_abelian(2, 4)).size() == 67);
  CHECK(enumerate_subgroups(cyclic(1)).size() == 1);
}

TEST_CASE("enumeration matches the subset-closure oracle") {
  for (auto g : {symmetric(3), symmetric(4), alternating(4), quaternion8(), dihedral(8),
                 dihedral(12), elementary_abelian(2, 3), semidirect_cyclic(4, cyclic(3), -1),
                 direct_product(cyclic(4), cyclic(2)), cyclic(24)}) {
    const auto view = enumerate_subgroups(g);
    const auto ref = oracle::subgroups_by_subsets(*g, 3);
    std::set<oracle::PermSet> got;
    for (const auto &h : view.subgroups()) got.insert(as_set(h));
    CHECK_MESSAGE(got == ref, g->name());
  }
}

TEST_CASE("canonical order and lattice structure") {
  const auto view = enumerate_subgroups(symmetric(4));
  const Lattice &l = view.lattice();
  CHECK(view.subgroup(0).is_trivial());
  CHECK(view.subgroup(l.top()).is_whole());
  for (Node v = 1; v < view.size(); ++v) CHECK(view.subgroup(v - 1) < view.subgroup(v));
  for (Node a = 0; a < view.size(); ++a)
    for (Node b = 0; b < view.size(); ++b) {
      CHECK(view.subgroup(l.meet(a, b)) == intersection(view.subgroup(a), view.subgroup(b)));
      CHECK(view.subgroup(l.join(a, b)) == join(view.subgroup(a), view.subgroup(b)));
      CHECK(l.leq(a, b) == view.subgroup(a).is_subgroup_of(view.subgroup(b)));
    }
  for (Node v = 0; v < view.size(); ++v) {
    const auto &a = view.annotations()[v];
    CHECK(a.order == view.subgroup(v).order());
    CHECK(a.normal == is_normal(view.subgroup(v)));
    CHECK(view.node_of(view.subgroup(v)) == v);
  }
  CHECK(view.normal_nodes().size() == 4);
  CHECK(view.maximal_nodes().size() == 8);
  CHECK_THROWS_AS(view.node_of(trivial_subgroup(symmetric(3))), DomainError);
}

TEST_CASE("frattini") {
  CHECK(frattini(cyclic(4)).order() == 2);
  CHECK(frattini(symmetric(3)).is_trivial());
  CHECK(frattini(quaternion8()).order() == 2);
  CHECK(frattini(direct_product(cyclic(4), cyclic(3))).order() == 2);
}

TEST_CASE("open subgroup test on finite groups") {
  const auto s3 = enumerate_subgroups(symmetric(3));
  for (Node v = 0; v < s3.size(); ++v) CHECK(open_subgroup_test_finite(s3, v));
  const auto c8 = enumerate_subgroups(cyclic(8));
  CHECK(open_subgroup_test_finite(c8, 0));
  CHECK(open_subgroup_test_finite(c8, c8.lattice().top()));
  CHECK_THROWS_AS(open_subgroup_test_finite(c8, 99), DomainError);
}

TEST_CASE("node bound") {
  const auto saved = max_lattice_nodes();
  set_max_lattice_nodes(10);
  CHECK_THROWS_AS(enumerate_subgroups(symmetric(4)), ResourceError);
  set_max_lattice_nodes(saved);
}

TEST_CASE("annotations json") {
  const auto s = annotations_json(enumerate_subgroups(cyclic(4)));
  CHECK(s.find("\"node\":2") != std::string::npos);
  CHECK(s.find("\"cyclic\":true") != std::string::npos);
}
