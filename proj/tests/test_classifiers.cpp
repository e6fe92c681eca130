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

#include "proflat/classifiers.hpp"
#include "proflat/constructors.hpp"
#include "proflat/errors.hpp"
#include "proflat/subgroup_lattice.hpp"

using namespace proflat;

namespace {

Node node_generated_by(const SubgroupLatticeView &view, const char *cycles) {
  const auto &g = view.group();
  Elem e = *g->index_of(Permutation::from_cycles(cycles, g->degree()));
  return view.node_of(closure(g, std::vector<Elem>{e}));
}

std::vector<std::size_t> factor_orders(const std::vector<Subgroup> &f) {
  std::vector<std::size_t> out;
  for (const auto &h : f) out.push_back(h.order());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("is_cyclic") {
  CHECK(is_cyclic(*cyclic(12)));
  CHECK(!is_cyclic(*elementary_abelian(2, 2)));
  CHECK(!is_cyclic(*symmetric(3)));
  CHECK(is_cyclic(*direct_product(cyclic(2), cyclic(3))));
}

TEST_CASE("P-groups") {
  auto e9 = is_P_group(elementary_abelian(3, 2));
  REQUIRE(e9.has_value());
  CHECK(e9->kind == PGroupCertificate::Kind::elementary_abelian);
  CHECK(e9->p == 3);
  auto s3 = is_P_group(symmetric(3));
  REQUIRE(s3.has_value());
  CHECK(s3->kind == PGroupCertificate::Kind::semidirect);
  CHECK(s3->p == 3);
  CHECK(s3->q == 2);
  CHECK(s3->exponent == 2);
  CHECK(!is_P_group(cyclic(4)).has_value());
  CHECK(!is_P_group(cyclic(3)).has_value());
  CHECK(!is_P_group(alternating(4)).has_value());
  CHECK(is_P_group(semidirect_cyclic(3, cyclic(7), 2)).has_value());
}

TEST_CASE("P*-groups") {
  auto s3 = is_Pstar_group(symmetric(3));
  REQUIRE(s3.has_value());
  CHECK(s3->a.order() == 3);
  CHECK(s3->t_order == 2);
  auto c4c3 = is_Pstar_group(semidirect_cyclic(4, cyclic(3), -1));
  REQUIRE(c4c3.has_value());
  CHECK(c4c3->t_order == 4);
  CHECK(c4c3->automorphism_order == 2);
  CHECK(!is_Pstar_group(alternating(4)).has_value());
  CHECK(!is_Pstar_group(cyclic(6)).has_value());
}

TEST_CASE("Iwasawa triples and Hamiltonian groups") {
  auto m16 = find_iwasawa_triple(modular_group16());
  REQUIRE(m16.has_value());
  CHECK(m16->s == 2);
  CHECK(m16->p == 2);
  const auto &g = *m16->a.parent();
  for (Elem a : m16->a.elements()) CHECK(g.conj(a, m16->b) == g.pow(a, 5));

  CHECK(is_hamiltonian(quaternion8()));
  CHECK(is_modular_p_group_structural(quaternion8()));
  CHECK(!is_hamiltonian(dihedral(8)));
  CHECK(!find_iwasawa_triple(dihedral(8)).has_value());
  CHECK(!is_modular_p_group_structural(dihedral(8)));
  CHECK(is_modular_p_group_structural(cyclic(8)));
  CHECK_THROWS_AS(find_iwasawa_triple(symmetric(3)), DomainError);
  CHECK_THROWS_AS(is_modular_p_group_structural(cyclic(6)), DomainError);
}

TEST_CASE("coprime decomposition") {
  auto c6 = coprime_direct_decomposition(cyclic(6));
  REQUIRE(c6.has_value());
  CHECK(factor_orders(c6->factors) == std::vector<std::size_t>{2, 3});
  CHECK(!coprime_direct_decomposition(symmetric(3)).has_value());
  auto s3c5 = coprime_direct_decomposition(direct_product(symmetric(3), cyclic(5)));
  REQUIRE(s3c5.has_value());
  CHECK(factor_orders(s3c5->factors) == std::vector<std::size_t>{5, 6});
  CHECK(factor_orders(finest_coprime_factors(cyclic(30))) == std::vector<std::size_t>{2, 3, 5});
  CHECK(finest_coprime_factors(cyclic(1)).size() == 1);
}

TEST_CASE("structural modularity") {
  CHECK(modular_structure(quaternion8()).holds);
  CHECK(modular_structure(modular_group16()).holds);
  CHECK(modular_structure(symmetric(3)).holds);
  auto s3c5 = modular_structure(direct_product(symmetric(3), cyclic(5)));
  CHECK(s3c5.holds);
  CHECK(s3c5.factors.size() == 2);
  for (auto g : {dihedral(8), symmetric(4), alternating(4), alternating(5)})
    CHECK(!modular_structure(g).holds);
}

TEST_CASE("modular element structure") {
  const auto s3 = enumerate_subgroups(symmetric(3));
  const Node t = node_generated_by(s3, "(1 2)");
  auto r = modular_element_structure_check(s3, t);
  REQUIRE(r.holds);
  REQUIRE(r.certificate->pieces.size() == 1);
  CHECK(r.certificate->pieces[0].s == s3.lattice().top());
  CHECK(r.certificate->pieces[0].q == t);
  CHECK(s3.subgroup(r.certificate->core).is_trivial());
  CHECK(s3.subgroup(r.certificate->t).is_trivial());

  for (Node n : s3.normal_nodes()) {
    auto c = modular_element_structure_check(s3, n);
    REQUIRE(c.holds);
    CHECK(c.certificate->pieces.empty());
    CHECK(c.certificate->t == s3.lattice().top());
  }

  const auto s4 = enumerate_subgroups(symmetric(4));
  CHECK(!modular_element_structure_check(s4, node_generated_by(s4, "(1 2)")).holds);
}

TEST_CASE("modular element structure agrees with the lattice definition") {
  for (auto g : {symmetric(3), symmetric(4), alternating(4), dihedral(8), dihedral(10),
                 quaternion8(), semidirect_cyclic(4, cyclic(3), -1),
                 direct_product(symmetric(3), cyclic(5)), semidirect_cyclic(3, cyclic(7), 2)}) {
    const auto view = enumerate_subgroups(g);
    for (Node m = 0; m < view.size(); ++m)
      CHECK_MESSAGE(check_modular_element(view.lattice(), m).holds ==
                        modular_element_structure_check(view, m).holds,
                    g->name() << " node " << m);
  }
}

TEST_CASE("permutable subgroups") {
  const auto s3 = enumerate_subgroups(symmetric(3));
  CHECK(!is_permutable(s3, node_generated_by(s3, "(1 2)")));
  CHECK(is_permutable(s3, node_generated_by(s3, "(1 2 3)")));
  const auto q8 = enumerate_subgroups(quaternion8());
  for (Node v = 0; v < q8.size(); ++v) CHECK(is_permutable(q8, v));
}
