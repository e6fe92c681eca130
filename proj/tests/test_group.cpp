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
#include "proflat/catalogue_format.hpp"
#include "proflat/constructors.hpp"
#include "proflat/errors.hpp"
#include "proflat/group.hpp"
#include "proflat/subgroup_lattice.hpp"

using namespace proflat;

namespace {

Subgroup generated(const GroupPtr &g, std::initializer_list<const char *> cycles) {
  std::vector<Elem> seed;
  for (const char *c : cycles) seed.push_back(*g->index_of(Permutation::from_cycles(c, g->degree())));
  return closure(g, seed);
}

} // namespace

TEST_CASE("permutation parsing and printing") {
  auto p = Permutation::from_cycles("(1 2 3)(4 5)", 5);
  CHECK(p.to_cycles() == "(1 2 3)(4 5)");
  CHECK(Permutation::identity(3).to_cycles() == "()");
  CHECK((p * p.inverse()).is_identity());
  // (a * b)(x) = b(a(x))
  auto a = Permutation::from_cycles("(1 2)", 3), b = Permutation::from_cycles("(2 3)", 3);
  CHECK((a * b)(0) == b(a(0)));
  CHECK_THROWS_AS(Permutation::from_cycles("(1 1)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
}

TEST_CASE("group orders of the constructors") {
  CHECK(cyclic(12)->order() == 12);
  CHECK(cyclic(1)->order() == 1);
  CHECK(elementary_abelian(3, 2)->order() == 9);
  CHECK(dihedral(8)->order() == 8);
  CHECK(quaternion8()->order() == 8);
  CHECK(symmetric(4)->order() == 24);
  CHECK(alternating(5)->order() == 60);
  CHECK(direct_product(cyclic(2), cyclic(3))->order() == 6);
}

TEST_CASE("canonical element order") {
  auto g = symmetric(3);
  CHECK(g->element(FiniteGroup::identity()).is_identity());
  for (Elem e = 1; e < g->order(); ++e) CHECK(g->element(e - 1) < g->element(e));
  for (Elem a = 0; a < g->order(); ++a) {
    CHECK(g->mul(a, g->inv(a)) == 0);
    for (Elem b = 0; b < g->order(); ++b)
      CHECK(g->element(g->mul(a, b)) == g->element(a) * g->element(b));
  }
}

TEST_CASE("order bound") {
  const auto saved = max_group_order();
  set_max_group_order(100);
  CHECK_THROWS_AS(symmetric(5), ResourceError);
  set_max_group_order(saved);
  CHECK(symmetric(5)->order() == 120);
}

TEST_CASE("closure") {
  auto s3 = symmetric(3);
  CHECK(generated(s3, {"(1 2)"}).order() == 2);
  CHECK(closure(s3, std::vector<Elem>{}).is_trivial());
  auto c6 = cyclic(6);
  for (Elem g = 0; g < c6->order(); ++g)
    if (c6->element_order(g) == 6) CHECK(closure(c6, std::vector<Elem>{g}).is_whole());
  // Against the multiply-until-stable oracle.
  auto s4 = symmetric(4);
  auto h = generated(s4, {"(1 2 3)", "(1 2)(3 4)"});
  auto ref = oracle::close({Permutation::from_cycles("(1 2 3)", 4),
                            Permutation::from_cycles("(1 2)(3 4)", 4)},
                           4);
  CHECK(h.order() == ref.size());
  for (Elem e : h.elements()) CHECK(ref.count(s4->element(e)) == 1);
  CHECK_THROWS_AS(closure(s3, std::vector<Elem>{99}), DomainError);
}

TEST_CASE("normal core and closure") {
  auto s3 = symmetric(3);
  auto t = generated(s3, {"(1 2)"});
  CHECK(!is_normal(t));
  CHECK(normal_core(t).is_trivial());
  CHECK(normal_closure(t).is_whole());
  auto s4 = symmetric(4);
  auto a4 = generated(s4, {"(1 2 3)", "(2 3 4)"});
  CHECK(a4.order() == 12);
  CHECK(is_normal(a4));
  CHECK(normal_core(a4) == a4);
  CHECK(normalizer(t) == t);
}

TEST_CASE("quotients") {
  auto c4 = cyclic(4);
  auto c2 = closure(c4, std::vector<Elem>{c4->pow(*c4->index_of(c4->generators()[0]), 2)});
  CHECK(quotient(c2).group->order() == 2);

  auto s3 = symmetric(3);
  auto a3 = generated(s3, {"(1 2 3)"});
  auto q = quotient(a3);
  CHECK(q.group->order() == 2);
  CHECK(q.projection.kernel() == a3);
  CHECK(q.projection.is_surjective());

  auto q8 = quaternion8();
  auto z = commutator_subgroup(q8);
  CHECK(z.order() == 2);
  auto v = quotient(z).group;
  CHECK(v->order() == 4);
  for (Elem e = 1; e < v->order(); ++e) CHECK(v->element_order(e) == 2);

  CHECK_THROWS_AS(quotient(generated(s3, {"(1 2)"})), PreconditionError);
}

TEST_CASE("homomorphisms") {
  auto c6 = cyclic(6), c3 = cyclic(3);
  auto h = Homomorphism::from_generator_images(c6, c3, {*c3->index_of(c3->generators()[0])});
  CHECK(h.is_surjective());
  CHECK(h.kernel().order() == 2);
  CHECK(h.preimage(trivial_subgroup(c3)) == h.kernel());
  auto c4 = cyclic(4);
  CHECK_THROWS_AS(
      Homomorphism::from_generator_images(c3, c4, {*c4->index_of(c4->generators()[0])}),
      ConstructionError);
}

TEST_CASE("sylow, frattini, pi, perfect, nilpotent") {
  auto s4 = symmetric(4);
  CHECK(sylow(s4, 2).order() == 8);
  CHECK(sylow(s4, 3).order() == 3);
  CHECK_THROWS_AS(sylow(s4, 5), DomainError);
  CHECK(frattini(cyclic(4)).order() == 2);
  CHECK(frattini(symmetric(3)).is_trivial());
  CHECK(pi(*direct_product(symmetric(3), cyclic(5))) == std::vector<unsigned>{2, 3, 5});
  CHECK(is_perfect(alternating(5)));
  CHECK(!is_perfect(symmetric(4)));
  CHECK(is_nilpotent(quaternion8()));
  CHECK(is_nilpotent(cyclic(12)));
  CHECK(!is_nilpotent(symmetric(3)));
  CHECK(commutator_subgroup(symmetric(4)).order() == 12);
}

TEST_CASE("permutability") {
  auto s3 = symmetric(3);
  CHECK(!permutes(generated(s3, {"(1 2)"}), generated(s3, {"(1 3)"})));
  CHECK(permutes(generated(s3, {"(1 2)"}), generated(s3, {"(1 2 3)"})));
  auto q8 = quaternion8();
  auto view = enumerate_subgroups(q8);
  for (const auto &h : view.subgroups())
    for (const auto &k : view.subgroups()) CHECK(permutes(h, k));
  CHECK_THROWS_AS(permutes(trivial_subgroup(s3), trivial_subgroup(q8)), DomainError);
}

TEST_CASE("semidirect constructor") {
  auto s3 = semidirect_cyclic(2, cyclic(3), 2);
  CHECK(s3->order() == 6);
  CHECK(!is_abelian(*s3));
  auto m16 = semidirect_cyclic(2, cyclic(8), 5);
  CHECK(m16->order() == 16);
  CHECK(!is_abelian(*m16));
  std::size_t max_order = 0;
  for (Elem e = 0; e < m16->order(); ++e) max_order = std::max(max_order, m16->element_order(e));
  CHECK(max_order == 8);
  CHECK_THROWS_AS(semidirect_cyclic(2, cyclic(7), 3), ConstructionError);
  CHECK_THROWS_AS(semidirect_cyclic(2, cyclic(6), 2), ConstructionError);
  CHECK_THROWS_AS(semidirect_cyclic(2, symmetric(3), 1), ConstructionError);
}

TEST_CASE("catalogue records") {
  auto r = parse_group_record("name S3; degree 3; gens (1 2); (1 2 3)", 7);
  CHECK(r.name == "S3");
  CHECK(r.generators.size() == 2);
  CHECK(build_group(r)->order() == 6);
  auto back = parse_group_record(format_group_record(*build_group(r)));
  CHECK(build_group(back)->order() == 6);

  try {
    parse_catalogue("name A; degree 2; gens (1 2)\n# comment\n\nname B; degree x; gens ()\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_group_record("name X; gens (1 2)", 1), ParseError);
  CHECK_THROWS_AS(parse_group_record("name X; degree 2; gens (1 3)", 1), ParseError);
}
