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
#include "proflat/tower.hpp"

using namespace proflat;

namespace {

std::vector<std::int64_t> widths(const Tower &t) {
  return level_lattice_trajectory(t, TrajectoryPredicate::width).values;
}

// Brute-force width of every level lattice.
std::vector<std::int64_t> brute_widths(const Tower &t) {
  std::vector<std::int64_t> out;
  for (const auto &g : t.levels())
    out.push_back(static_cast<std::int64_t>(oracle::brute_width(enumerate_subgroups(g).lattice())));
  return out;
}

const CoherentSubgroup *of_top_order(const std::vector<CoherentSubgroup> &hs, std::size_t order) {
  for (const auto &h : hs)
    if (h.members().back().order() == order) return &h;
  return nullptr;
}

} // namespace

TEST_CASE("constructors produce verified towers") {
  auto z2 = zp_tower(2, 4);
  CHECK(z2->depth() == 4);
  for (std::size_t k = 1; k <= 4; ++k) CHECK(z2->level(k)->order() == (std::size_t{1} << k));
  CHECK(cyclic_tower(6, 3)->level(3)->order() == 216);
  auto inv = inversion_tower(5, 3);
  CHECK(inv->level(2)->order() == 50);
  auto t4 = type_iv_tower(2, 2, 4);
  CHECK(t4->level(4)->order() == 256);
  auto sd = semidirect_tower(2, 3, cyclic(3), -1);
  CHECK(sd->level(3)->order() == 24);
  CHECK(sd->shape().kind == LimitShape::Kind::structure3);
  auto prod = product_tower(zp_tower(2, 2), zp_tower(7, 2));
  CHECK(prod->level(2)->order() == 4 * 49);
  for (std::size_t k = 1; k < prod->depth(); ++k) CHECK(prod->map(k).is_surjective());
  CHECK_THROWS_AS(semidirect_tower(2, 2, cyclic(7), 2), ConstructionError);
  CHECK_THROWS_AS(type_iv_tower(2, 1, 2), ConstructionError);
  CHECK_THROWS_AS(zp_tower(4, 2), ConstructionError);
  CHECK_THROWS_AS(product_tower(zp_tower(2, 2), zp_tower(3, 3)), ConstructionError);
}

TEST_CASE("coherent subgroups") {
  auto t = zp_tower(2, 4);
  auto all = coherent_subgroups(t);
  CHECK(all.size() == 5);
  for (const auto &h : all)
    for (std::size_t k = 1; k < t->depth(); ++k)
      CHECK(t->map(k).image(h.level(k + 1)) == h.level(k));
  // Image equality is enforced.
  std::vector<Subgroup> bad;
  for (std::size_t k = 1; k <= 4; ++k) bad.push_back(trivial_subgroup(t->level(k)));
  bad[0] = whole_group(t->level(1));
  CHECK_THROWS_AS(CoherentSubgroup::from_levels(t, bad), ConstructionError);
  std::vector<Subgroup> good;
  for (std::size_t k = 1; k <= 4; ++k) good.push_back(trivial_subgroup(t->level(k)));
  CHECK(CoherentSubgroup::from_levels(t, good).indices().back() == 16);
}

TEST_CASE("open subgroups") {
  auto t = zp_tower(2, 4);
  auto all = coherent_subgroups(t);
  const auto *whole = of_top_order(all, 16);
  REQUIRE(whole);
  auto w = is_open(*whole);
  CHECK(w.open);
  CHECK(w.index == 1);
  const auto *trivial = of_top_order(all, 1);
  CHECK(!is_open(*trivial).open);
  const auto *index4 = of_top_order(all, 4);
  auto r = is_open(*index4);
  CHECK(r.open);
  CHECK(r.index == 4);
  CHECK(r.stable_from == 2);
  CHECK(r.certified_depth == 4);
  CHECK(is_open(coherent_subgroups(zp_tower(2, 1))[0]).open);
}

TEST_CASE("procyclicity and prime spectra") {
  CHECK(is_procyclic(*zp_tower(2, 4)));
  CHECK(is_procyclic(*cyclic_tower(6, 3)));
  CHECK(!is_procyclic(*inversion_tower(5, 2)));
  CHECK(pi_star(*zp_tower(3, 3)) == std::vector<unsigned>{3});
  CHECK(pi_star(*cyclic_tower(6, 2)) == std::vector<unsigned>{2, 3});
  CHECK(pi_star(*product_tower(zp_tower(2, 2), zp_tower(7, 2))) == std::vector<unsigned>{2, 7});
}

TEST_CASE("procyclic iff every level lattice is distributive") {
  for (const auto &name : builtin_tower_names()) {
    auto t = builtin_tower(name, 3);
    auto r = level_lattice_trajectory(*t, TrajectoryPredicate::distributive);
    bool all = std::all_of(r.values.begin(), r.values.end(), [](auto v) { return v != 0; });
    CHECK_MESSAGE(is_procyclic(*t) == all, name);
  }
}

TEST_CASE("permutability in the limit") {
  auto abelian = coherent_subgroups(cyclic_tower(6, 2));
  for (const auto &h : abelian)
    for (const auto &k : abelian) CHECK(permutable_in_limit(h, k));

  auto t4 = type_iv_tower(2, 2, 3);
  auto all = coherent_subgroups(t4);
  for (const auto &h : all)
    for (const auto &k : all) CHECK(permutable_in_limit(h, k));

  auto dih = inversion_tower(5, 2);
  auto subs = coherent_subgroups(dih);
  std::vector<const CoherentSubgroup *> order2;
  for (const auto &h : subs)
    if (h.members().back().order() == 2) order2.push_back(&h);
  REQUIRE(order2.size() >= 2);
  CHECK(!permutable_in_limit(*order2[0], *order2[1]));
  CHECK_THROWS_AS(permutable_in_limit(abelian[0], subs[0]), DomainError);
}

TEST_CASE("width trajectories") {
  auto c6 = cyclic_tower(6, 4);
  CHECK(widths(*c6) == std::vector<std::int64_t>{2, 3, 4, 5});
  CHECK(brute_widths(*c6) == std::vector<std::int64_t>{2, 3, 4, 5});
  CHECK(format_trajectory(level_lattice_trajectory(*c6, TrajectoryPredicate::width)) ==
        "[2,3,4,5] monotone-unbounded");
  auto z5 = builtin_tower("z5xc2", 4);
  auto r = level_lattice_trajectory(*z5, TrajectoryPredicate::width);
  CHECK(r.values == std::vector<std::int64_t>{2, 2, 2, 2});
  CHECK(r.verdict == Verdict::stabilized);
  auto d = level_lattice_trajectory(*zp_tower(3, 4), TrajectoryPredicate::distributive);
  CHECK(d.values == std::vector<std::int64_t>{1, 1, 1, 1});
  auto m = level_lattice_trajectory(*type_iv_tower(2, 2, 3), TrajectoryPredicate::modular);
  CHECK(m.values == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("trajectory verdicts") {
  CHECK(trajectory_verdict({3}, false) == Verdict::inconclusive);
  CHECK(trajectory_verdict({1, 2, 2}, false) == Verdict::stabilized);
  CHECK(trajectory_verdict({1, 2, 3}, false) == Verdict::monotone_unbounded);
  CHECK(trajectory_verdict({3, 1, 2}, false) == Verdict::inconclusive);
  CHECK(trajectory_verdict({1, 0}, true) == Verdict::inconclusive);
}

TEST_CASE("truncated trajectories") {
  const auto saved = max_lattice_nodes();
  set_max_lattice_nodes(30);
  auto r = level_lattice_trajectory(*inversion_tower(5, 3), TrajectoryPredicate::width);
  set_max_lattice_nodes(saved);
  CHECK(r.truncated);
  CHECK(r.values.size() == 1);
  CHECK(format_trajectory(r).find("truncated at level 2") != std::string::npos);
}

TEST_CASE("product towers decompose levelwise") {
  auto p = product_tower(zp_tower(2, 3), zp_tower(3, 3));
  for (std::size_t k = 1; k <= 3; ++k) {
    auto l = enumerate_subgroups(p->level(k));
    auto d = direct_decompose(l.lattice());
    REQUIRE(d.has_value());
    CHECK(d->factors.size() == 2);
  }
}

TEST_CASE("tower files") {
  const char *text = R"(# 2-adic tower
tower z2; depth 3; shape structure3 2;
level 1; name C2; degree 2; gens (1 2)
level 2; name C4; degree 4; gens (1 2 3 4)
level 3; name C8; degree 8; gens (1 2 3 4 5 6 7 8)
map 2; images (1 2)
map 3; images (1 2 3 4)
)";
  auto t = parse_tower(text);
  CHECK(t->depth() == 3);
  CHECK(t->shape().kind == LimitShape::Kind::structure3);
  CHECK(parse_tower(format_tower(*t))->depth() == 3);
  auto round = parse_tower(format_tower(*builtin_tower("c2k_c3", 3)));
  CHECK(round->level(3)->order() == 24);

  auto line_of = [](const char *bad) -> std::size_t {
    try {
      parse_tower(bad);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  // A non-element image, a non-surjective map and a non-homomorphism are
  // all reported on the map line.
  CHECK(line_of("tower x; depth 2;\nlevel 1; name C2; degree 2; gens (1 2)\n"
                "level 2; name C4; degree 4; gens (1 2 3 4)\nmap 2; images (1 3)\n") == 4);
  CHECK(line_of("tower x; depth 2;\nlevel 1; name C2; degree 2; gens (1 2)\n"
                "level 2; name C4; degree 4; gens (1 2 3 4)\nmap 2; images ()\n") == 4);
  CHECK(line_of("tower x; depth 2;\nlevel 1; name C3; degree 3; gens (1 2 3)\n"
                "level 2; name C4; degree 4; gens (1 2 3 4)\nmap 2; images (1 2 3)\n") == 4);
  CHECK(line_of("tower x; depth two;\n") == 1);
  CHECK(line_of("tower x; depth 2;\nlevel 1; name C2; degree 2; gens (1 2)\nbogus\n") == 3);
  CHECK(line_of("tower x; depth 2;\nlevel 1; name C2; degree 2; gens (1 2)\n") != 0);
}

TEST_CASE("builtin towers") {
  for (const auto &name : builtin_tower_names()) CHECK(builtin_tower(name, 2)->depth() == 2);
  CHECK_THROWS_AS(builtin_tower("nope"), DomainError);
}
