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
#include <optional>
#include <string>
#include <vector>

#include "proflat/group.hpp"
#include "proflat/subgroup_lattice.hpp"

namespace proflat {

bool is_cyclic(const FiniteGroup &g);

/// Whether conjugation by `t` maps every element of `a` into the cyclic
/// subgroup it generates (equivalently, fixes every subgroup of `a`).
bool is_power_automorphism(const Subgroup &a, Elem t);

struct PGroupCertificate {
  enum class Kind { elementary_abelian, semidirect };
  Kind kind = Kind::elementary_abelian;
  unsigned p = 0;
  unsigned q = 0; ///< 0 for the elementary abelian kind
  Subgroup a;     ///< the elementary abelian normal p-subgroup
  Elem t = 0;     ///< element of order q (identity for the abelian kind)
  long long exponent = 1; ///< t^-1 x t = x^exponent on a
};
/// P-group: elementary abelian of order p^n (n >= 2), or A |x <t> with A
/// elementary abelian normal, |t| = q != p prime, t inducing a non-trivial
/// power automorphism on A.
std::optional<PGroupCertificate> is_P_group(const GroupPtr &g);

struct PStarCertificate {
  unsigned p = 0, q = 0;
  Subgroup a;
  Elem t = 0;
  std::size_t t_order = 0;
  long long exponent = 1;
  std::size_t automorphism_order = 0;
};
/// P*-group: A |x <t> with A elementary abelian normal, <t> cyclic of prime
/// power order, t inducing a power automorphism of prime order on A.
std::optional<PStarCertificate> is_Pstar_group(const GroupPtr &g);

/// (A, b, s): A abelian normal, G = A<b>, b^-1 a b = a^(1 + p^s) for all a
/// in A, s >= 1 and s >= 2 when p = 2.
struct IwasawaTriple {
  unsigned p = 0;
  Subgroup a;
  Elem b = 0;
  unsigned s = 0;
};
/// Smallest triple in (A node, b, s) order. Throws DomainError for groups
/// that are not p-groups (the trivial group included).
std::optional<IwasawaTriple> find_iwasawa_triple(const GroupPtr &g);
bool is_hamiltonian(const GroupPtr &g);
/// Abelian, Hamiltonian, or has an Iwasawa triple. Throws DomainError for
/// groups that are not p-groups.
bool is_modular_p_group_structural(const GroupPtr &g);

struct CoprimeDecomposition {
  std::vector<Subgroup> factors;
};
/// The finest decomposition into normal Hall subgroups of pairwise disjoint
/// prime sets; for an indecomposable group this is {G}.
std::vector<Subgroup> finest_coprime_factors(const GroupPtr &g);
/// Present iff the finest decomposition has at least two factors.
std::optional<CoprimeDecomposition> coprime_direct_decomposition(const GroupPtr &g);

/// Right-hand side of the modularity characterization: each finest coprime
/// factor is abelian, a P*-group, or a structurally modular p-group.
struct ModularFactor {
  enum class Kind { abelian, pstar, modular_p_group, other };
  Subgroup factor;
  Kind kind = Kind::other;
};
struct ModularStructure {
  bool holds = false;
  std::vector<ModularFactor> factors;
};
ModularStructure modular_structure(const GroupPtr &g);
const char *to_string(ModularFactor::Kind k);

/// Certificate for G/M_G = (prod S_i/M_G) x T/M_G; every subgroup is given
/// by its node in the subgroup lattice of G.
struct ModularElementCertificate {
  Node core = 0;
  struct Piece {
    Node s;        ///< S_i
    Node q;        ///< Q_i = M n S_i
    unsigned p, r; ///< S_i/M_G has order p^k r; Q_i/M_G is its Sylow r-subgroup
  };
  std::vector<Piece> pieces;
  Node t = 0;
  Node m_cap_t = 0;
};
struct ModularElementStructure {
  bool holds = false;
  std::optional<ModularElementCertificate> certificate;
};
/// Searches for the decomposition of G/M_G characterizing modular elements.
/// Candidates for the S_i are exactly the finest coprime factors of G/M_G
/// that are non-abelian P-groups meeting M in a non-normal Sylow subgroup;
/// every subset of them is tried.
ModularElementStructure modular_element_structure_check(const SubgroupLatticeView &view, Node m);

/// HK = KH decided from orders in the lattice: |H v K| |H ^ K| = |H| |K|.
bool permutes_in_lattice(const SubgroupLatticeView &view, Node h, Node k);
/// Permutes with every subgroup of the group.
bool is_permutable(const SubgroupLatticeView &view, Node h);

} // namespace proflat
