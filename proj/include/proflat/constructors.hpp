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

#include "proflat/group.hpp"

namespace proflat {

// Standard groups used by the catalogue and the tower builders. Every
// constructor returns a fully materialized group.

GroupPtr cyclic(std::size_t n);
/// (C_p)^k as k disjoint p-cycles.
GroupPtr elementary_abelian(unsigned p, unsigned k);
/// Dihedral group of the given order (2n), acting on the n-gon for n >= 3.
GroupPtr dihedral(std::size_t order);
GroupPtr quaternion8();
GroupPtr symmetric(unsigned n);
GroupPtr alternating(unsigned n);
/// Generators are those of `a` followed by those of `b`.
GroupPtr direct_product(const GroupPtr &a, const GroupPtr &b, std::string name = {});

/// A semidirect product <x> |x A with x of order `m` acting on the abelian
/// group `a` by the power map a -> a^e, i.e. x^-1 a x = a^e. Generators are
/// those of `a` followed by x. Throws ConstructionError when `a` is not
/// abelian or a -> a^e is not an automorphism whose order divides m.
GroupPtr semidirect_cyclic(std::size_t m, const GroupPtr &a, long long e, std::string name = {});

/// C8 |x C2 with a^x = a^5.
GroupPtr modular_group16();

/// Smallest e > 1 with e^q = 1 (mod p); requires q | p - 1.
unsigned power_root_of_unity(unsigned p, unsigned q);

} // namespace proflat
