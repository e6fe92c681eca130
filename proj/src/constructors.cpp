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

#include "proflat/constructors.hpp"

#include <numeric>
#include <vector>

#include "proflat/errors.hpp"

namespace proflat {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < length; ++i)
    images[first + i] = static_cast<Point>(first + (i + 1) % length);
  return Permutation(std::move(images));
}

std::size_t exponent(const FiniteGroup &g) {
  std::size_t e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

} // namespace

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw ConstructionError("cyclic group of order 0");
  if (n == 1) return FiniteGroup::generate(1, {}, "C1");
  return FiniteGroup::generate(n, {cycle_on(n, 0, n)}, "C" + std::to_string(n));
}

GroupPtr elementary_abelian(unsigned p, unsigned k) {
  if (p < 2) throw ConstructionError("elementary abelian group needs a prime");
  std::vector<Permutation> gens;
  const std::size_t degree = std::size_t{p} * k;
  for (unsigned i = 0; i < k; ++i) gens.push_back(cycle_on(degree, std::size_t{i} * p, p));
  std::string name = "C" + std::to_string(p);
  if (k != 1) name += "^" + std::to_string(k);
  return FiniteGroup::generate(std::max<std::size_t>(degree, 1), std::move(gens), std::move(name));
}

GroupPtr dihedral(std::size_t order) {
  if (order < 2 || order % 2) throw ConstructionError("dihedral group needs an even order");
  const std::size_t n = order / 2;
  const std::string name = "D" + std::to_string(order);
  if (n == 1) return cyclic(2)->renamed(name);
  if (n == 2) return elementary_abelian(2, 2)->renamed(name);
  std::vector<Point> reflect(n);
  for (std::size_t i = 0; i < n; ++i) reflect[i] = static_cast<Point>((n - i) % n);
  return FiniteGroup::generate(n, {cycle_on(n, 0, n), Permutation(std::move(reflect))}, name);
}

GroupPtr quaternion8() {
  return FiniteGroup::generate(8,
                               {Permutation::from_cycles("(1 2 4 7)(3 6 8 5)", 8),
                                Permutation::from_cycles("(1 3 4 8)(2 5 7 6)", 8)},
                               "Q8");
}

GroupPtr symmetric(unsigned n) {
  const std::string name = "S" + std::to_string(n);
  if (n < 2) return FiniteGroup::generate(1, {}, name);
  if (n == 2) return FiniteGroup::generate(2, {cycle_on(2, 0, 2)}, name);
  return FiniteGroup::generate(n, {cycle_on(n, 0, 2), cycle_on(n, 0, n)}, name);
}

GroupPtr alternating(unsigned n) {
  const std::string name = "A" + std::to_string(n);
  if (n < 3) return FiniteGroup::generate(std::max(n, 1u), {}, name);
  if (n == 3) return FiniteGroup::generate(3, {cycle_on(3, 0, 3)}, name);
  Permutation long_cycle = n % 2 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1);
  return FiniteGroup::generate(n, {cycle_on(n, 0, 3), long_cycle}, name);
}

GroupPtr direct_product(const GroupPtr &a, const GroupPtr &b, std::string name) {
  if (name.empty()) name = a->name() + "x" + b->name();
  const auto ida = Permutation::identity(a->degree());
  const auto idb = Permutation::identity(b->degree());
  std::vector<Permutation> gens;
  for (const auto &g : a->generators()) gens.push_back(Permutation::direct_sum(g, idb));
  for (const auto &g : b->generators()) gens.push_back(Permutation::direct_sum(ida, g));
  return FiniteGroup::generate(a->degree() + b->degree(), std::move(gens), std::move(name));
}

GroupPtr semidirect_cyclic(std::size_t m, const GroupPtr &a, long long e, std::string name) {
  if (m == 0) throw ConstructionError("acting cyclic group of order 0");
  if (!is_abelian(*a)) throw ConstructionError("semidirect_cyclic needs an abelian normal factor");
  const auto exp = static_cast<long long>(exponent(*a));
  long long r = ((e % exp) + exp) % exp;
  if (std::gcd(r, exp) != 1)
    throw ConstructionError("invalid action: a -> a^" + std::to_string(e) +
                            " is not an automorphism");
  // e^j mod exp for j = 0..m; the action order must divide m.
  std::vector<long long> powers{1 % exp};
  for (std::size_t j = 1; j <= m; ++j) powers.push_back(powers.back() * r % exp);
  if (powers[m] != 1 % exp)
    throw ConstructionError("invalid action order: a -> a^" + std::to_string(e) +
                            " has order not dividing " + std::to_string(m));

  const std::size_t na = a->order();
  const std::size_t order = m * na;
  if (order > max_group_order())
    throw ResourceError("group order exceeds the order bound " +
                        std::to_string(max_group_order()) + " (PROFLAT_MAX_ORDER)");
  // Element x^i b is index i*na + b; (x^i b)(x^j c) = x^(i+j) b^(e^j) c.
  auto mul = [&](std::size_t u, std::size_t v) {
    std::size_t i = u / na, j = v / na;
    auto b = static_cast<Elem>(u % na), c = static_cast<Elem>(v % na);
    Elem twisted = a->pow(b, powers[j]);
    return ((i + j) % m) * na + a->mul(twisted, c);
  };
  auto right_regular = [&](std::size_t s) {
    std::vector<Point> images(order);
    for (std::size_t y = 0; y < order; ++y) images[y] = static_cast<Point>(mul(y, s));
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (Elem g : a->generator_elements()) gens.push_back(right_regular(g));
  gens.push_back(right_regular(m > 1 ? na : 0));
  if (name.empty())
    name = "C" + std::to_string(m) + ":" + a->name() + "[" + std::to_string(e) + "]";
  return FiniteGroup::generate(order, std::move(gens), std::move(name));
}

GroupPtr modular_group16() { return semidirect_cyclic(2, cyclic(8), 5, "M16"); }

unsigned power_root_of_unity(unsigned p, unsigned q) {
  if (q == 0 || (p - 1) % q) throw DomainError("q does not divide p - 1");
  for (unsigned e = 2; e < p; ++e) {
    unsigned long long x = 1;
    for (unsigned k = 0; k < q; ++k) x = x * e % p;
    if (x == 1) return e;
  }
  throw DomainError("no root of unity of order q mod p");
}

} // namespace proflat
