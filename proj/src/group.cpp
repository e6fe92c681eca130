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

#include "proflat/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string_view>

#include "proflat/errors.hpp"

namespace proflat {

namespace {

constexpr std::size_t kDefaultMaxOrder = 2000;
constexpr std::size_t kFullHomomorphismCheck = 500;

std::atomic<std::size_t> &order_bound() {
  static std::atomic<std::size_t> bound = [] {
    if (const char *env = std::getenv("PROFLAT_MAX_ORDER")) {
      char *end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxOrder;
  }();
  return bound;
}

} // namespace

std::size_t max_group_order() { return order_bound().load(); }
void set_max_group_order(std::size_t bound) { order_bound().store(bound); }

// --- FiniteGroup -------------------------------------------------------------

GroupPtr FiniteGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                               std::string name) {
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw DomainError("generator " + g.to_cycles() + " has degree " +
                        std::to_string(g.degree()) + ", expected " + std::to_string(degree));

  const std::size_t bound = max_group_order();
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->name_ = std::move(name);
  g->degree_ = degree;
  g->generators_ = std::move(generators);

  // Orbit of the identity under right multiplication by the generators.
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_map<Permutation, Elem, PermutationHash> seen{{elems.front(), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto &s : g->generators_) {
      Permutation y = elems[i] * s;
      if (seen.contains(y)) continue;
      if (elems.size() >= bound)
        throw ResourceError("group order exceeds the order bound " + std::to_string(bound) +
                            " (PROFLAT_MAX_ORDER)");
      seen.emplace(y, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  std::sort(elems.begin(), elems.end());
  const std::size_t n = elems.size();
  g->index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g->index_.emplace(elems[i], static_cast<Elem>(i));

  // A base: points whose images separate all elements. Products are then
  // determined by base images, avoiding full compositions.
  std::vector<Point> base;
  std::vector<std::size_t> cls(n, 0);
  std::size_t classes = 1;
  for (Point x = 0; x < degree && classes < n; ++x) {
    std::unordered_map<std::uint64_t, std::size_t> refined;
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t key = (static_cast<std::uint64_t>(cls[i]) << 32) | elems[i](x);
      next[i] = refined.try_emplace(key, refined.size()).first->second;
    }
    if (refined.size() > classes) {
      base.push_back(x);
      cls = std::move(next);
      classes = refined.size();
    }
  }
  std::unordered_map<std::u32string, Elem> by_base;
  by_base.reserve(n);
  std::u32string key(base.size(), U'\0');
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < base.size(); ++k) key[k] = elems[i](base[k]);
    by_base.emplace(key, static_cast<Elem>(i));
  }

  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < base.size(); ++k) key[k] = elems[b](elems[a](base[k]));
      g->table_[a * n + b] = by_base.at(key);
    }
  }

  g->inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g->table_[a * n + b] == 0) {
        g->inverse_[a] = static_cast<Elem>(b);
        break;
      }

  g->orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Elem x = static_cast<Elem>(a); x != 0; x = g->table_[x * n + a]) ++k;
    g->orders_[a] = k;
  }

  g->elements_ = std::move(elems);
  for (const auto &s : g->generators_) g->generator_elems_.push_back(g->index_.at(s));
  return g;
}

std::optional<Elem> FiniteGroup::index_of(const Permutation &p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteGroup::pow(Elem a, long long k) const noexcept {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  k %= static_cast<long long>(orders_[a]);
  Elem result = identity();
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

GroupPtr FiniteGroup::renamed(std::string name) const {
  auto copy = std::shared_ptr<FiniteGroup>(new FiniteGroup(*this));
  copy->name_ = std::move(name);
  return copy;
}

// --- Subgroup ----------------------------------------------------------------

Subgroup detail::make_subgroup(GroupPtr parent, Bitset members, std::vector<Elem> generators) {
  Subgroup s;
  s.order_ = members.count();
  s.parent_ = std::move(parent);
  s.members_ = std::move(members);
  s.generators_ = std::move(generators);
  return s;
}

std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  out.reserve(order_);
  members_.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
  return out;
}

bool Subgroup::is_whole() const noexcept { return order_ == parent_->order(); }

Subgroup trivial_subgroup(const GroupPtr &parent) {
  Bitset m(parent->order());
  m.set(FiniteGroup::identity());
  return detail::make_subgroup(parent, std::move(m), {});
}

Subgroup whole_group(const GroupPtr &parent) {
  Bitset m(parent->order());
  for (std::size_t i = 0; i < parent->order(); ++i) m.set(i);
  std::vector<Elem> gens;
  for (Elem e : parent->generator_elements())
    if (e != FiniteGroup::identity() && std::find(gens.begin(), gens.end(), e) == gens.end())
      gens.push_back(e);
  return detail::make_subgroup(parent, std::move(m), std::move(gens));
}

Subgroup closure(const Subgroup &h, Elem g) {
  const GroupPtr &G = h.parent();
  if (g >= G->order()) throw DomainError("element index out of range");
  if (h.contains(g)) return h;

  // Dimino: the result is kept as a union of right cosets of h.
  const std::vector<Elem> base = h.elements();
  std::vector<Elem> gens = h.generators();
  gens.push_back(g);
  Bitset members = h.members();
  std::vector<Elem> reps{FiniteGroup::identity()};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : gens) {
      Elem t = G->mul(reps[i], s);
      if (members.test(t)) continue;
      for (Elem x : base) members.set(G->mul(x, t));
      reps.push_back(t);
    }
  }
  return detail::make_subgroup(G, std::move(members), std::move(gens));
}

Subgroup closure(const GroupPtr &parent, std::span<const Elem> seed) {
  Subgroup h = trivial_subgroup(parent);
  for (Elem e : seed) {
    if (e >= parent->order())
      throw DomainError("element " + std::to_string(e) + " is not in group of order " +
                        std::to_string(parent->order()));
    if (!h.contains(e)) h = closure(h, e);
  }
  return h;
}

Subgroup subgroup_from_members(const GroupPtr &parent, const Bitset &members) {
  if (members.size() != parent->order())
    throw DomainError("membership bitset has the wrong size");
  std::vector<Elem> seed;
  members.for_each([&](std::size_t i) { seed.push_back(static_cast<Elem>(i)); });
  Subgroup h = closure(parent, seed);
  if (!(h.members() == members)) throw DomainError("element set is not closed under products");
  return h;
}

Subgroup intersection(const Subgroup &h, const Subgroup &k) {
  if (h.parent() != k.parent()) throw DomainError("subgroups of different groups");
  Bitset m = h.members() & k.members();
  std::vector<Elem> seed;
  m.for_each([&](std::size_t i) { seed.push_back(static_cast<Elem>(i)); });
  return closure(h.parent(), seed);
}

Subgroup join(const Subgroup &h, const Subgroup &k) {
  if (h.parent() != k.parent()) throw DomainError("subgroups of different groups");
  Subgroup out = h;
  for (Elem g : k.generators())
    if (!out.contains(g)) out = closure(out, g);
  return out;
}

Subgroup conjugate(const Subgroup &h, Elem g) {
  const GroupPtr &G = h.parent();
  Bitset m(G->order());
  h.members().for_each([&](std::size_t x) { m.set(G->conj(static_cast<Elem>(x), g)); });
  std::vector<Elem> gens;
  for (Elem x : h.generators()) gens.push_back(G->conj(x, g));
  return detail::make_subgroup(G, std::move(m), std::move(gens));
}

// --- normality ---------------------------------------------------------------

bool is_normal(const Subgroup &h) {
  const GroupPtr &G = h.parent();
  for (Elem g : G->generator_elements())
    for (Elem x : h.generators())
      if (!h.contains(G->conj(x, g))) return false;
  return true;
}

Subgroup normal_core(const Subgroup &h) {
  if (is_normal(h)) return h;
  const GroupPtr &G = h.parent();
  Bitset core = h.members();
  for (Elem g = 0; g < G->order(); ++g) {
    Bitset conj(G->order());
    h.members().for_each([&](std::size_t x) { conj.set(G->conj(static_cast<Elem>(x), g)); });
    core &= conj;
  }
  std::vector<Elem> seed;
  core.for_each([&](std::size_t i) { seed.push_back(static_cast<Elem>(i)); });
  return closure(G, seed);
}

Subgroup normal_closure(const Subgroup &h) {
  const GroupPtr &G = h.parent();
  Subgroup n = h;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem g : G->generator_elements()) {
      for (std::size_t i = 0; i < n.generators().size(); ++i) {
        Elem y = G->conj(n.generators()[i], g);
        if (!n.contains(y)) {
          n = closure(n, y);
          grew = true;
        }
      }
    }
  }
  return n;
}

Subgroup normalizer(const Subgroup &h) {
  const GroupPtr &G = h.parent();
  std::vector<Elem> seed;
  for (Elem g = 0; g < G->order(); ++g) {
    bool normalizes = true;
    for (Elem x : h.generators())
      if (!h.contains(G->conj(x, g))) {
        normalizes = false;
        break;
      }
    if (normalizes) seed.push_back(g);
  }
  return closure(G, seed);
}

Quotient quotient(const Subgroup &n) {
  if (!is_normal(n)) throw PreconditionError("quotient by a subgroup that is not normal");
  const GroupPtr &G = n.parent();
  const std::vector<Elem> members = n.elements();
  std::vector<std::size_t> coset(G->order(), SIZE_MAX);
  std::vector<Elem> reps;
  for (Elem g = 0; g < G->order(); ++g) {
    if (coset[g] != SIZE_MAX) continue;
    for (Elem x : members) coset[G->mul(x, g)] = reps.size();
    reps.push_back(g);
  }
  std::vector<Permutation> gens;
  for (Elem s : G->generator_elements()) {
    std::vector<Point> images(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      images[i] = static_cast<Point>(coset[G->mul(reps[i], s)]);
    gens.emplace_back(std::move(images));
  }
  std::string name = G->name().empty() ? std::string() : G->name() + "/N";
  GroupPtr Q = FiniteGroup::generate(reps.size(), gens, std::move(name));
  std::vector<Elem> images;
  for (const auto &p : gens) images.push_back(*Q->index_of(p));
  return {Q, Homomorphism::from_generator_images(G, Q, std::move(images))};
}

Embedded as_group(const Subgroup &h) {
  const GroupPtr &G = h.parent();
  std::vector<Permutation> gens;
  for (Elem x : h.generators()) gens.push_back(G->element(x));
  GroupPtr H = FiniteGroup::generate(G->degree(), gens, {});
  return {H, Homomorphism::from_generator_images(H, G, h.generators())};
}

// --- Homomorphism ------------------------------------------------------------

Homomorphism Homomorphism::from_generator_images(GroupPtr source, GroupPtr target,
                                                 std::vector<Elem> images) {
  const auto &gens = source->generator_elements();
  if (images.size() != gens.size())
    throw ConstructionError("expected " + std::to_string(gens.size()) +
                            " generator images, got " + std::to_string(images.size()));
  for (Elem e : images)
    if (e >= target->order()) throw ConstructionError("generator image is not a target element");

  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(source->order(), kUnset);
  map[FiniteGroup::identity()] = FiniteGroup::identity();
  std::vector<Elem> queue{FiniteGroup::identity()};
  // Every (element, generator) pair is checked, which already pins down a
  // homomorphism; small sources additionally get the full pairwise check.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = source->mul(x, gens[k]);
      Elem fy = target->mul(map[x], images[k]);
      if (map[y] == kUnset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        throw ConstructionError("generator images do not define a homomorphism");
      }
    }
  }
  if (source->order() <= kFullHomomorphismCheck) {
    for (Elem a = 0; a < source->order(); ++a)
      for (Elem b = 0; b < source->order(); ++b)
        if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
          throw ConstructionError("generator images do not define a homomorphism");
  }

  Homomorphism h;
  Bitset image(target->order());
  for (Elem e : map) image.set(e);
  h.surjective_ = image.count() == target->order();
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.generator_images_ = std::move(images);
  h.map_ = std::move(map);
  return h;
}

Subgroup Homomorphism::image(const Subgroup &h) const {
  if (h.parent() != source_) throw DomainError("subgroup is not in the source group");
  std::vector<Elem> seed;
  for (Elem g : h.generators()) seed.push_back(map_[g]);
  return closure(target_, seed);
}

Subgroup Homomorphism::image() const { return image(whole_group(source_)); }

Subgroup Homomorphism::preimage(const Subgroup &k) const {
  if (k.parent() != target_) throw DomainError("subgroup is not in the target group");
  std::vector<Elem> seed;
  for (Elem x = 0; x < source_->order(); ++x)
    if (k.contains(map_[x])) seed.push_back(x);
  return closure(source_, seed);
}

Subgroup Homomorphism::kernel() const { return preimage(trivial_subgroup(target_)); }

// --- structure ---------------------------------------------------------------

std::vector<unsigned> prime_factors(std::size_t n) {
  std::vector<unsigned> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(static_cast<unsigned>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::vector<unsigned> pi(const FiniteGroup &g) { return prime_factors(g.order()); }

std::optional<unsigned> p_group_prime(std::size_t order) {
  auto ps = prime_factors(order);
  if (ps.size() != 1) return std::nullopt;
  return ps.front();
}

bool is_abelian(const Subgroup &h) {
  const GroupPtr &G = h.parent();
  const auto &gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G->mul(gens[i], gens[j]) != G->mul(gens[j], gens[i])) return false;
  return true;
}

bool is_abelian(const FiniteGroup &g) {
  const auto &gens = g.generator_elements();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

Subgroup sylow(const GroupPtr &g, unsigned p) {
  if (p < 2 || g->order() % p != 0)
    throw DomainError("prime " + std::to_string(p) + " does not divide the group order " +
                      std::to_string(g->order()));
  std::size_t target = 1;
  for (std::size_t n = g->order(); n % p == 0; n /= p) target *= p;

  // Grow a p-subgroup P one factor p at a time: some g in N(P) \ P has
  // g^p in P, and then <P, g> = P<g> has order p|P|.
  Subgroup P = trivial_subgroup(g);
  while (P.order() < target) {
    bool grown = false;
    for (Elem x = 1; x < g->order() && !grown; ++x) {
      if (P.contains(x) || !P.contains(g->pow(x, p))) continue;
      bool normalizes = true;
      for (Elem y : P.generators())
        if (!P.contains(g->conj(y, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      P = closure(P, x);
      grown = true;
    }
    if (!grown) throw Error("internal: Sylow growth stalled");
  }
  return P;
}

Subgroup commutator_subgroup(const GroupPtr &g) {
  const auto &gens = g->generator_elements();
  std::vector<Elem> seed;
  for (Elem a : gens)
    for (Elem b : gens) seed.push_back(g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b)));
  return normal_closure(closure(g, seed));
}

bool is_perfect(const GroupPtr &g) { return commutator_subgroup(g).order() == g->order(); }

bool is_nilpotent(const GroupPtr &g) {
  for (unsigned p : pi(*g))
    if (!is_normal(sylow(g, p))) return false;
  return true;
}

Bitset product_set(const Subgroup &h, const Subgroup &k) {
  if (h.parent() != k.parent()) throw DomainError("subgroups of different groups");
  const GroupPtr &G = h.parent();
  Bitset out(G->order());
  const auto ks = k.elements();
  h.members().for_each([&](std::size_t x) {
    for (Elem y : ks) out.set(G->mul(static_cast<Elem>(x), y));
  });
  return out;
}

bool permutes(const Subgroup &h, const Subgroup &k) {
  if (h.parent() != k.parent()) throw DomainError("subgroups of different groups");
  return product_set(h, k) == product_set(k, h);
}

Subgroup generated_by_pi_elements(const GroupPtr &g, std::span<const unsigned> primes) {
  Subgroup h = trivial_subgroup(g);
  for (Elem x = 1; x < g->order(); ++x) {
    std::size_t n = g->element_order(x);
    for (unsigned p : primes)
      while (n % p == 0) n /= p;
    if (n == 1 && !h.contains(x)) h = closure(h, x);
  }
  return h;
}

} // namespace proflat
