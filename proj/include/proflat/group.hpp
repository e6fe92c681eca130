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
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "proflat/bitset.hpp"
#include "proflat/permutation.hpp"

namespace proflat {

/// Index of a group element in the canonical (lexicographic) element order.
/// The identity is always element 0.
using Elem = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Process-wide bound on group orders. Defaults to 2000; the environment
/// variable PROFLAT_MAX_ORDER overrides the default on first use.
std::size_t max_group_order();
void set_max_group_order(std::size_t bound);

/// A finite permutation group with every element materialized.
///
/// Elements are sorted lexicographically by their image arrays, and the full
/// multiplication table is stored, so products and inverses are table
/// lookups. Instances are immutable and shared through GroupPtr.
class FiniteGroup {
public:
  /// Builds the group generated by `generators` on `degree` points.
  /// Throws ResourceError when the order exceeds max_group_order(), and
  /// DomainError when a generator has the wrong degree.
  static GroupPtr generate(std::size_t degree, std::vector<Permutation> generators,
                           std::string name = {});

  const std::string &name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }

  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  /// Generators as element indices, aligned with generators().
  const std::vector<Elem> &generator_elements() const noexcept { return generator_elems_; }

  const Permutation &element(Elem e) const { return elements_.at(e); }
  const std::vector<Permutation> &elements() const noexcept { return elements_; }
  std::optional<Elem> index_of(const Permutation &p) const;

  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t{a} * order() + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// g^-1 a g
  Elem conj(Elem a, Elem g) const noexcept { return mul(mul(inverse_[g], a), g); }
  Elem pow(Elem a, long long k) const noexcept;
  std::size_t element_order(Elem a) const noexcept { return orders_[a]; }

  /// A copy of this group under another name.
  GroupPtr renamed(std::string name) const;

private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_elems_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermutationHash> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
};

class Subgroup;
namespace detail {
Subgroup make_subgroup(GroupPtr parent, Bitset members, std::vector<Elem> generators);
}

/// A subgroup of a FiniteGroup, identified by its membership bitset over the
/// parent's canonical element order. Only constructible through the
/// operations below, which guarantee closure.
class Subgroup {
public:
  const GroupPtr &parent() const noexcept { return parent_; }
  const Bitset &members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Elem e) const noexcept { return members_.test(e); }
  std::vector<Elem> elements() const;
  /// A generating set (not necessarily minimal).
  const std::vector<Elem> &generators() const noexcept { return generators_; }

  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept;
  bool is_subgroup_of(const Subgroup &other) const noexcept {
    return members_.is_subset_of(other.members_);
  }

  friend bool operator==(const Subgroup &a, const Subgroup &b) noexcept {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }
  /// Canonical order: by order, then lexicographically by bitset.
  friend bool operator<(const Subgroup &a, const Subgroup &b) noexcept {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.members_ < b.members_;
  }

private:
  friend Subgroup detail::make_subgroup(GroupPtr, Bitset, std::vector<Elem>);
  Subgroup() = default;

  GroupPtr parent_;
  Bitset members_;
  std::size_t order_ = 0;
  std::vector<Elem> generators_;
};

/// A homomorphism determined by generator images. The full element map is
/// materialized and validated at construction.
class Homomorphism {
public:
  /// `images[i]` is the image of `source->generator_elements()[i]`.
  /// Throws ConstructionError if the assignment does not extend to a
  /// homomorphism.
  static Homomorphism from_generator_images(GroupPtr source, GroupPtr target,
                                            std::vector<Elem> images);

  const GroupPtr &source() const noexcept { return source_; }
  const GroupPtr &target() const noexcept { return target_; }
  const std::vector<Elem> &generator_images() const noexcept { return generator_images_; }
  Elem operator()(Elem e) const noexcept { return map_[e]; }
  bool is_surjective() const noexcept { return surjective_; }

  Subgroup kernel() const;
  Subgroup image() const;
  Subgroup image(const Subgroup &h) const;
  Subgroup preimage(const Subgroup &k) const;

private:
  Homomorphism() = default;

  GroupPtr source_, target_;
  std::vector<Elem> generator_images_;
  std::vector<Elem> map_;
  bool surjective_ = false;
};

// --- subgroup construction -------------------------------------------------

/// Smallest subgroup containing `seed`. Throws DomainError for indices that
/// are not elements of `parent`.
Subgroup closure(const GroupPtr &parent, std::span<const Elem> seed);
/// Join of `h` with one more element.
Subgroup closure(const Subgroup &h, Elem g);
Subgroup trivial_subgroup(const GroupPtr &parent);
Subgroup whole_group(const GroupPtr &parent);
/// Subgroup from a bitset already known to be closed under products.
/// Throws DomainError when it is not.
Subgroup subgroup_from_members(const GroupPtr &parent, const Bitset &members);

Subgroup intersection(const Subgroup &h, const Subgroup &k);
Subgroup join(const Subgroup &h, const Subgroup &k);
Subgroup conjugate(const Subgroup &h, Elem g);

// --- normality -------------------------------------------------------------

bool is_normal(const Subgroup &h);
/// Largest normal subgroup of the parent contained in `h`.
Subgroup normal_core(const Subgroup &h);
/// Smallest normal subgroup of the parent containing `h`.
Subgroup normal_closure(const Subgroup &h);
Subgroup normalizer(const Subgroup &h);

struct Quotient {
  GroupPtr group;
  Homomorphism projection;
};

/// G/N acting on the right cosets of N. Throws PreconditionError if `n` is
/// not normal.
Quotient quotient(const Subgroup &n);

/// `h` as a group in its own right, with the inclusion into its parent.
struct Embedded {
  GroupPtr group;
  Homomorphism inclusion;
};
Embedded as_group(const Subgroup &h);

// --- structure -------------------------------------------------------------

std::vector<unsigned> prime_factors(std::size_t n);
/// Prime divisors of |G|, ascending.
std::vector<unsigned> pi(const FiniteGroup &g);
bool is_abelian(const FiniteGroup &g);
bool is_abelian(const Subgroup &h);
/// p-group test; returns the prime, nullopt for non-p-groups and the trivial group.
std::optional<unsigned> p_group_prime(std::size_t order);

/// A Sylow p-subgroup. Throws DomainError when p does not divide |G|.
Subgroup sylow(const GroupPtr &g, unsigned p);
Subgroup commutator_subgroup(const GroupPtr &g);
bool is_perfect(const GroupPtr &g);
/// True iff every Sylow subgroup is normal.
bool is_nilpotent(const GroupPtr &g);

/// Elementwise product set HK as a bitset over the parent.
Bitset product_set(const Subgroup &h, const Subgroup &k);
/// HK == KH. Throws DomainError for different parents.
bool permutes(const Subgroup &h, const Subgroup &k);

/// Subgroup generated by all elements whose order has only primes in `primes`.
Subgroup generated_by_pi_elements(const GroupPtr &g, std::span<const unsigned> primes);

} // namespace proflat
