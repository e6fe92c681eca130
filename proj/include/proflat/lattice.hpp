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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proflat/bitset.hpp"

namespace proflat {

using Node = std::uint32_t;

/// A finite lattice given by its order relation, with materialized meet and
/// join tables. Immutable once built.
class Lattice {
public:
  Lattice() = default;

  /// `below[j]` holds bit i iff i <= j. Throws DomainError when the relation
  /// is not a partial order or some pair lacks a meet or a join.
  static Lattice from_order(std::vector<Bitset> below);
  static Lattice from_leq(std::size_t n, const std::function<bool(Node, Node)> &leq);
  /// Reflexive-transitive closure of the cover pairs (lower, upper).
  static Lattice from_covers(std::size_t n, std::span<const std::pair<Node, Node>> covers);

  std::size_t size() const noexcept { return n_; }
  bool leq(Node a, Node b) const noexcept { return below_[b].test(a); }
  bool less(Node a, Node b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Node a, Node b) const noexcept { return leq(a, b) || leq(b, a); }
  Node meet(Node a, Node b) const noexcept { return meet_[std::size_t{a} * n_ + b]; }
  Node join(Node a, Node b) const noexcept { return join_[std::size_t{a} * n_ + b]; }
  Node bottom() const noexcept { return bottom_; }
  Node top() const noexcept { return top_; }

  const Bitset &below(Node a) const noexcept { return below_[a]; }
  const Bitset &above(Node a) const noexcept { return above_[a]; }
  const std::vector<Node> &lower_covers(Node a) const noexcept { return lower_covers_[a]; }
  const std::vector<Node> &upper_covers(Node a) const noexcept { return upper_covers_[a]; }
  /// Hasse diagram as (lower, upper) pairs, sorted.
  std::vector<std::pair<Node, Node>> covers() const;
  /// Length of the longest chain from the bottom to `a`.
  std::size_t rank(Node a) const noexcept { return rank_[a]; }
  std::size_t height() const noexcept { return rank_.empty() ? 0 : rank_[top_]; }

private:
  std::size_t n_ = 0;
  std::vector<Bitset> below_, above_;
  std::vector<Node> meet_, join_;
  std::vector<std::vector<Node>> lower_covers_, upper_covers_;
  std::vector<std::size_t> rank_;
  Node bottom_ = 0, top_ = 0;
};

// --- standard lattices -------------------------------------------------------

/// Chain with `n` elements.
Lattice chain(std::size_t n);
/// M_k: bottom, k pairwise incomparable atoms, top.
Lattice diamond(std::size_t k);
/// N5: 0 < a < b < 1 and 0 < c < 1.
Lattice pentagon();
/// Divisors of n ordered by divisibility, nodes in ascending divisor order.
Lattice divisor_lattice(std::size_t n);
/// Node (a, b) has index a * right.size() + b.
Lattice product(const Lattice &left, const Lattice &right);

struct Interval {
  Lattice lattice;
  std::vector<Node> nodes; ///< interval node -> node of the parent lattice
};
/// [lo, hi] as a lattice. Throws DomainError unless lo <= hi.
Interval interval(const Lattice &l, Node lo, Node hi);

// --- predicates ----------------------------------------------------------------

struct Triple {
  Node x, y, z;
  friend bool operator==(const Triple &, const Triple &) = default;
};

/// N5 sublattice: bottom < low < high < top, side incomparable to low, high.
struct Pentagon {
  Node bottom, low, high, side, top;
};
/// M3 sublattice with atoms a, b, c.
struct Diamond {
  Node bottom, a, b, c, top;
};

struct DistributivityCheck {
  bool holds = true;
  /// x v (y ^ z) != (x v y) ^ (x v z)
  std::optional<Triple> witness;
};
DistributivityCheck check_distributive(const Lattice &l);

struct ModularityCheck {
  bool holds = true;
  /// x <= z and x v (y ^ z) != (x v y) ^ z
  std::optional<Triple> witness;
  std::optional<Pentagon> pentagon;
};
ModularityCheck check_modular(const Lattice &l);

/// The pentagon spanned by a modular-law violation (x <= z).
Pentagon pentagon_from_violation(const Lattice &l, const Triple &t);

struct ModularElementCheck {
  bool holds = true;
  /// 1: x v (m ^ z) != (x v m) ^ z with x <= z, witness (x, m, z).
  /// 2: m v (y ^ z) != (m v y) ^ z with m <= z, witness (m, y, z).
  int failed_condition = 0;
  std::optional<Triple> witness;
};
ModularElementCheck check_modular_element(const Lattice &l, Node m);
/// Modular-element flag for every node.
std::vector<bool> modular_elements(const Lattice &l);

/// Sublattice detection, independent of the identity checks.
std::optional<Pentagon> find_pentagon(const Lattice &l);
std::optional<Diamond> find_diamond(const Lattice &l);

struct WidthResult {
  std::size_t width = 0;
  std::vector<Node> antichain;
  /// A minimum chain cover, one chain per antichain element.
  std::vector<std::vector<Node>> chains;
};
/// Maximum antichain via Dilworth: minimum chain cover from a maximum
/// bipartite matching on the strict order, antichain from the König cover.
WidthResult width(const Lattice &l);
bool is_antichain(const Lattice &l, std::span<const Node> nodes);

struct LatticeDecomposition {
  /// Complement pairs (a, b) found while splitting, in parent-lattice nodes.
  /// Each satisfies a ^ b = 0, a v b = 1 with x -> (x ^ a, x ^ b) an
  /// isomorphism onto [0, a] x [0, b] of the lattice being split.
  std::vector<std::pair<Node, Node>> factor_pairs;
  /// Tops of the directly indecomposable factors; L ~ prod [0, f].
  std::vector<Node> factors;
};
/// Finest direct decomposition, or nullopt when the lattice is directly
/// indecomposable (including the one-element lattice).
std::optional<LatticeDecomposition> direct_decompose(const Lattice &l);
/// Whether x -> (x ^ a, x ^ b) is an isomorphism onto [0, a] x [0, b].
bool is_direct_split(const Lattice &l, Node a, Node b);

/// Up to `limit` order isomorphisms l1 -> l2 in lexicographic order of the
/// image arrays. Throws ResourceError when either lattice exceeds `max_size`.
std::vector<std::vector<Node>> find_isomorphisms(const Lattice &l1, const Lattice &l2,
                                                 std::size_t limit, std::size_t max_size = 64);

// --- exchange format -----------------------------------------------------------

/// "size n" followed by "cover i j" lines (0-based nodes).
std::string to_exchange(const Lattice &l);
/// Throws ParseError (with line) on malformed text or a relation that is not a lattice.
Lattice parse_exchange(std::string_view text);

} // namespace proflat
