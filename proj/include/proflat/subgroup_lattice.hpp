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
#include <unordered_map>
#include <vector>

#include "proflat/group.hpp"
#include "proflat/lattice.hpp"

namespace proflat {

struct SubgroupAnnotation {
  std::size_t order = 0;
  bool normal = false;
  bool cyclic = false;
  bool abelian = false;
};

/// Every subgroup of a finite group, indexed in canonical order (by order,
/// then by membership bitset), together with the subgroup lattice over the
/// same indices: leq is inclusion, meet is intersection, join is the
/// generated subgroup. Node 0 is the trivial subgroup and the last node is G.
class SubgroupLatticeView {
public:
  const GroupPtr &group() const noexcept { return group_; }
  const Lattice &lattice() const noexcept { return lattice_; }
  const std::vector<Subgroup> &subgroups() const noexcept { return subgroups_; }
  const std::vector<SubgroupAnnotation> &annotations() const noexcept { return annotations_; }
  std::size_t size() const noexcept { return subgroups_.size(); }

  const Subgroup &subgroup(Node v) const { return subgroups_.at(v); }
  std::optional<Node> find(const Bitset &members) const;
  /// Throws DomainError when `h` is not a subgroup of this view's group.
  Node node_of(const Subgroup &h) const;

  std::vector<Node> normal_nodes() const;
  /// Lower covers of the top node.
  std::vector<Node> maximal_nodes() const;

private:
  friend SubgroupLatticeView enumerate_subgroups(const GroupPtr &g);

  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::vector<SubgroupAnnotation> annotations_;
  Lattice lattice_;
  std::unordered_map<Bitset, Node, BitsetHash> index_;
};

/// Bound on the number of subgroups an enumeration may produce (default 20000).
std::size_t max_lattice_nodes();
void set_max_lattice_nodes(std::size_t bound);

/// All subgroups, built bottom-up: cyclic subgroups first, then joins with
/// cyclic subgroups until nothing new appears. Throws ResourceError when
/// the group or the subgroup count exceeds its bound.
SubgroupLatticeView enumerate_subgroups(const GroupPtr &g);

/// [lo, hi] of the subgroup lattice. Throws DomainError unless lo <= hi.
Interval interval(const SubgroupLatticeView &view, Node lo, Node hi);

/// Always true for a finite group: every subgroup has finite index. Present
/// so finite groups and towers share one interface.
bool open_subgroup_test_finite(const SubgroupLatticeView &view, Node v);

/// Intersection of all maximal subgroups.
Subgroup frattini(const SubgroupLatticeView &view);
Subgroup frattini(const GroupPtr &g);

/// Annotation table: [{node, order, normal, cyclic, abelian}, ...].
std::string annotations_json(const SubgroupLatticeView &view);

} // namespace proflat
