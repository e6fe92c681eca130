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
#include <string>
#include <string_view>
#include <vector>

#include "proflat/group.hpp"

namespace proflat {

/// What the inverse limit of a bundled tower is known to look like, recorded
/// when the tower is built. `structure3` means K |x T with K the p-adic
/// integers acting on a finite p'-group T (T may be trivial).
struct LimitShape {
  enum class Kind { finite, structure3, other };
  Kind kind = Kind::other;
  unsigned p = 0;
};
const char *to_string(LimitShape::Kind k);

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// A finite inverse system G_1 <- G_2 <- ... <- G_d with surjective
/// connecting maps, modelling a profinite group to depth d.
class Tower {
public:
  /// maps[k] : levels[k + 1] -> levels[k]. Throws ConstructionError unless
  /// every map is a surjective homomorphism between consecutive levels.
  static TowerPtr make(std::string name, std::vector<GroupPtr> levels,
                       std::vector<Homomorphism> maps, LimitShape shape = {});

  const std::string &name() const noexcept { return name_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  /// Level k, 1-based.
  const GroupPtr &level(std::size_t k) const { return levels_.at(k - 1); }
  /// The map G_{k+1} -> G_k, for 1 <= k < depth.
  const Homomorphism &map(std::size_t k) const { return maps_.at(k - 1); }
  const std::vector<GroupPtr> &levels() const noexcept { return levels_; }
  const LimitShape &shape() const noexcept { return shape_; }

  /// The first `d` levels.
  TowerPtr truncated(std::size_t d) const;

private:
  Tower() = default;

  std::string name_;
  std::vector<GroupPtr> levels_;
  std::vector<Homomorphism> maps_;
  LimitShape shape_;
};

/// A closed subgroup of the limit, modelled as subgroups H_k <= G_k with
/// map_k(H_{k+1}) = H_k at every level.
class CoherentSubgroup {
public:
  /// Determined by its top level: H_k is the image of H_d.
  static CoherentSubgroup from_top(TowerPtr tower, const Subgroup &top);
  /// Throws ConstructionError unless consecutive members satisfy image equality.
  static CoherentSubgroup from_levels(TowerPtr tower, std::vector<Subgroup> members);

  const TowerPtr &tower() const noexcept { return tower_; }
  /// H_k, 1-based.
  const Subgroup &level(std::size_t k) const { return members_.at(k - 1); }
  const std::vector<Subgroup> &members() const noexcept { return members_; }
  /// |G_k : H_k| for k = 1..d.
  std::vector<std::size_t> indices() const;

private:
  CoherentSubgroup() = default;

  TowerPtr tower_;
  std::vector<Subgroup> members_;
};

/// One coherent subgroup per subgroup of the top level, in canonical order.
std::vector<CoherentSubgroup> coherent_subgroups(const TowerPtr &tower);

struct OpenReport {
  bool open = false;
  /// Index at depth d, and the first level from which it is constant.
  std::size_t index = 0;
  std::size_t stable_from = 0;
  std::size_t certified_depth = 0;
};
/// Index stabilization: open at depth d iff the index agrees at levels
/// d - 1 and d (trivially at depth 1).
OpenReport is_open(const CoherentSubgroup &h);

bool is_procyclic(const Tower &t);
std::vector<unsigned> pi_star(const Tower &t);
/// H_k K_k = K_k H_k at every level. Throws DomainError for subgroups of
/// different towers.
bool permutable_in_limit(const CoherentSubgroup &h, const CoherentSubgroup &k);

enum class TrajectoryPredicate { width, distributive, modular, decomposable };
std::optional<TrajectoryPredicate> parse_trajectory_predicate(std::string_view s);
const char *to_string(TrajectoryPredicate p);

enum class Verdict { stabilized, monotone_unbounded, inconclusive };
const char *to_string(Verdict v);

struct TrajectoryReport {
  TrajectoryPredicate predicate = TrajectoryPredicate::width;
  /// Width, or 0/1 for the boolean predicates, one entry per computed level.
  std::vector<std::int64_t> values;
  Verdict verdict = Verdict::inconclusive;
  /// Set when a level exceeded a resource bound; values stop before it.
  bool truncated = false;
  std::string truncation_reason;
  std::size_t depth = 0;
};
/// Evaluates the predicate on L(G_k) for each level. The verdict looks at the
/// last max(2, ceil(d/2)) values: constant -> stabilized; strictly
/// increasing there and non-decreasing overall -> monotone-unbounded.
TrajectoryReport level_lattice_trajectory(const Tower &t, TrajectoryPredicate p);
Verdict trajectory_verdict(const std::vector<std::int64_t> &values, bool boolean);
/// "[2,3,4,5] monotone-unbounded", "[true,true] stabilized"; a truncated
/// report ends with " (truncated at level k: reason)".
std::string format_trajectory(const TrajectoryReport &r);

// --- constructors ----------------------------------------------------------

/// Levels C_{p^k}.
TowerPtr zp_tower(unsigned p, std::size_t d);
/// Levels C_{n^k}.
TowerPtr cyclic_tower(unsigned n, std::size_t d);
/// Levels C_{p^k} |x T, the generator acting on the abelian group T by
/// t -> t^e. Throws ConstructionError when e^(p^k) is not 1 on T.
TowerPtr semidirect_tower(unsigned p, std::size_t d, const GroupPtr &t, long long e);
/// Levels C_2 |x C_{p^k}, the involution inverting.
TowerPtr inversion_tower(unsigned p, std::size_t d);
/// Levels C_{p^m} |x C_{p^m} with a^x = a^(1 + p^k).
TowerPtr type_iv_tower(unsigned p, unsigned k, std::size_t d);
/// Levelwise direct products with componentwise maps.
TowerPtr product_tower(const TowerPtr &a, const TowerPtr &b, std::string name = {});
/// G at every level with identity maps.
TowerPtr constant_tower(const GroupPtr &g, std::size_t d);

/// Names accepted by builtin_tower.
std::vector<std::string> builtin_tower_names();
/// Throws DomainError for an unknown name.
TowerPtr builtin_tower(std::string_view name, std::size_t d = 4);

/// Tower description:
///   tower <name>; depth <d>; [shape finite|structure3 <p>|other;]
///   level <k>; name <X>; degree <n>; gens <cycles>; ...
///   map <k>; images <cycles>; ...
/// A map line gives the images in G_{k-1} of the generators of G_k.
/// '#' starts a comment. Throws ParseError with the line number.
TowerPtr parse_tower(std::string_view text);
std::string format_tower(const Tower &t);

} // namespace proflat
