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

#include "proflat/subgroup_lattice.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include <json.hpp>

#include "proflat/errors.hpp"

namespace proflat {

namespace {

constexpr std::size_t kExhaustiveJoinCheck = 128;

std::atomic<std::size_t> &node_bound() {
  static std::atomic<std::size_t> bound{20000};
  return bound;
}

bool has_element_of_order(const Subgroup &h, std::size_t order) {
  const GroupPtr &G = h.parent();
  bool found = false;
  h.members().for_each([&](std::size_t x) {
    if (G->element_order(static_cast<Elem>(x)) == order) found = true;
  });
  return found;
}

} // namespace

std::size_t max_lattice_nodes() { return node_bound().load(); }
void set_max_lattice_nodes(std::size_t bound) { node_bound().store(bound); }

std::optional<Node> SubgroupLatticeView::find(const Bitset &members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Node SubgroupLatticeView::node_of(const Subgroup &h) const {
  if (h.parent() != group_) throw DomainError("subgroup belongs to a different group");
  auto v = find(h.members());
  if (!v) throw Error("internal: subgroup missing from enumeration");
  return *v;
}

std::vector<Node> SubgroupLatticeView::normal_nodes() const {
  std::vector<Node> out;
  for (Node v = 0; v < size(); ++v)
    if (annotations_[v].normal) out.push_back(v);
  return out;
}

std::vector<Node> SubgroupLatticeView::maximal_nodes() const {
  return lattice_.lower_covers(lattice_.top());
}

SubgroupLatticeView enumerate_subgroups(const GroupPtr &g) {
  if (g->order() > max_group_order())
    throw ResourceError("group order exceeds the order bound " +
                        std::to_string(max_group_order()) + " (PROFLAT_MAX_ORDER)");
  const std::size_t bound = max_lattice_nodes();

  std::vector<Subgroup> found;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto add = [&](Subgroup s) {
    if (!seen.insert(s.members()).second) return;
    if (found.size() >= bound)
      throw ResourceError("subgroup count exceeds the lattice bound " + std::to_string(bound));
    found.push_back(std::move(s));
  };

  // Subgroups are found one conjugacy class at a time: only a representative
  // of each class is joined with the cyclic subgroups, and every new join
  // brings its whole class along.
  std::vector<std::size_t> reps;
  auto add_class = [&](const Subgroup &s) {
    if (seen.contains(s.members())) return;
    const std::size_t start = found.size();
    reps.push_back(start);
    add(s);
    for (std::size_t i = start; i < found.size(); ++i)
      for (Elem t : g->generator_elements()) {
        Subgroup c = conjugate(found[i], t);
        if (!seen.contains(c.members())) add(std::move(c));
      }
  };

  const Subgroup one = trivial_subgroup(g);
  add_class(one);
  std::vector<Elem> cyclic_generators;
  std::unordered_set<Bitset, BitsetHash> cyclic_seen;
  for (Elem x = 1; x < g->order(); ++x) {
    Subgroup c = closure(one, x);
    if (!cyclic_seen.insert(c.members()).second) continue;
    cyclic_generators.push_back(x);
    add_class(c);
  }
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const Subgroup h = found[reps[r]];
    const auto h_elems = h.elements();
    // <H, x> = <H, hx> for h in H, so one element per right coset suffices.
    Bitset done(g->order());
    for (Elem x : cyclic_generators) {
      if (h.contains(x) || done.test(x)) continue;
      for (Elem e : h_elems) done.set(g->mul(e, x));
      add_class(closure(h, x));
    }
  }
  std::sort(found.begin(), found.end());

  SubgroupLatticeView view;
  view.group_ = g;
  const std::size_t n = found.size();
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (found[i].is_subgroup_of(found[j])) below[j].set(i);
  view.lattice_ = Lattice::from_order(std::move(below));
  for (Node v = 0; v < n; ++v) view.index_.emplace(found[v].members(), v);

  const Lattice &l = view.lattice_;
  for (Node a = 0; a < n; ++a)
    for (Node b = a + 1; b < n; ++b)
      if (!(found[l.meet(a, b)].members() == (found[a].members() & found[b].members())))
        throw Error("internal: lattice meet differs from intersection");
  if (n <= kExhaustiveJoinCheck) {
    for (Node a = 0; a < n; ++a)
      for (Node b = a + 1; b < n; ++b)
        if (!(found[l.join(a, b)] == join(found[a], found[b])))
          throw Error("internal: lattice join differs from generated subgroup");
  }

  view.annotations_.resize(n);
  for (Node v = 0; v < n; ++v) {
    auto &a = view.annotations_[v];
    a.order = found[v].order();
    a.normal = is_normal(found[v]);
    a.abelian = is_abelian(found[v]);
    a.cyclic = has_element_of_order(found[v], a.order);
  }
  view.subgroups_ = std::move(found);
  return view;
}

Interval interval(const SubgroupLatticeView &view, Node lo, Node hi) {
  return interval(view.lattice(), lo, hi);
}

bool open_subgroup_test_finite(const SubgroupLatticeView &view, Node v) {
  if (v >= view.size()) throw DomainError("node out of range");
  return true;
}

Subgroup frattini(const SubgroupLatticeView &view) {
  Bitset m = view.subgroup(view.lattice().top()).members();
  for (Node v : view.maximal_nodes()) m &= view.subgroup(v).members();
  auto node = view.find(m);
  if (!node) throw Error("internal: intersection of maximal subgroups not enumerated");
  return view.subgroup(*node);
}

Subgroup frattini(const GroupPtr &g) { return frattini(enumerate_subgroups(g)); }

std::string annotations_json(const SubgroupLatticeView &view) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Node v = 0; v < view.size(); ++v) {
    const auto &a = view.annotations()[v];
    rows.push_back({{"node", v},
                    {"order", a.order},
                    {"normal", a.normal},
                    {"cyclic", a.cyclic},
                    {"abelian", a.abelian}});
  }
  return rows.dump();
}

} // namespace proflat
