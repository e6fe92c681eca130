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

#include "proflat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

#include "proflat/errors.hpp"

namespace proflat {

namespace {

constexpr Node kNone = ~Node{0};
constexpr std::size_t kExhaustiveAxiomCheck = 64;
constexpr std::size_t kSampledAxiomTriples = 4096;

void check_axioms(const Lattice &l) {
  const std::size_t n = l.size();
  auto check = [&](Node x, Node y, Node z) {
    bool ok = l.meet(x, y) == l.meet(y, x) && l.join(x, y) == l.join(y, x) &&
              l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)) &&
              l.join(l.join(x, y), z) == l.join(x, l.join(y, z)) && l.meet(x, x) == x &&
              l.join(x, x) == x && l.meet(x, l.join(x, y)) == x && l.join(x, l.meet(x, y)) == x;
    if (!ok) throw Error("internal: lattice axioms violated");
  };
  if (n <= kExhaustiveAxiomCheck) {
    for (Node x = 0; x < n; ++x)
      for (Node y = 0; y < n; ++y)
        for (Node z = 0; z < n; ++z) check(x, y, z);
    return;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Node> pick(0, static_cast<Node>(n - 1));
  for (std::size_t k = 0; k < kSampledAxiomTriples; ++k) check(pick(rng), pick(rng), pick(rng));
}

std::size_t last_common(const Bitset &a, const Bitset &b) {
  const auto &wa = a.words();
  const auto &wb = b.words();
  for (std::size_t k = wa.size(); k-- > 0;)
    if (Bitset::Word w = wa[k] & wb[k])
      return k * Bitset::kWordBits + Bitset::kWordBits - 1 -
             static_cast<std::size_t>(std::countl_zero(w));
  return a.size();
}

std::size_t first_common(const Bitset &a, const Bitset &b) {
  const auto &wa = a.words();
  const auto &wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k)
    if (Bitset::Word w = wa[k] & wb[k])
      return k * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(w));
  return a.size();
}

bool is_intersection(const Bitset &r, const Bitset &a, const Bitset &b) {
  const auto &wr = r.words();
  const auto &wa = a.words();
  const auto &wb = b.words();
  for (std::size_t k = 0; k < wr.size(); ++k)
    if (wr[k] != (wa[k] & wb[k])) return false;
  return true;
}

} // namespace

Lattice Lattice::from_order(std::vector<Bitset> below) {
  Lattice l;
  const std::size_t n = below.size();
  if (n == 0) throw DomainError("a lattice needs at least one element");
  if (n >= kNone) throw ResourceError("lattice too large");
  for (const auto &b : below)
    if (b.size() != n) throw DomainError("order relation rows have the wrong size");
  l.n_ = n;

  bool linear_extension = true;
  for (Node j = 0; j < n; ++j) {
    if (!below[j].test(j)) throw DomainError("order relation is not reflexive");
    if (below[j].last() != j) linear_extension = false;
    below[j].for_each([&](std::size_t i) {
      if (i != j && below[i].test(j))
        throw DomainError("order relation is not antisymmetric");
      if (!below[i].is_subset_of(below[j])) throw DomainError("order relation is not transitive");
    });
  }
  l.above_.assign(n, Bitset(n));
  for (Node j = 0; j < n; ++j) below[j].for_each([&](std::size_t i) { l.above_[i].set(j); });
  l.below_ = std::move(below);

  std::vector<std::size_t> down(n), up(n);
  for (Node i = 0; i < n; ++i) {
    down[i] = l.below_[i].count();
    up[i] = l.above_[i].count();
  }

  l.meet_.assign(n * n, kNone);
  l.join_.assign(n * n, kNone);
  for (Node a = 0; a < n; ++a) {
    for (Node b = a; b < n; ++b) {
      const Bitset &da = l.below_[a], &db = l.below_[b];
      const Bitset &ua = l.above_[a], &ub = l.above_[b];
      std::size_t m = n, j = n;
      if (linear_extension) {
        m = last_common(da, db);
        j = first_common(ua, ub);
      } else {
        std::size_t best = 0;
        (da & db).for_each([&](std::size_t c) {
          if (down[c] > best) best = down[c], m = c;
        });
        best = n + 1;
        (ua & ub).for_each([&](std::size_t c) {
          if (up[c] < best) best = up[c], j = c;
        });
      }
      if (m == n || !is_intersection(l.below_[m], da, db))
        throw DomainError("not a lattice: nodes " + std::to_string(a) + " and " +
                          std::to_string(b) + " have no meet");
      if (j == n || !is_intersection(l.above_[j], ua, ub))
        throw DomainError("not a lattice: nodes " + std::to_string(a) + " and " +
                          std::to_string(b) + " have no join");
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<Node>(m);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<Node>(j);
    }
  }
  l.bottom_ = l.meet_[0];
  l.top_ = l.join_[0];
  for (Node a = 1; a < n; ++a) {
    l.bottom_ = l.meet(l.bottom_, a);
    l.top_ = l.join(l.top_, a);
  }

  l.lower_covers_.assign(n, {});
  l.upper_covers_.assign(n, {});
  for (Node j = 0; j < n; ++j) {
    l.below_[j].for_each([&](std::size_t i) {
      if (i == j) return;
      if ((l.above_[i] & l.below_[j]).count() == 2) {
        l.lower_covers_[j].push_back(static_cast<Node>(i));
        l.upper_covers_[i].push_back(j);
      }
    });
  }

  // Ranks along a linear extension (ascending down-set size).
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), Node{0});
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) { return down[a] < down[b]; });
  l.rank_.assign(n, 0);
  for (Node v : order)
    for (Node c : l.lower_covers_[v]) l.rank_[v] = std::max(l.rank_[v], l.rank_[c] + 1);

  check_axioms(l);
  return l;
}

Lattice Lattice::from_leq(std::size_t n, const std::function<bool(Node, Node)> &leq) {
  std::vector<Bitset> below(n, Bitset(n));
  for (Node j = 0; j < n; ++j)
    for (Node i = 0; i < n; ++i)
      if (leq(i, j)) below[j].set(i);
  return from_order(std::move(below));
}

Lattice Lattice::from_covers(std::size_t n, std::span<const std::pair<Node, Node>> covers) {
  std::vector<std::vector<Node>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw DomainError("cover refers to a node outside 0.." +
                                              std::to_string(n ? n - 1 : 0));
    if (lo == hi) throw DomainError("cover relation contains a loop");
    succ[lo].push_back(hi);
    ++indegree[hi];
  }
  std::vector<Bitset> below(n, Bitset(n));
  std::vector<Node> ready;
  for (Node v = 0; v < n; ++v) {
    below[v].set(v);
    if (!indegree[v]) ready.push_back(v);
  }
  std::size_t processed = 0;
  while (!ready.empty()) {
    Node v = ready.back();
    ready.pop_back();
    ++processed;
    for (Node w : succ[v]) {
      below[w] |= below[v];
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (processed != n) throw DomainError("cover relation contains a cycle");
  return from_order(std::move(below));
}

std::vector<std::pair<Node, Node>> Lattice::covers() const {
  std::vector<std::pair<Node, Node>> out;
  for (Node i = 0; i < n_; ++i)
    for (Node j : upper_covers_[i]) out.emplace_back(i, j);
  std::sort(out.begin(), out.end());
  return out;
}

// --- standard lattices -------------------------------------------------------

Lattice chain(std::size_t n) {
  return Lattice::from_leq(n, [](Node a, Node b) { return a <= b; });
}

Lattice diamond(std::size_t k) {
  const std::size_t top = k + 1;
  return Lattice::from_leq(k + 2, [top](Node a, Node b) { return a == b || a == 0 || b == top; });
}

Lattice pentagon() {
  // 0 = bottom, 1 = a, 2 = c, 3 = b, 4 = top with a < b.
  return Lattice::from_leq(5, [](Node x, Node y) {
    return x == y || x == 0 || y == 4 || (x == 1 && y == 3);
  });
}

Lattice divisor_lattice(std::size_t n) {
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  return Lattice::from_leq(divisors.size(), [&](Node a, Node b) {
    return divisors[b] % divisors[a] == 0;
  });
}

Lattice product(const Lattice &left, const Lattice &right) {
  const std::size_t m = right.size();
  return Lattice::from_leq(left.size() * m, [&](Node u, Node v) {
    return left.leq(static_cast<Node>(u / m), static_cast<Node>(v / m)) &&
           right.leq(static_cast<Node>(u % m), static_cast<Node>(v % m));
  });
}

Interval interval(const Lattice &l, Node lo, Node hi) {
  if (lo >= l.size() || hi >= l.size()) throw DomainError("interval endpoint out of range");
  if (!l.leq(lo, hi)) throw DomainError("interval endpoints are not comparable (lo </= hi)");
  Interval iv;
  (l.above(lo) & l.below(hi)).for_each([&](std::size_t v) { iv.nodes.push_back(static_cast<Node>(v)); });
  const std::size_t n = iv.nodes.size();
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (l.leq(iv.nodes[i], iv.nodes[j])) below[j].set(i);
  iv.lattice = Lattice::from_order(std::move(below));
  return iv;
}

// --- identities ----------------------------------------------------------------

DistributivityCheck check_distributive(const Lattice &l) {
  const Node n = static_cast<Node>(l.size());
  for (Node x = 0; x < n; ++x)
    for (Node y = 0; y < n; ++y)
      for (Node z = y + 1; z < n; ++z)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), l.join(x, z)))
          return {false, Triple{x, y, z}};
  return {};
}

Pentagon pentagon_from_violation(const Lattice &l, const Triple &t) {
  const Node low = l.join(t.x, l.meet(t.y, t.z));
  const Node high = l.meet(l.join(t.x, t.y), t.z);
  return {l.meet(t.y, t.z), low, high, t.y, l.join(t.x, t.y)};
}

ModularityCheck check_modular(const Lattice &l) {
  const Node n = static_cast<Node>(l.size());
  for (Node z = 0; z < n; ++z) {
    const auto xs = l.below(z).members();
    for (Node y = 0; y < n; ++y) {
      if (l.leq(y, z) || l.leq(z, y)) continue; // both sides collapse
      const Node yz = l.meet(y, z);
      for (std::size_t xi : xs) {
        const Node x = static_cast<Node>(xi);
        if (l.join(x, yz) != l.meet(l.join(x, y), z)) {
          Triple t{x, y, z};
          return {false, t, pentagon_from_violation(l, t)};
        }
      }
    }
  }
  return {};
}

ModularElementCheck check_modular_element(const Lattice &l, Node m) {
  const Node n = static_cast<Node>(l.size());
  for (Node z = 0; z < n; ++z) {
    const Node mz = l.meet(m, z);
    bool failed = false;
    Node bad = 0;
    l.below(z).for_each([&](std::size_t xi) {
      if (failed) return;
      const Node x = static_cast<Node>(xi);
      if (l.join(x, mz) != l.meet(l.join(x, m), z)) failed = true, bad = x;
    });
    if (failed) return {false, 1, Triple{bad, m, z}};
  }
  for (Node z = 0; z < n; ++z) {
    if (!l.leq(m, z)) continue;
    for (Node y = 0; y < n; ++y)
      if (l.join(m, l.meet(y, z)) != l.meet(l.join(m, y), z)) return {false, 2, Triple{m, y, z}};
  }
  return {};
}

std::vector<bool> modular_elements(const Lattice &l) {
  // Both conditions are instances of the modular law.
  if (check_modular(l).holds) return std::vector<bool>(l.size(), true);
  std::vector<bool> out(l.size());
  for (Node m = 0; m < l.size(); ++m) out[m] = check_modular_element(l, m).holds;
  return out;
}

std::optional<Pentagon> find_pentagon(const Lattice &l) {
  const Node n = static_cast<Node>(l.size());
  for (Node b = 0; b < n; ++b) {
    for (std::size_t ai : l.below(b).members()) {
      const Node a = static_cast<Node>(ai);
      if (a == b) continue;
      for (Node c = 0; c < n; ++c) {
        if (l.comparable(c, a) || l.comparable(c, b)) continue;
        if (l.meet(a, c) == l.meet(b, c) && l.join(a, c) == l.join(b, c))
          return Pentagon{l.meet(a, c), a, b, c, l.join(a, c)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Diamond> find_diamond(const Lattice &l) {
  const Node n = static_cast<Node>(l.size());
  for (Node a = 0; a < n; ++a) {
    for (Node b = a + 1; b < n; ++b) {
      if (l.comparable(a, b)) continue;
      const Node lo = l.meet(a, b), hi = l.join(a, b);
      for (Node c = b + 1; c < n; ++c) {
        if (l.comparable(a, c) || l.comparable(b, c)) continue;
        if (l.meet(a, c) == lo && l.meet(b, c) == lo && l.join(a, c) == hi &&
            l.join(b, c) == hi)
          return Diamond{lo, a, b, c, hi};
      }
    }
  }
  return std::nullopt;
}

// --- width -------------------------------------------------------------------

bool is_antichain(const Lattice &l, std::span<const Node> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (l.comparable(nodes[i], nodes[j])) return false;
  return true;
}

namespace {

/// Hopcroft-Karp on the bipartite graph u -> v for u < v (left and right
/// copies of the nodes).
struct StrictOrderMatching {
  const Lattice &l;
  std::size_t n;
  std::vector<std::vector<Node>> adj;
  std::vector<Node> match_left, match_right;
  std::vector<int> dist;

  explicit StrictOrderMatching(const Lattice &lat)
      : l(lat), n(lat.size()), adj(n), match_left(n, kNone), match_right(n, kNone), dist(n) {
    for (Node u = 0; u < n; ++u)
      l.above(u).for_each([&](std::size_t v) {
        if (v != u) adj[u].push_back(static_cast<Node>(v));
      });
  }

  bool bfs() {
    std::queue<Node> q;
    bool found = false;
    for (Node u = 0; u < n; ++u) {
      if (match_left[u] == kNone) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = -1;
      }
    }
    while (!q.empty()) {
      Node u = q.front();
      q.pop();
      for (Node v : adj[u]) {
        Node w = match_right[v];
        if (w == kNone) {
          found = true;
        } else if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(Node u) {
    for (Node v : adj[u]) {
      Node w = match_right[v];
      if (w == kNone || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs())
      for (Node u = 0; u < n; ++u)
        if (match_left[u] == kNone && dfs(u)) ++size;
    return size;
  }
};

} // namespace

WidthResult width(const Lattice &l) {
  const std::size_t n = l.size();
  StrictOrderMatching m(l);
  const std::size_t matched = m.run();

  WidthResult out;
  out.width = n - matched;
  // Chains: follow matched edges from nodes with no matched predecessor.
  for (Node u = 0; u < n; ++u) {
    if (m.match_right[u] != kNone) continue;
    std::vector<Node> c;
    for (Node v = u; v != kNone; v = m.match_left[v]) c.push_back(v);
    out.chains.push_back(std::move(c));
  }
  // Koenig: Z = nodes reachable from unmatched left vertices along
  // alternating paths; the antichain is {x : x_left in Z, x_right not in Z}.
  std::vector<bool> z_left(n, false), z_right(n, false);
  std::vector<Node> stack;
  for (Node u = 0; u < n; ++u)
    if (m.match_left[u] == kNone) {
      z_left[u] = true;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    Node u = stack.back();
    stack.pop_back();
    for (Node v : m.adj[u]) {
      if (z_right[v]) continue;
      z_right[v] = true;
      Node w = m.match_right[v];
      if (w != kNone && !z_left[w]) {
        z_left[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (Node x = 0; x < n; ++x)
    if (z_left[x] && !z_right[x]) out.antichain.push_back(x);
  if (out.antichain.size() != out.width || !is_antichain(l, out.antichain))
    throw Error("internal: antichain extraction disagrees with the matching");
  return out;
}

// --- direct decomposition ------------------------------------------------------

bool is_direct_split(const Lattice &l, Node a, Node b) {
  if (l.meet(a, b) != l.bottom() || l.join(a, b) != l.top()) return false;
  if (l.below(a).count() * l.below(b).count() != l.size()) return false;
  for (Node x = 0; x < l.size(); ++x)
    if (l.join(l.meet(x, a), l.meet(x, b)) != x) return false;
  const auto us = l.below(a).members();
  const auto vs = l.below(b).members();
  for (std::size_t u : us)
    for (std::size_t v : vs) {
      Node j = l.join(static_cast<Node>(u), static_cast<Node>(v));
      if (l.meet(j, a) != u || l.meet(j, b) != v) return false;
    }
  return true;
}

std::optional<LatticeDecomposition> direct_decompose(const Lattice &l) {
  const std::size_t n = l.size();
  std::vector<Node> candidates;
  for (Node a = 0; a < n; ++a)
    if (a != l.bottom() && a != l.top()) candidates.push_back(a);
  // Smallest down-sets first: the first central element found is minimal,
  // so its down-set is an indecomposable factor.
  std::stable_sort(candidates.begin(), candidates.end(), [&](Node x, Node y) {
    return l.below(x).count() < l.below(y).count();
  });
  for (Node a : candidates) {
    const std::size_t da = l.below(a).count();
    if (n % da) continue;
    for (Node b : candidates) {
      if (l.below(b).count() != n / da || !is_direct_split(l, a, b)) continue;
      LatticeDecomposition d;
      d.factor_pairs.emplace_back(a, b);
      d.factors.push_back(a);
      Interval rest = interval(l, l.bottom(), b);
      if (auto sub = direct_decompose(rest.lattice)) {
        for (auto [x, y] : sub->factor_pairs) d.factor_pairs.emplace_back(rest.nodes[x], rest.nodes[y]);
        for (Node f : sub->factors) d.factors.push_back(rest.nodes[f]);
      } else {
        d.factors.push_back(b);
      }
      return d;
    }
  }
  return std::nullopt;
}

// --- isomorphisms --------------------------------------------------------------

namespace {

struct Signature {
  std::size_t rank, lower, upper, down, up;
  friend bool operator==(const Signature &, const Signature &) = default;
};

Signature signature(const Lattice &l, Node v) {
  return {l.rank(v), l.lower_covers(v).size(), l.upper_covers(v).size(), l.below(v).count(),
          l.above(v).count()};
}

} // namespace

std::vector<std::vector<Node>> find_isomorphisms(const Lattice &l1, const Lattice &l2,
                                                 std::size_t limit, std::size_t max_size) {
  if (l1.size() > max_size || l2.size() > max_size)
    throw ResourceError("isomorphism search limited to lattices of size " +
                        std::to_string(max_size));
  std::vector<std::vector<Node>> found;
  const std::size_t n = l1.size();
  if (n != l2.size() || limit == 0) return found;

  std::vector<Signature> s1(n), s2(n);
  for (Node v = 0; v < n; ++v) {
    s1[v] = signature(l1, v);
    s2[v] = signature(l2, v);
  }
  std::vector<std::vector<Node>> candidates(n);
  for (Node v = 0; v < n; ++v)
    for (Node w = 0; w < n; ++w)
      if (s1[v] == s2[w]) candidates[v].push_back(w);

  std::vector<Node> image(n, kNone);
  std::vector<bool> used(n, false);
  auto extend = [&](auto &self, Node v) -> void {
    if (found.size() >= limit) return;
    if (v == n) {
      found.push_back(image);
      return;
    }
    for (Node w : candidates[v]) {
      if (used[w]) continue;
      bool ok = true;
      for (Node u = 0; u < v && ok; ++u)
        ok = l1.leq(u, v) == l2.leq(image[u], w) && l1.leq(v, u) == l2.leq(w, image[u]);
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
      image[v] = kNone;
    }
  };
  extend(extend, 0);
  return found;
}

// --- exchange format -----------------------------------------------------------

std::string to_exchange(const Lattice &l) {
  std::ostringstream out;
  out << "size " << l.size() << '\n';
  for (auto [a, b] : l.covers()) out << "cover " << a << ' ' << b << '\n';
  return out.str();
}

Lattice parse_exchange(std::string_view text) {
  std::optional<std::size_t> size;
  std::vector<std::pair<Node, Node>> covers;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    std::string line(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string keyword;
    if (!(in >> keyword)) continue;
    last_line = line_no;
    if (keyword == "size") {
      std::size_t n;
      if (size) throw ParseError("duplicate size line", line_no);
      if (!(in >> n) || n == 0) throw ParseError("expected a positive node count", line_no);
      size = n;
    } else if (keyword == "cover") {
      if (!size) throw ParseError("cover before size", line_no);
      long long a, b;
      if (!(in >> a >> b)) throw ParseError("expected two node indices", line_no);
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= *size ||
          static_cast<std::size_t>(b) >= *size)
        throw ParseError("node index out of range", line_no);
      covers.emplace_back(static_cast<Node>(a), static_cast<Node>(b));
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line_no);
    }
    std::string extra;
    if (in >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
  }
  if (!size) throw ParseError("missing size line", line_no);
  try {
    return Lattice::from_covers(*size, covers);
  } catch (const DomainError &e) {
    throw ParseError(e.what(), last_line);
  }
}

} // namespace proflat
