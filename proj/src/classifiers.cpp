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

#include "proflat/classifiers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "proflat/errors.hpp"

namespace proflat {

namespace {

bool in_cyclic(const FiniteGroup &g, Elem a, Elem x) {
  Elem y = FiniteGroup::identity();
  for (std::size_t i = 0; i < g.element_order(a); ++i) {
    if (y == x) return true;
    y = g.mul(y, a);
  }
  return false;
}

std::size_t prime_part(std::size_t n, unsigned p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_elementary_abelian(const Subgroup &h, unsigned p) {
  if (!is_abelian(h)) return false;
  const FiniteGroup &g = *h.parent();
  bool ok = true;
  h.members().for_each([&](std::size_t e) {
    if (e != 0 && g.element_order(static_cast<Elem>(e)) != p) ok = false;
  });
  return ok;
}

// Exponent e with t^-1 a t = a^e for a nontrivial a in `a`; assumes the
// conjugation is a universal power map.
long long power_exponent(const Subgroup &a, Elem t) {
  const FiniteGroup &g = *a.parent();
  for (Elem x : a.elements()) {
    if (x == 0) continue;
    Elem target = g.conj(x, t);
    Elem y = FiniteGroup::identity();
    for (std::size_t e = 0; e < g.element_order(x); ++e) {
      if (y == target) return static_cast<long long>(e);
      y = g.mul(y, x);
    }
  }
  return 1;
}

bool universal_power(const Subgroup &a, Elem t, long long e) {
  const FiniteGroup &g = *a.parent();
  for (Elem x : a.generators())
    if (g.conj(x, t) != g.pow(x, e)) return false;
  return true;
}

std::size_t multiplicative_order(long long e, long long mod) {
  e %= mod;
  if (e < 0) e += mod;
  long long x = e;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(mod); ++k) {
    if (x == 1 % mod) return k;
    x = x * e % mod;
  }
  return 0;
}

std::optional<Elem> first_element_of_order(const FiniteGroup &g, std::size_t ord) {
  for (Elem e = 0; e < g.order(); ++e)
    if (g.element_order(e) == ord) return e;
  return std::nullopt;
}

bool normal_in(const Subgroup &h, const Subgroup &k) {
  const FiniteGroup &g = *h.parent();
  for (Elem x : k.generators())
    for (Elem y : h.generators())
      if (!h.contains(g.conj(y, x))) return false;
  return true;
}

} // namespace

bool is_cyclic(const FiniteGroup &g) {
  return first_element_of_order(g, g.order()).has_value();
}

bool is_power_automorphism(const Subgroup &a, Elem t) {
  const FiniteGroup &g = *a.parent();
  for (Elem x : a.elements())
    if (!in_cyclic(g, x, g.conj(x, t))) return false;
  return true;
}

std::optional<PGroupCertificate> is_P_group(const GroupPtr &g) {
  const std::size_t n = g->order();
  const auto primes = pi(*g);
  if (primes.size() == 1) {
    const unsigned p = primes[0];
    Subgroup w = whole_group(g);
    if (n > p && is_elementary_abelian(w, p))
      return PGroupCertificate{PGroupCertificate::Kind::elementary_abelian, p, 0, w, 0, 1};
    return std::nullopt;
  }
  if (primes.size() != 2) return std::nullopt;
  for (int swap = 0; swap < 2; ++swap) {
    const unsigned p = primes[swap], q = primes[1 - swap];
    if (prime_part(n, q) != q) continue;
    Subgroup a = sylow(g, p);
    if (!is_normal(a) || !is_elementary_abelian(a, p)) continue;
    auto t = first_element_of_order(*g, q);
    if (!t || !is_power_automorphism(a, *t)) continue;
    const long long e = power_exponent(a, *t);
    if (e % p == 1 % p) continue;
    if (!universal_power(a, *t, e)) continue;
    return PGroupCertificate{PGroupCertificate::Kind::semidirect, p, q, a, *t, e};
  }
  return std::nullopt;
}

std::optional<PStarCertificate> is_Pstar_group(const GroupPtr &g) {
  const std::size_t n = g->order();
  const auto primes = pi(*g);
  if (primes.size() != 2) return std::nullopt;
  for (int swap = 0; swap < 2; ++swap) {
    const unsigned p = primes[swap], q = primes[1 - swap];
    const std::size_t qm = prime_part(n, q);
    Subgroup a = sylow(g, p);
    if (!is_normal(a) || !is_elementary_abelian(a, p)) continue;
    auto t = first_element_of_order(*g, qm);
    if (!t || !is_power_automorphism(a, *t)) continue;
    const long long e = power_exponent(a, *t);
    if (!universal_power(a, *t, e)) continue;
    const std::size_t ord = multiplicative_order(e, p);
    if (ord != q) continue;
    return PStarCertificate{p, q, a, *t, qm, e, ord};
  }
  return std::nullopt;
}

std::optional<IwasawaTriple> find_iwasawa_triple(const GroupPtr &g) {
  auto pp = p_group_prime(g->order());
  if (!pp) throw DomainError("find_iwasawa_triple: " + g->name() + " is not a p-group");
  const unsigned p = *pp;
  const FiniteGroup &G = *g;
  const SubgroupLatticeView view = enumerate_subgroups(g);
  const unsigned s_min = p == 2 ? 2 : 1;
  for (Node v = 0; v < view.size(); ++v) {
    const auto &ann = view.annotations()[v];
    if (!ann.normal || !ann.abelian) continue;
    const Subgroup &a = view.subgroup(v);
    std::size_t exp = 1;
    for (Elem x : a.elements()) exp = std::max(exp, G.element_order(x));
    unsigned s_max = 0;
    for (std::size_t pw = 1; pw < exp; pw *= p) ++s_max;
    s_max = std::max(s_max, s_min);
    for (Elem b = 0; b < G.order(); ++b) {
      const std::size_t ob = G.element_order(b);
      std::size_t meet = 0;
      Elem y = FiniteGroup::identity();
      for (std::size_t i = 0; i < ob; ++i, y = G.mul(y, b))
        if (a.contains(y)) ++meet;
      if (a.order() * ob != G.order() * meet) continue;
      long long ps = 1;
      for (unsigned s = 1; s <= s_max; ++s) {
        ps *= p;
        if (s < s_min) continue;
        if (universal_power(a, b, 1 + ps)) return IwasawaTriple{p, a, b, s};
      }
    }
  }
  return std::nullopt;
}

bool is_hamiltonian(const GroupPtr &g) {
  const FiniteGroup &G = *g;
  if (is_abelian(G)) return false;
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem t : G.generator_elements())
      if (!in_cyclic(G, x, G.conj(x, t))) return false;
  return true;
}

bool is_modular_p_group_structural(const GroupPtr &g) {
  if (!p_group_prime(g->order()))
    throw DomainError("is_modular_p_group_structural: " + g->name() + " is not a p-group");
  if (is_abelian(*g) || is_hamiltonian(g)) return true;
  return find_iwasawa_triple(g).has_value();
}

std::vector<Subgroup> finest_coprime_factors(const GroupPtr &g) {
  const auto primes = pi(*g);
  const std::size_t k = primes.size();
  if (k <= 1) return {whole_group(g)};
  const std::uint32_t full = (1u << k) - 1;
  std::vector<std::optional<Subgroup>> hall(full + 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<unsigned> set;
    std::size_t part = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        set.push_back(primes[i]);
        part *= prime_part(g->order(), primes[i]);
      }
    Subgroup h = generated_by_pi_elements(g, set);
    if (h.order() == part) hall[mask] = h;
  }
  auto splits = [&](std::uint32_t m) {
    return m == full || (hall[m] && hall[full ^ m]);
  };
  // Splitting sets are closed under intersection and complement, so the
  // minimal ones partition the primes.
  std::vector<Subgroup> out;
  std::uint32_t covered = 0;
  for (std::uint32_t m = 1; m <= full; ++m) {
    if (!splits(m) || (m & covered)) continue;
    bool minimal = true;
    for (std::uint32_t sub = (m - 1) & m; sub; sub = (sub - 1) & m)
      if (splits(sub)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    covered |= m;
    out.push_back(m == full ? whole_group(g) : *hall[m]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CoprimeDecomposition> coprime_direct_decomposition(const GroupPtr &g) {
  auto f = finest_coprime_factors(g);
  if (f.size() < 2) return std::nullopt;
  return CoprimeDecomposition{std::move(f)};
}

const char *to_string(ModularFactor::Kind k) {
  switch (k) {
  case ModularFactor::Kind::abelian: return "abelian";
  case ModularFactor::Kind::pstar: return "P*-group";
  case ModularFactor::Kind::modular_p_group: return "modular p-group";
  case ModularFactor::Kind::other: break;
  }
  return "other";
}

ModularStructure modular_structure(const GroupPtr &g) {
  ModularStructure out;
  out.holds = true;
  for (const Subgroup &f : finest_coprime_factors(g)) {
    ModularFactor mf{f, ModularFactor::Kind::other};
    if (is_abelian(f)) {
      mf.kind = ModularFactor::Kind::abelian;
    } else {
      GroupPtr fg = as_group(f).group;
      if (p_group_prime(fg->order())) {
        if (is_modular_p_group_structural(fg)) mf.kind = ModularFactor::Kind::modular_p_group;
      } else if (is_Pstar_group(fg)) {
        mf.kind = ModularFactor::Kind::pstar;
      }
    }
    if (mf.kind == ModularFactor::Kind::other) out.holds = false;
    out.factors.push_back(std::move(mf));
  }
  return out;
}

bool permutes_in_lattice(const SubgroupLatticeView &view, Node h, Node k) {
  const Lattice &l = view.lattice();
  const auto &a = view.annotations();
  return a[l.join(h, k)].order * a[l.meet(h, k)].order == a[h].order * a[k].order;
}

bool is_permutable(const SubgroupLatticeView &view, Node h) {
  for (Node k = 0; k < view.size(); ++k)
    if (!permutes_in_lattice(view, h, k)) return false;
  return true;
}

ModularElementStructure modular_element_structure_check(const SubgroupLatticeView &view,
                                                        Node m) {
  if (m >= view.size()) throw DomainError("modular_element_structure_check: node out of range");
  const Subgroup &M = view.subgroup(m);
  const Node top = static_cast<Node>(view.size() - 1);
  if (view.annotations()[m].normal) {
    ModularElementCertificate c;
    c.core = m;
    c.t = top;
    c.m_cap_t = m;
    return {true, c};
  }
  const Subgroup core = normal_core(M);
  const Quotient q = quotient(core);
  const GroupPtr &gb = q.group;
  const Subgroup mbar = q.projection.image(M);
  const auto factors = finest_coprime_factors(gb);

  struct Candidate {
    std::size_t factor;
    unsigned p, r;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Subgroup &f = factors[i];
    if (is_abelian(f)) continue;
    auto cert = is_P_group(as_group(f).group);
    if (!cert || cert->kind != PGroupCertificate::Kind::semidirect) continue;
    const Subgroup mf = intersection(mbar, f);
    unsigned r = 0;
    for (unsigned pr : prime_factors(f.order()))
      if (mf.order() == prime_part(f.order(), pr)) r = pr;
    if (r == 0 || normal_in(mf, f)) continue;
    cands.push_back({i, cert->p, r});
  }

  const std::uint32_t limit = 1u << cands.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<bool> in_i(factors.size(), false);
    for (std::size_t c = 0; c < cands.size(); ++c)
      if (mask >> c & 1) in_i[cands[c].factor] = true;
    Subgroup tbar = trivial_subgroup(gb);
    std::size_t prod = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (in_i[i])
        prod *= intersection(mbar, factors[i]).order();
      else
        tbar = join(tbar, factors[i]);
    }
    if (mbar.order() != prod * intersection(mbar, tbar).order()) continue;
    const Subgroup t = q.projection.preimage(tbar);
    const Node tn = view.node_of(t);
    const Node mt = view.lattice().meet(m, tn);
    if (!is_permutable(view, mt)) continue;
    ModularElementCertificate c;
    c.core = view.node_of(core);
    c.t = tn;
    c.m_cap_t = mt;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      if (!(mask >> ci & 1)) continue;
      const Subgroup &f = factors[cands[ci].factor];
      const Node s = view.node_of(q.projection.preimage(f));
      c.pieces.push_back({s, view.lattice().meet(m, s), cands[ci].p, cands[ci].r});
    }
    return {true, c};
  }
  return {false, std::nullopt};
}

} // namespace proflat
