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

#include "proflat/tower.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "proflat/catalogue_format.hpp"
#include "proflat/classifiers.hpp"
#include "proflat/constructors.hpp"
#include "proflat/errors.hpp"
#include "proflat/lattice.hpp"
#include "proflat/subgroup_lattice.hpp"

namespace proflat {

const char *to_string(LimitShape::Kind k) {
  switch (k) {
  case LimitShape::Kind::finite: return "finite";
  case LimitShape::Kind::structure3: return "structure3";
  case LimitShape::Kind::other: break;
  }
  return "other";
}

TowerPtr Tower::make(std::string name, std::vector<GroupPtr> levels,
                     std::vector<Homomorphism> maps, LimitShape shape) {
  if (levels.empty()) throw ConstructionError("tower " + name + ": depth must be at least 1");
  if (maps.size() + 1 != levels.size())
    throw ConstructionError("tower " + name + ": need one map per consecutive pair of levels");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const std::string where = "tower " + name + ": map " + std::to_string(k + 2) + " -> " +
                              std::to_string(k + 1);
    if (maps[k].source() != levels[k + 1] || maps[k].target() != levels[k])
      throw ConstructionError(where + " does not connect consecutive levels");
    if (!maps[k].is_surjective()) throw ConstructionError(where + " is not surjective");
  }
  auto t = std::shared_ptr<Tower>(new Tower());
  t->name_ = std::move(name);
  t->levels_ = std::move(levels);
  t->maps_ = std::move(maps);
  t->shape_ = shape;
  return t;
}

TowerPtr Tower::truncated(std::size_t d) const {
  if (d == 0 || d > depth())
    throw DomainError("tower " + name_ + " has depth " + std::to_string(depth()) +
                      ", cannot truncate to " + std::to_string(d));
  return make(name_, {levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(d)},
              {maps_.begin(), maps_.begin() + static_cast<std::ptrdiff_t>(d - 1)}, shape_);
}

// --- coherent subgroups ------------------------------------------------------

CoherentSubgroup CoherentSubgroup::from_top(TowerPtr tower, const Subgroup &top) {
  const std::size_t d = tower->depth();
  if (top.parent() != tower->level(d))
    throw DomainError("subgroup is not a subgroup of the top level of tower " + tower->name());
  std::vector<Subgroup> members(d, top);
  for (std::size_t k = d - 1; k >= 1; --k) members[k - 1] = tower->map(k).image(members[k]);
  CoherentSubgroup h;
  h.tower_ = std::move(tower);
  h.members_ = std::move(members);
  return h;
}

CoherentSubgroup CoherentSubgroup::from_levels(TowerPtr tower, std::vector<Subgroup> members) {
  if (members.size() != tower->depth())
    throw ConstructionError("coherent subgroup needs one member per level");
  for (std::size_t k = 1; k <= members.size(); ++k)
    if (members[k - 1].parent() != tower->level(k))
      throw ConstructionError("member " + std::to_string(k) + " is not a subgroup of level " +
                              std::to_string(k));
  for (std::size_t k = 1; k < members.size(); ++k)
    if (!(tower->map(k).image(members[k]) == members[k - 1]))
      throw ConstructionError("level " + std::to_string(k + 1) + " does not map onto level " +
                              std::to_string(k));
  CoherentSubgroup h;
  h.tower_ = std::move(tower);
  h.members_ = std::move(members);
  return h;
}

std::vector<std::size_t> CoherentSubgroup::indices() const {
  std::vector<std::size_t> out;
  for (const auto &m : members_) out.push_back(m.parent()->order() / m.order());
  return out;
}

std::vector<CoherentSubgroup> coherent_subgroups(const TowerPtr &tower) {
  const SubgroupLatticeView view = enumerate_subgroups(tower->level(tower->depth()));
  std::vector<CoherentSubgroup> out;
  out.reserve(view.size());
  for (const Subgroup &h : view.subgroups()) out.push_back(CoherentSubgroup::from_top(tower, h));
  return out;
}

OpenReport is_open(const CoherentSubgroup &h) {
  const auto idx = h.indices();
  const std::size_t d = idx.size();
  OpenReport r;
  r.index = idx.back();
  r.certified_depth = d;
  r.open = d == 1 || idx[d - 2] == idx[d - 1];
  r.stable_from = d;
  while (r.stable_from > 1 && idx[r.stable_from - 2] == idx.back()) --r.stable_from;
  return r;
}

bool is_procyclic(const Tower &t) {
  return std::all_of(t.levels().begin(), t.levels().end(),
                     [](const GroupPtr &g) { return is_cyclic(*g); });
}

std::vector<unsigned> pi_star(const Tower &t) {
  std::set<unsigned> primes;
  for (const auto &g : t.levels())
    for (unsigned p : pi(*g)) primes.insert(p);
  return {primes.begin(), primes.end()};
}

bool permutable_in_limit(const CoherentSubgroup &h, const CoherentSubgroup &k) {
  if (h.tower() != k.tower())
    throw DomainError("permutable_in_limit: subgroups of different towers");
  for (std::size_t l = 1; l <= h.tower()->depth(); ++l)
    if (!permutes(h.level(l), k.level(l))) return false;
  return true;
}

// --- trajectories --------------------------------------------------------------

std::optional<TrajectoryPredicate> parse_trajectory_predicate(std::string_view s) {
  if (s == "width") return TrajectoryPredicate::width;
  if (s == "distributive") return TrajectoryPredicate::distributive;
  if (s == "modular") return TrajectoryPredicate::modular;
  if (s == "decomposable") return TrajectoryPredicate::decomposable;
  return std::nullopt;
}

const char *to_string(TrajectoryPredicate p) {
  switch (p) {
  case TrajectoryPredicate::width: return "width";
  case TrajectoryPredicate::distributive: return "distributive";
  case TrajectoryPredicate::modular: return "modular";
  case TrajectoryPredicate::decomposable: return "decomposable";
  }
  return "?";
}

const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::stabilized: return "stabilized";
  case Verdict::monotone_unbounded: return "monotone-unbounded";
  case Verdict::inconclusive: break;
  }
  return "inconclusive";
}

Verdict trajectory_verdict(const std::vector<std::int64_t> &values, bool boolean) {
  const std::size_t n = values.size();
  if (n < 2) return Verdict::inconclusive;
  const std::size_t window = std::min(n, std::max<std::size_t>(2, (n + 1) / 2));
  const auto tail = values.end() - static_cast<std::ptrdiff_t>(window);
  if (std::all_of(tail, values.end(), [&](std::int64_t v) { return v == values.back(); }))
    return Verdict::stabilized;
  if (boolean) return Verdict::inconclusive;
  bool increasing = std::adjacent_find(tail, values.end(), std::greater_equal<>()) == values.end();
  bool nondecreasing = std::is_sorted(values.begin(), values.end());
  return increasing && nondecreasing ? Verdict::monotone_unbounded : Verdict::inconclusive;
}

TrajectoryReport level_lattice_trajectory(const Tower &t, TrajectoryPredicate p) {
  TrajectoryReport r;
  r.predicate = p;
  r.depth = t.depth();
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    try {
      const SubgroupLatticeView view = enumerate_subgroups(t.level(k));
      const Lattice &l = view.lattice();
      std::int64_t v = 0;
      switch (p) {
      case TrajectoryPredicate::width: v = static_cast<std::int64_t>(width(l).width); break;
      case TrajectoryPredicate::distributive: v = check_distributive(l).holds; break;
      case TrajectoryPredicate::modular: v = check_modular(l).holds; break;
      case TrajectoryPredicate::decomposable: v = direct_decompose(l).has_value(); break;
      }
      r.values.push_back(v);
    } catch (const ResourceError &e) {
      r.truncated = true;
      r.truncation_reason = e.what();
      break;
    }
  }
  r.verdict = trajectory_verdict(r.values, p != TrajectoryPredicate::width);
  return r;
}

std::string format_trajectory(const TrajectoryReport &r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    if (i) s += ",";
    if (r.predicate == TrajectoryPredicate::width)
      s += std::to_string(r.values[i]);
    else
      s += r.values[i] ? "true" : "false";
  }
  s += "] ";
  s += to_string(r.verdict);
  if (r.truncated)
    s += " (truncated at level " + std::to_string(r.values.size() + 1) + ": " +
         r.truncation_reason + ")";
  return s;
}

// --- constructors ----------------------------------------------------------

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void check_depth(std::size_t d) {
  if (d == 0) throw ConstructionError("tower depth must be at least 1");
}

// Maps sending the i-th generator of each level to the i-th generator of the
// level below; the constructors keep generator lists aligned for this.
std::vector<Homomorphism> aligned_maps(const std::vector<GroupPtr> &levels) {
  std::vector<Homomorphism> maps;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k)
    maps.push_back(Homomorphism::from_generator_images(levels[k + 1], levels[k],
                                                       levels[k]->generator_elements()));
  return maps;
}

TowerPtr aligned_tower(std::string name, std::vector<GroupPtr> levels, LimitShape shape) {
  auto maps = aligned_maps(levels);
  return Tower::make(std::move(name), std::move(levels), std::move(maps), shape);
}

} // namespace

TowerPtr zp_tower(unsigned p, std::size_t d) {
  check_depth(d);
  if (prime_factors(p).size() != 1 || prime_factors(p)[0] != p)
    throw ConstructionError("zp_tower: " + std::to_string(p) + " is not prime");
  auto t = cyclic_tower(p, d);
  std::vector<Homomorphism> maps;
  for (std::size_t k = 1; k < d; ++k) maps.push_back(t->map(k));
  return Tower::make("zp" + std::to_string(p), t->levels(), std::move(maps), t->shape());
}

TowerPtr cyclic_tower(unsigned n, std::size_t d) {
  check_depth(d);
  if (n < 2) throw ConstructionError("cyclic_tower needs n >= 2");
  std::vector<GroupPtr> levels;
  for (std::size_t k = 1; k <= d; ++k) levels.push_back(cyclic(ipow(n, k)));
  const auto primes = prime_factors(n);
  LimitShape shape;
  if (primes.size() == 1) shape = {LimitShape::Kind::structure3, primes[0]};
  return aligned_tower("C" + std::to_string(n) + "^k", std::move(levels), shape);
}

TowerPtr semidirect_tower(unsigned p, std::size_t d, const GroupPtr &t, long long e) {
  check_depth(d);
  std::vector<GroupPtr> levels;
  for (std::size_t k = 1; k <= d; ++k) {
    const std::size_t m = ipow(p, k);
    levels.push_back(semidirect_cyclic(m, t, e, "C" + std::to_string(m) + ":" + t->name()));
  }
  LimitShape shape;
  const auto primes = prime_factors(p);
  if (primes.size() == 1 && t->order() % p != 0) shape = {LimitShape::Kind::structure3, p};
  return aligned_tower("C" + std::to_string(p) + "^k:" + t->name() + "[" + std::to_string(e) + "]",
                       std::move(levels), shape);
}

TowerPtr inversion_tower(unsigned p, std::size_t d) {
  check_depth(d);
  std::vector<GroupPtr> levels;
  for (std::size_t k = 1; k <= d; ++k) {
    const std::size_t m = ipow(p, k);
    levels.push_back(semidirect_cyclic(2, cyclic(m), -1, "C2:C" + std::to_string(m)));
  }
  return aligned_tower("C2:C" + std::to_string(p) + "^k", std::move(levels), {});
}

TowerPtr type_iv_tower(unsigned p, unsigned k, std::size_t d) {
  check_depth(d);
  if (k == 0 || (p == 2 && k < 2))
    throw ConstructionError("type_iv_tower needs k >= 1, and k >= 2 when p = 2");
  const long long e = 1 + static_cast<long long>(ipow(p, k));
  std::vector<GroupPtr> levels;
  for (std::size_t m = 1; m <= d; ++m) {
    const std::size_t n = ipow(p, m);
    levels.push_back(semidirect_cyclic(n, cyclic(n), e,
                                       "C" + std::to_string(n) + ":C" + std::to_string(n) + "[" +
                                           std::to_string(e) + "]"));
  }
  return aligned_tower("type_iv(" + std::to_string(p) + "," + std::to_string(k) + ")",
                       std::move(levels), {});
}

TowerPtr product_tower(const TowerPtr &a, const TowerPtr &b, std::string name) {
  if (a->depth() != b->depth()) throw ConstructionError("product_tower needs equal depths");
  const std::size_t d = a->depth();
  std::vector<GroupPtr> levels;
  for (std::size_t k = 1; k <= d; ++k)
    levels.push_back(direct_product(a->level(k), b->level(k)));
  std::vector<Homomorphism> maps;
  for (std::size_t k = 1; k < d; ++k) {
    const GroupPtr &tgt = levels[k - 1];
    const std::size_t da = a->level(k)->degree(), db = b->level(k)->degree();
    std::vector<Elem> images;
    for (Elem g : a->level(k + 1)->generator_elements()) {
      const Permutation &x = a->level(k)->element(a->map(k)(g));
      images.push_back(*tgt->index_of(Permutation::direct_sum(x, Permutation::identity(db))));
    }
    for (Elem g : b->level(k + 1)->generator_elements()) {
      const Permutation &y = b->level(k)->element(b->map(k)(g));
      images.push_back(*tgt->index_of(Permutation::direct_sum(Permutation::identity(da), y)));
    }
    maps.push_back(Homomorphism::from_generator_images(levels[k], tgt, std::move(images)));
  }
  LimitShape shape;
  const auto &sa = a->shape(), &sb = b->shape();
  using K = LimitShape::Kind;
  auto coprime_finite = [&](const LimitShape &s3, const TowerPtr &fin) {
    return fin->level(d)->order() % s3.p != 0;
  };
  if (sa.kind == K::finite && sb.kind == K::finite)
    shape = {K::finite, 0};
  else if (sa.kind == K::structure3 && sb.kind == K::finite && coprime_finite(sa, b))
    shape = sa;
  else if (sb.kind == K::structure3 && sa.kind == K::finite && coprime_finite(sb, a))
    shape = sb;
  if (name.empty()) name = a->name() + "x" + b->name();
  return Tower::make(std::move(name), std::move(levels), std::move(maps), shape);
}

TowerPtr constant_tower(const GroupPtr &g, std::size_t d) {
  check_depth(d);
  return aligned_tower(g->name(), std::vector<GroupPtr>(d, g), {LimitShape::Kind::finite, 0});
}

std::vector<std::string> builtin_tower_names() {
  return {"zp2", "zp3", "c6k", "z5xc2", "dih5", "type_iv", "c2k_c3", "z2xz3"};
}

TowerPtr builtin_tower(std::string_view name, std::size_t d) {
  if (name == "zp2") return zp_tower(2, d);
  if (name == "zp3") return zp_tower(3, d);
  if (name == "c6k") return cyclic_tower(6, d);
  if (name == "z5xc2") return product_tower(zp_tower(5, d), constant_tower(cyclic(2), d), "z5xc2");
  if (name == "dih5") return inversion_tower(5, d);
  if (name == "type_iv") return type_iv_tower(2, 2, d);
  if (name == "c2k_c3") return semidirect_tower(2, d, cyclic(3), -1);
  if (name == "z2xz3") return product_tower(zp_tower(2, d), zp_tower(3, d), "z2xz3");
  throw DomainError("unknown builtin tower '" + std::string(name) + "'");
}

// --- file format -------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(';');
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

// "keyword value" -> value
std::string_view keyword_value(std::string_view field, std::string_view kw, std::size_t line) {
  if (field.substr(0, kw.size()) != kw || field.size() == kw.size() ||
      !std::isspace(static_cast<unsigned char>(field[kw.size()])))
    throw ParseError("expected '" + std::string(kw) + " ...', got '" + std::string(field) + "'",
                     line);
  return trim(field.substr(kw.size()));
}

std::size_t parse_count(std::string_view s, std::size_t line, const char *what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
    throw ParseError(std::string(what) + " must be a positive integer", line);
  return v;
}

} // namespace

TowerPtr parse_tower(std::string_view text) {
  std::string name;
  std::size_t depth = 0;
  LimitShape shape;
  bool have_header = false;
  std::map<std::size_t, GroupRecord> records;
  struct MapLine {
    std::vector<std::string_view> images;
    std::size_t line;
  };
  std::map<std::size_t, MapLine> map_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (!have_header) {
      if (fields.size() < 2) throw ParseError("expected 'tower <name>; depth <d>;'", line_no);
      name = std::string(keyword_value(fields[0], "tower", line_no));
      depth = parse_count(keyword_value(fields[1], "depth", line_no), line_no, "depth");
      if (fields.size() > 2) {
        auto s = keyword_value(fields[2], "shape", line_no);
        if (s == "finite")
          shape = {LimitShape::Kind::finite, 0};
        else if (s == "other")
          shape = {};
        else if (s.substr(0, 10) == "structure3")
          shape = {LimitShape::Kind::structure3,
                   static_cast<unsigned>(
                       parse_count(keyword_value(s, "structure3", line_no), line_no, "prime"))};
        else
          throw ParseError("unknown shape '" + std::string(s) + "'", line_no);
      }
      if (fields.size() > 3) throw ParseError("unexpected fields after the tower header", line_no);
      have_header = true;
      continue;
    }
    if (fields[0].substr(0, 5) == "level") {
      const std::size_t k = parse_count(keyword_value(fields[0], "level", line_no), line_no, "level");
      if (k > depth) throw ParseError("level " + std::to_string(k) + " exceeds the depth", line_no);
      if (records.count(k)) throw ParseError("duplicate level " + std::to_string(k), line_no);
      auto semi = line.find(';');
      records[k] = parse_group_record(line.substr(semi + 1), line_no);
    } else if (fields[0].substr(0, 3) == "map") {
      const std::size_t k = parse_count(keyword_value(fields[0], "map", line_no), line_no, "map");
      if (k < 2 || k > depth)
        throw ParseError("map index must lie between 2 and the depth", line_no);
      if (map_lines.count(k)) throw ParseError("duplicate map " + std::to_string(k), line_no);
      if (fields.size() < 2) throw ParseError("map line needs images", line_no);
      MapLine m{{keyword_value(fields[1], "images", line_no)}, line_no};
      for (std::size_t i = 2; i < fields.size(); ++i) m.images.push_back(fields[i]);
      map_lines[k] = std::move(m);
    } else {
      throw ParseError("expected a 'level' or 'map' line", line_no);
    }
  }
  if (!have_header) throw ParseError("missing tower header", line_no);

  std::vector<GroupPtr> levels;
  for (std::size_t k = 1; k <= depth; ++k) {
    auto it = records.find(k);
    if (it == records.end()) throw ParseError("missing level " + std::to_string(k), line_no);
    try {
      levels.push_back(build_group(it->second));
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(std::string("level ") + std::to_string(k) + ": " + e.what(),
                       it->second.line);
    }
  }
  std::vector<Homomorphism> maps;
  for (std::size_t k = 2; k <= depth; ++k) {
    auto it = map_lines.find(k);
    if (it == map_lines.end()) throw ParseError("missing map " + std::to_string(k), line_no);
    const auto &src = levels[k - 1];
    const auto &tgt = levels[k - 2];
    const std::size_t ln = it->second.line;
    if (it->second.images.size() != src->generators().size())
      throw ParseError("map " + std::to_string(k) + " needs " +
                           std::to_string(src->generators().size()) + " images",
                       ln);
    std::vector<Elem> images;
    for (auto img : it->second.images) {
      Permutation perm = [&] {
        try {
          return Permutation::from_cycles(img, tgt->degree());
        } catch (const Error &e) {
          throw ParseError(e.what(), ln);
        }
      }();
      auto idx = tgt->index_of(perm);
      if (!idx)
        throw ParseError("image " + std::string(img) + " is not an element of level " +
                             std::to_string(k - 1),
                         ln);
      images.push_back(*idx);
    }
    try {
      maps.push_back(Homomorphism::from_generator_images(src, tgt, std::move(images)));
    } catch (const Error &e) {
      throw ParseError("map " + std::to_string(k) + ": " + e.what(), ln);
    }
    if (!maps.back().is_surjective())
      throw ParseError("map " + std::to_string(k) + " is not surjective", ln);
  }
  return Tower::make(std::move(name), std::move(levels), std::move(maps), shape);
}

std::string format_tower(const Tower &t) {
  std::ostringstream out;
  out << "tower " << t.name() << "; depth " << t.depth() << "; shape " << to_string(t.shape().kind);
  if (t.shape().kind == LimitShape::Kind::structure3) out << ' ' << t.shape().p;
  out << ";\n";
  for (std::size_t k = 1; k <= t.depth(); ++k)
    out << "level " << k << "; " << format_group_record(*t.level(k)) << '\n';
  for (std::size_t k = 2; k <= t.depth(); ++k) {
    out << "map " << k << "; images ";
    const auto &m = t.map(k - 1);
    const auto &gens = t.level(k)->generator_elements();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) out << "; ";
      out << t.level(k - 1)->element(m(gens[i])).to_cycles();
    }
    out << '\n';
  }
  return out.str();
}

} // namespace proflat
