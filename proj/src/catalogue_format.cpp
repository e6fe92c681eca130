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

#include "proflat/catalogue_format.hpp"

#include <cctype>
#include <charconv>

#include "proflat/errors.hpp"

namespace proflat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

/// "keyword rest" -> rest, or throws.
std::string_view expect_field(std::string_view field, std::string_view keyword, std::size_t line) {
  if (field.substr(0, keyword.size()) != keyword ||
      (field.size() > keyword.size() &&
       !std::isspace(static_cast<unsigned char>(field[keyword.size()]))))
    throw ParseError("expected '" + std::string(keyword) + "' field, got '" + std::string(field) +
                         "'",
                     line);
  return trim(field.substr(keyword.size()));
}

} // namespace

GroupRecord parse_group_record(std::string_view text, std::size_t line) {
  auto fields = split(trim(text), ';');
  while (!fields.empty() && fields.back().empty()) fields.pop_back();
  if (fields.size() < 3) throw ParseError("record needs name, degree and gens fields", line);

  GroupRecord r;
  r.line = line;
  r.name = std::string(expect_field(fields[0], "name", line));
  if (r.name.empty() || r.name.find_first_of(" \t") != std::string::npos)
    throw ParseError("group name must be a single non-empty token", line);

  auto degree_text = expect_field(fields[1], "degree", line);
  auto [ptr, ec] = std::from_chars(degree_text.data(), degree_text.data() + degree_text.size(),
                                   r.degree);
  if (ec != std::errc() || ptr != degree_text.data() + degree_text.size() || r.degree == 0)
    throw ParseError("degree must be a positive integer", line);

  std::vector<std::string_view> gens{expect_field(fields[2], "gens", line)};
  for (std::size_t i = 3; i < fields.size(); ++i) gens.push_back(fields[i]);
  for (auto g : gens) {
    if (g.empty()) throw ParseError("empty generator", line);
    try {
      r.generators.push_back(Permutation::from_cycles(g, r.degree));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), line);
    }
  }
  return r;
}

std::vector<GroupRecord> parse_catalogue(std::string_view text) {
  std::vector<GroupRecord> out;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    auto eol = text.find('\n');
    std::string_view row = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    if (trim(row).empty()) continue;
    out.push_back(parse_group_record(row, line));
  }
  return out;
}

std::string format_group_record(const FiniteGroup &g) {
  std::string out = "name " + (g.name().empty() ? std::string("G") : g.name()) + "; degree " +
                    std::to_string(g.degree()) + "; gens ";
  if (g.generators().empty()) return out + "()";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i) out += "; ";
    out += g.generators()[i].to_cycles();
  }
  return out;
}

GroupPtr build_group(const GroupRecord &record) {
  return FiniteGroup::generate(record.degree, record.generators, record.name);
}

} // namespace proflat
