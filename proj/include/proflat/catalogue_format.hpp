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
#include <string>
#include <string_view>
#include <vector>

#include "proflat/group.hpp"

namespace proflat {

/// One catalogue record:
///   name S3; degree 3; gens (1 2); (1 2 3)
/// Points are 1-based in text and 0-based in memory.
struct GroupRecord {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::size_t line = 0;
};

/// Throws ParseError carrying `line`.
GroupRecord parse_group_record(std::string_view text, std::size_t line = 0);
/// One record per non-blank line; '#' starts a comment.
std::vector<GroupRecord> parse_catalogue(std::string_view text);
std::string format_group_record(const FiniteGroup &g);
GroupPtr build_group(const GroupRecord &record);

} // namespace proflat
