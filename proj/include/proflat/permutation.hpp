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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace proflat {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}. Products compose left to right:
/// (a * b)(x) = b(a(x)).
class Permutation {
public:
  Permutation() = default;
  /// Throws DomainError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Parses 1-based cycle notation such as "(1 2)(3 4 5)" or "()".
  /// Throws ParseError.
  static Permutation from_cycles(std::string_view text, std::size_t degree);
  /// Acts as `a` on the first a.degree() points and as `b` on the rest.
  static Permutation direct_sum(const Permutation &a, const Permutation &b);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  const std::vector<Point> &images() const noexcept { return images_; }

  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// 1-based cycle notation, "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace proflat
