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

#include "proflat/permutation.hpp"

#include <cctype>

#include "proflat/errors.hpp"

namespace proflat {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw DomainError("image array is not a bijection on " +
                        std::to_string(images_.size()) + " points");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> moved(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation", 0);
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + std::string(text), 0);
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) throw ParseError("unterminated cycle: " + std::string(text), 0);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("unexpected character in cycle: " + std::string(text), 0);
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) break;
        ++pos;
      }
      if (value == 0 || value > degree)
        throw ParseError("point out of range 1.." + std::to_string(degree) + ": " +
                             std::string(text),
                         0);
      Point p = static_cast<Point>(value - 1);
      if (moved[p]) throw ParseError("point repeated across cycles: " + std::string(text), 0);
      moved[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::direct_sum(const Permutation &a, const Permutation &b) {
  Permutation p;
  p.images_ = a.images_;
  const auto shift = static_cast<Point>(a.degree());
  for (Point x : b.images_) p.images_.push_back(x + shift);
  return p;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = rhs.images_[images_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = p.degree();
  for (Point x : p.images()) h = h * 1000003u ^ x;
  return h;
}

} // namespace proflat
