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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace proflat {

/// Fixed-size bitset sized at runtime. Used for subgroup membership (bits
/// indexed by canonical element index) and for up/down sets of lattice nodes.
///
/// Ordering is lexicographic on the bit string b_0 b_1 b_2 ... with 0 < 1.
class Bitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const Bitset &other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  Bitset &operator&=(const Bitset &o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset &operator|=(const Bitset &o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset &b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset &b) noexcept { return a |= b; }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k])
        return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
  }
  /// Index of the highest set bit, or size() when empty.
  std::size_t last() const noexcept {
    for (std::size_t k = words_.size(); k-- > 0;)
      if (words_[k])
        return k * kWordBits + kWordBits - 1 -
               static_cast<std::size_t>(std::countl_zero(words_[k]));
    return size_;
  }
  /// Lowest set bit strictly above `i`, or size().
  std::size_t next(std::size_t i) const noexcept {
    ++i;
    if (i >= size_) return size_;
    std::size_t k = i / kWordBits;
    Word w = words_[k] & (~Word{0} << (i % kWordBits));
    while (true) {
      if (w) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return size_;
      w = words_[k];
    }
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<Word> &words() const noexcept { return words_; }

  friend bool operator==(const Bitset &a, const Bitset &b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  friend bool operator<(const Bitset &a, const Bitset &b) noexcept {
    for (std::size_t k = 0; k < a.words_.size() && k < b.words_.size(); ++k) {
      Word diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        Word low = diff & (~diff + 1);
        return (b.words_[k] & low) != 0;
      }
    }
    return a.size_ < b.size_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset &b) const noexcept { return b.hash(); }
};

} // namespace proflat
