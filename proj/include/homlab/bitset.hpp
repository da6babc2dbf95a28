// Copyright 2026 The homlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOMLAB_BITSET_HPP
#define HOMLAB_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace homlab::detail {

using Word = std::uint64_t;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Word-span helpers shared by the solver's flat domain storage and Bitset.

inline std::size_t popcount(std::span<const Word> ws) {
  std::size_t c = 0;
  for (Word w : ws) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool test(std::span<const Word> ws, std::size_t i) {
  return (ws[i >> 6] >> (i & 63)) & 1U;
}

inline void set(std::span<Word> ws, std::size_t i) { ws[i >> 6] |= Word{1} << (i & 63); }

inline void reset(std::span<Word> ws, std::size_t i) { ws[i >> 6] &= ~(Word{1} << (i & 63)); }

inline bool any(std::span<const Word> ws) {
  for (Word w : ws)
    if (w) return true;
  return false;
}

/// Index of the first set bit at or after `from`, or `ws.size() * 64` if none.
inline std::size_t find_next(std::span<const Word> ws, std::size_t from) {
  std::size_t wi = from >> 6;
  if (wi >= ws.size()) return ws.size() * 64;
  Word w = ws[wi] & (~Word{0} << (from & 63));
  while (true) {
    if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == ws.size()) return ws.size() * 64;
    w = ws[wi];
  }
}

/// Calls f(i) for every set bit i in ascending order.
template <typename F>
void for_each_bit(std::span<const Word> ws, F&& f) {
  for (std::size_t wi = 0; wi < ws.size(); ++wi) {
    Word w = ws[wi];
    while (w) {
      f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

/// Fixed-size dynamic bitset. Only what the solver and analyses need.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

  std::size_t size() const noexcept { return bits_; }
  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const { return detail::test(words_, i); }
  void set(std::size_t i) { detail::set(words_, i); }
  void reset(std::size_t i) { detail::reset(words_, i); }
  void set_all() {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }
  std::size_t count() const { return popcount(words_); }
  bool any() const { return detail::any(words_); }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  bool operator==(const Bitset&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for_each_bit(words_, std::forward<F>(f));
  }

 private:
  void trim() {
    if (bits_ % 64 != 0 && !words_.empty()) words_.back() &= (Word{1} << (bits_ % 64)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace homlab::detail

#endif  // HOMLAB_BITSET_HPP
