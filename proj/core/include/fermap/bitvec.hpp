// Copyright 2026 The fermap Authors
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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fermap {

/**
 * Fixed-length packed bit vector over F2.
 *
 * Bit 0 is the first character of the string form, so "1011" has bits
 * 0, 2 and 3 set. Padding bits past size() are kept zero.
 */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n);

  static BitVec from_string(std::string_view bits);
  static BitVec from_indices(std::size_t n, const std::vector<std::size_t>& idx);
  static BitVec unit(std::size_t n, std::size_t i);
  /** Low bits of `word`, only valid for n <= 64. */
  static BitVec from_u64(std::size_t n, std::uint64_t word);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t popcount() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Parity of the bitwise AND with `o`.
  bool dot(const BitVec& o) const;

  BitVec& operator^=(const BitVec& o);
  BitVec& operator&=(const BitVec& o);
  BitVec& operator|=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  bool operator==(const BitVec&) const = default;
  std::strong_ordering operator<=>(const BitVec& o) const;

  std::string to_string() const;
  std::vector<std::size_t> indices() const;
  std::uint64_t to_u64() const;
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t hash() const;

 private:
  void check_same(const BitVec& o) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fermap

template <>
struct std::hash<fermap::BitVec> {
  std::size_t operator()(const fermap::BitVec& b) const { return b.hash(); }
};
