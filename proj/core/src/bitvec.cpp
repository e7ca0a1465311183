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

#include "fermap/bitvec.hpp"

#include "fermap/errors.hpp"

#include <bit>
#include <stdexcept>

namespace fermap {

BitVec::BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain 0 and 1");
    }
  }
  return v;
}

BitVec BitVec::from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
  BitVec v(n);
  for (std::size_t i : idx) {
    if (i >= n) throw std::out_of_range("bit index out of range");
    v.set(i);
  }
  return v;
}

BitVec BitVec::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("bit index out of range");
  BitVec v(n);
  v.set(i);
  return v;
}

BitVec BitVec::from_u64(std::size_t n, std::uint64_t word) {
  if (n > 64) throw std::invalid_argument("from_u64 needs n <= 64");
  BitVec v(n);
  if (n == 0) return v;
  if (n < 64) word &= (std::uint64_t{1} << n) - 1;
  v.words_[0] = word;
  return v;
}

void BitVec::set(std::size_t i, bool v) {
  const std::uint64_t m = std::uint64_t{1} << (i & 63);
  if (v) {
    words_[i >> 6] |= m;
  } else {
    words_[i >> 6] &= ~m;
  }
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVec::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

bool BitVec::dot(const BitVec& o) const {
  check_same(o);
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
  return std::popcount(acc) & 1;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  check_same(o);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
  check_same(o);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
  check_same(o);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  return *this;
}

std::strong_ordering BitVec::operator<=>(const BitVec& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (auto c = words_[k] <=> o.words_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::vector<std::size_t> BitVec::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t BitVec::to_u64() const {
  if (n_ > 64) throw std::invalid_argument("to_u64 needs n <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::size_t BitVec::hash() const {
  std::size_t h = std::hash<std::size_t>{}(n_);
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void BitVec::check_same(const BitVec& o) const {
  if (n_ != o.n_) throw DimensionMismatch("bit vector length mismatch");
}

}  // namespace fermap
