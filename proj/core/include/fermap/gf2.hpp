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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fermap/bitvec.hpp"
#include "fermap/errors.hpp"

namespace fermap {

/** Square binary matrix stored as packed rows. */
class BinMatrix {
 public:
  BinMatrix() = default;
  explicit BinMatrix(std::size_t n);
  explicit BinMatrix(std::vector<BitVec> rows);

  static BinMatrix identity(std::size_t n);
  /// Rows given as 0/1 strings, e.g. {"100", "110", "111"}.
  static BinMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t size() const { return rows_.size(); }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }
  BitVec column(std::size_t c) const;

  BinMatrix transpose() const;
  bool is_invertible() const;
  std::size_t rank() const;

  bool operator==(const BinMatrix&) const = default;

  /// n lines of n characters, newline terminated.
  std::string to_text() const;
  static BinMatrix parse(std::string_view text);

 private:
  std::vector<BitVec> rows_;
};

BinMatrix operator*(const BinMatrix& a, const BinMatrix& b);

/** Inverse over F2. Throws SingularMatrix. */
BinMatrix invert(const BinMatrix& g);

BitVec mat_vec(const BinMatrix& g, const BitVec& v);

/// Update, flip, parity and remainder sets of mode i.
struct UfprSets {
  BitVec update;
  BitVec flip;
  BitVec parity;
  BitVec remainder;
};

UfprSets ufpr_sets(const BinMatrix& g, std::size_t i);
/// Same as ufpr_sets but reuses a precomputed inverse.
UfprSets ufpr_sets(const BinMatrix& g, const BinMatrix& g_inv, std::size_t i);

enum class NamedMatrix { identity, parity, bravyi_kitaev, pi };

/**
 * The named matrices. `parity` is lower triangular with a unit diagonal,
 * `pi` is strictly lower triangular. `bravyi_kitaev` needs n a power of two.
 */
BinMatrix named_matrix(NamedMatrix kind, std::size_t n);

/// Uniformly random element of GL_n(F2), deterministic in `seed`.
BinMatrix random_invertible(std::size_t n, std::uint64_t seed);

}  // namespace fermap
