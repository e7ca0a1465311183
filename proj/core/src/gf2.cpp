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

#include "fermap/gf2.hpp"

#include <bit>
#include <random>
#include <sstream>
#include <utility>

namespace fermap {

BinMatrix::BinMatrix(std::size_t n) : rows_(n, BitVec(n)) {}

BinMatrix::BinMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != rows_.size()) throw DimensionMismatch("matrix must be square");
}

BinMatrix BinMatrix::identity(std::size_t n) {
  BinMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinMatrix BinMatrix::from_rows(const std::vector<std::string>& rows) {
  std::vector<BitVec> r;
  r.reserve(rows.size());
  for (const auto& s : rows) r.push_back(BitVec::from_string(s));
  return BinMatrix(std::move(r));
}

BitVec BinMatrix::column(std::size_t c) const {
  BitVec v(size());
  for (std::size_t r = 0; r < size(); ++r)
    if (get(r, c)) v.set(r);
  return v;
}

BinMatrix BinMatrix::transpose() const {
  BinMatrix t(size());
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c : rows_[r].indices()) t.set(c, r);
  return t;
}

std::size_t BinMatrix::rank() const {
  std::vector<BitVec> rows = rows_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < size() && rank < size(); ++c) {
    std::size_t piv = rank;
    while (piv < size() && !rows[piv].get(c)) ++piv;
    if (piv == size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < size(); ++r)
      if (rows[r].get(c)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

bool BinMatrix::is_invertible() const { return rank() == size(); }

std::string BinMatrix::to_text() const {
  std::string out;
  for (const auto& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

BinMatrix BinMatrix::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\r') continue;
    if (ch == '\n') {
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("matrix file is empty");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != lines.size())
      throw ParseError("matrix line " + std::to_string(i + 1) + " has " +
                       std::to_string(lines[i].size()) + " columns, expected " +
                       std::to_string(lines.size()));
    for (char ch : lines[i])
      if (ch != '0' && ch != '1')
        throw ParseError("matrix line " + std::to_string(i + 1) + " has a character other than 0/1");
  }
  return from_rows(lines);
}

BinMatrix operator*(const BinMatrix& a, const BinMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("matrix product");
  BinMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t k : a.row(r).indices()) out.row(r) ^= b.row(k);
  return out;
}

BinMatrix invert(const BinMatrix& g) {
  const std::size_t n = g.size();
  BinMatrix a = g;
  BinMatrix inv = BinMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !a.get(piv, c)) ++piv;
    if (piv == n) throw SingularMatrix();
    std::swap(a.row(piv), a.row(c));
    std::swap(inv.row(piv), inv.row(c));
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && a.get(r, c)) {
        a.row(r) ^= a.row(c);
        inv.row(r) ^= inv.row(c);
      }
    }
  }
  return inv;
}

BitVec mat_vec(const BinMatrix& g, const BitVec& v) {
  if (g.size() != v.size()) throw DimensionMismatch("mat_vec");
  BitVec out(g.size());
  for (std::size_t r = 0; r < g.size(); ++r)
    if (g.row(r).dot(v)) out.set(r);
  return out;
}

UfprSets ufpr_sets(const BinMatrix& g, std::size_t i) {
  return ufpr_sets(g, invert(g), i);
}

UfprSets ufpr_sets(const BinMatrix& g, const BinMatrix& g_inv, std::size_t i) {
  const std::size_t n = g.size();
  if (i >= n) throw std::out_of_range("mode index out of range");
  UfprSets s{g.column(i), g_inv.row(i), BitVec(n), BitVec(n)};
  for (std::size_t k = 0; k < i; ++k) s.parity ^= g_inv.row(k);
  s.remainder = s.flip ^ s.parity;
  return s;
}

namespace {

BinMatrix bravyi_kitaev(std::size_t n) {
  if (n == 1) return BinMatrix::identity(1);
  const std::size_t m = n / 2;
  BinMatrix half = bravyi_kitaev(m);
  BinMatrix out(n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      out.set(r, c, half.get(r, c));
      out.set(r + m, c + m, half.get(r, c));
    }
  }
  for (std::size_t c = m; c < n; ++c) out.set(0, c);
  return out;
}

}  // namespace

BinMatrix named_matrix(NamedMatrix kind, std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix size must be positive");
  switch (kind) {
    case NamedMatrix::identity:
      return BinMatrix::identity(n);
    case NamedMatrix::parity:
    case NamedMatrix::pi: {
      BinMatrix m(n);
      const bool diag = kind == NamedMatrix::parity;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r + (diag ? 1 : 0); ++c) m.set(r, c);
      return m;
    }
    case NamedMatrix::bravyi_kitaev:
      if (!std::has_single_bit(n))
        throw std::invalid_argument("bravyi_kitaev needs n a power of two, got " + std::to_string(n));
      return bravyi_kitaev(n);
  }
  throw std::invalid_argument("unknown matrix kind");
}

BinMatrix random_invertible(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    BinMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, coin(rng));
    if (m.is_invertible()) return m;
  }
}

}  // namespace fermap
