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

#include "fermap/encoding.hpp"

#include <random>

namespace fermap {

AffineEncoding::AffineEncoding(BinMatrix g_, BitVec b_) : g(std::move(g_)), b(std::move(b_)) {
  if (g.size() != b.size()) throw DimensionMismatch("offset length differs from matrix size");
  if (!g.is_invertible()) throw SingularMatrix();
}

AffineEncoding::AffineEncoding(BinMatrix g_) : AffineEncoding(g_, BitVec(g_.size())) {}

PauliString StabiliserTableau::image(std::size_t k) const {
  const BitVec& col = columns.at(k);
  BitVec x(n), z(n);
  for (std::size_t r : col.indices()) {
    if (r < n) {
      x.set(r);
    } else {
      z.set(r - n);
    }
  }
  PauliString p = UnsignedPauli(std::move(x), std::move(z)).hermitian();
  return signs.get(k) ? -p : p;
}

std::string StabiliserTableau::to_text() const {
  std::string out;
  for (std::size_t r = 0; r < 2 * n; ++r) {
    for (std::size_t c = 0; c < 2 * n; ++c) out += columns[c].get(r) ? '1' : '0';
    out += signs.get(r) ? '1' : '0';
    out += '\n';
  }
  return out;
}

StabiliserTableau tableau_of_affine(const AffineEncoding& enc) {
  const std::size_t n = enc.size();
  const BinMatrix inv = invert(enc.g);
  StabiliserTableau t{n, std::vector<BitVec>(2 * n, BitVec(2 * n)), BitVec(2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r : enc.g.column(i).indices()) t.columns[i].set(r);
    for (std::size_t c : inv.row(i).indices()) t.columns[n + i].set(n + c);
    if (enc.b.get(i)) t.signs.set(n + i);
  }
  return t;
}

PauliString conjugate(const StabiliserTableau& t, const PauliString& p) {
  if (p.size() != t.n) throw DimensionMismatch("tableau and Pauli string");
  PauliString acc = PauliString(t.n).times_i(p.phase());
  for (std::size_t q : p.x().indices()) acc = acc * t.image(q);
  for (std::size_t q : p.z().indices()) acc = acc * t.image(t.n + q);
  return acc;
}

FermionQubitMapping majoranas_of_affine(const AffineEncoding& enc) {
  const std::size_t n = enc.size();
  const BinMatrix inv = invert(enc.g);
  std::vector<PauliString> ops;
  ops.reserve(2 * n);
  unsigned prefix = 0;  // sum of b_k for k < i
  for (std::size_t i = 0; i < n; ++i) {
    const UfprSets s = ufpr_sets(enc.g, inv, i);
    ops.emplace_back(s.update, s.parity, 2 * (prefix & 1u));
    prefix += enc.b.get(i) ? 1u : 0u;
    ops.emplace_back(s.update, s.remainder, 1 + 2 * (prefix & 1u));
  }
  return FermionQubitMapping::checked(std::move(ops));
}

namespace {

ClassicalResult fail(BitVec f, std::string reason, std::optional<ProductState> st = std::nullopt) {
  ClassicalResult r;
  r.failure = NotClassical{std::move(f), std::move(reason), std::move(st)};
  return r;
}

}  // namespace

ClassicalResult detect_classical(const FermionQubitMapping& m, const DetectOptions& opt) {
  const std::size_t n = m.size();
  const VacuumResult vac = vacuum_state(m);
  if (!vac.is_product()) return fail(BitVec(n), "vacuum is entangled");
  const ProductState& v = *vac.state;
  if (!v.is_computational())
    return fail(BitVec(n), "vacuum " + v.to_string() + " is not a computational basis state", v);

  BinMatrix g(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i : m.op(2 * j).x().indices()) g.set(i, j);
  if (!g.is_invertible()) return fail(BitVec(n), "read-off matrix is singular");
  const BitVec b = mat_vec(invert(g), v.bits());

  auto check = [&](const BitVec& f) -> std::optional<ClassicalResult> {
    const ProductState s = fock_state(m, v, f);
    const ProductState want = ProductState::computational(mat_vec(g, f ^ b));
    if (s != want)
      return fail(f, "Fock state " + f.to_string() + " is " + s.to_string() + ", expected " +
                         want.to_string(), s);
    return std::nullopt;
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (auto r = check(BitVec::unit(n, i))) return *r;
    for (std::size_t j = i + 1; j < n; ++j) {
      BitVec f = BitVec::unit(n, i);
      f.set(j);
      if (auto r = check(f)) return *r;
    }
  }
  const std::size_t samples = opt.samples.value_or(2 * n);
  std::mt19937_64 rng(opt.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < samples; ++s) {
    BitVec f(n);
    for (std::size_t i = 0; i < n; ++i) f.set(i, coin(rng));
    if (auto r = check(f)) return *r;
  }
  ClassicalResult r;
  r.encoding = AffineEncoding(std::move(g), b);
  return r;
}

LinearReduction affine_to_linear(const FermionQubitMapping& m, const AffineEncoding& enc) {
  if (m.size() != enc.size()) throw DimensionMismatch("mapping and encoding sizes");
  FermionQubitMapping lin = majoranas_of_affine(AffineEncoding(enc.g));
  BitVec flips(2 * m.size());
  for (std::size_t k = 0; k < 2 * m.size(); ++k) {
    if (m.op(k) == lin.op(k)) continue;
    if (m.op(k) == -lin.op(k)) {
      flips.set(k);
      continue;
    }
    throw std::invalid_argument("operator " + std::to_string(k) +
                                " differs from the linear encoding beyond a sign");
  }
  return {std::move(lin), std::move(flips)};
}

}  // namespace fermap
