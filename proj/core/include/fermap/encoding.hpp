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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermap/gf2.hpp"
#include "fermap/mapping.hpp"
#include "fermap/pauli.hpp"

namespace fermap {

/** Fock encoding |f> -> |G (f xor b)> with G invertible. */
struct AffineEncoding {
  BinMatrix g;
  BitVec b;

  AffineEncoding() = default;
  /// Throws SingularMatrix or DimensionMismatch.
  AffineEncoding(BinMatrix g_, BitVec b_);
  explicit AffineEncoding(BinMatrix g_);

  std::size_t size() const { return g.size(); }
  bool is_linear() const { return b.none(); }
  bool operator==(const AffineEncoding&) const = default;
};

/**
 * Clifford certificate: column k < n is the image of X_k, column n + k the
 * image of Z_k, each as a 2n-bit symplectic vector (x part then z part).
 * signs.get(k) set means the image carries a minus sign.
 */
struct StabiliserTableau {
  std::size_t n = 0;
  std::vector<BitVec> columns;
  BitVec signs;

  /// Signed Hermitian image of generator k.
  PauliString image(std::size_t k) const;
  /// 2n rows of 2n + 1 bits; the last bit of row r is sign r.
  std::string to_text() const;

  bool operator==(const StabiliserTableau&) const = default;
};

StabiliserTableau tableau_of_affine(const AffineEncoding& enc);
/// C P C^dagger for the Clifford C described by the tableau, with exact phase.
PauliString conjugate(const StabiliserTableau& t, const PauliString& p);

FermionQubitMapping majoranas_of_affine(const AffineEncoding& enc);

struct NotClassical {
  BitVec f;            ///< offending occupation vector
  std::string reason;
  std::optional<ProductState> state;  ///< its symbolic Fock state, when product
};

struct ClassicalResult {
  std::optional<AffineEncoding> encoding;
  std::optional<NotClassical> failure;
  explicit operator bool() const { return encoding.has_value(); }
};

struct DetectOptions {
  /// Extra random multi-excitation checks; unset means 2n.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
};

/**
 * Decide whether every Fock state of m is +1 times a computational basis
 * state, and if so return the affine encoding. The vacuum, all single and
 * all double excitations are checked; together they pin every Fock phase,
 * since the phase of G_0^{f_0} G_2^{f_1} ... |q> is a quadratic form in f.
 */
ClassicalResult detect_classical(const FermionQubitMapping& m, const DetectOptions& opt = {});

struct LinearReduction {
  FermionQubitMapping mapping;
  BitVec sign_flips;  ///< bit k set when the input's G_k is minus the linear one
};

LinearReduction affine_to_linear(const FermionQubitMapping& m, const AffineEncoding& enc);

}  // namespace fermap
