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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fermap/bitvec.hpp"
#include "fermap/errors.hpp"

namespace fermap {

/**
 * Signed n-qubit Pauli operator
 *
 *   P = i^phase * prod_j X_j^{x_j} * prod_j Z_j^{z_j}
 *
 * so a Y factor is stored as x=z=1 and contributes one unit of phase
 * (Y = i X Z). The text form prints the coefficient relative to the
 * Hermitian letters instead: `-i X0 Z2 Y5`, `+1 I`.
 */
class PauliString {
 public:
  PauliString() = default;
  /// Identity on n qubits.
  explicit PauliString(std::size_t n) : x_(n), z_(n) {}
  PauliString(BitVec x, BitVec z, unsigned phase = 0);

  /// Hermitian single-qubit letter ('X', 'Y' or 'Z') on qubit q.
  static PauliString single(std::size_t n, std::size_t q, char letter);
  /// Parse the text format. n = 0 infers the size from the largest index.
  static PauliString parse(std::string_view text, std::size_t n = 0);

  std::size_t size() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  unsigned phase() const { return phase_; }

  /// 'I', 'X', 'Y' or 'Z'.
  char letter(std::size_t q) const;
  /// Coefficient in front of the Hermitian letters, as a power of i.
  unsigned coefficient() const;

  /// Multiply by the scalar i^k.
  PauliString times_i(unsigned k) const;
  PauliString operator-() const { return times_i(2); }

  bool is_identity() const { return x_.none() && z_.none(); }

  bool operator==(const PauliString&) const = default;
  std::strong_ordering operator<=>(const PauliString& o) const;

  std::string to_string() const;

 private:
  BitVec x_;
  BitVec z_;
  unsigned phase_ = 0;
};

PauliString multiply(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) {
  return multiply(p, q);
}

bool anticommutes(const PauliString& p, const PauliString& q);
inline bool commutes(const PauliString& p, const PauliString& q) {
  return !anticommutes(p, q);
}
std::size_t weight(const PauliString& p);
std::size_t y_count(const PauliString& p);
bool is_hermitian(const PauliString& p);

/**
 * The part of p on `qubits`. The discarded factors are taken to be the
 * plain Hermitian letters, so restrict(p, S) times the letters of p off S
 * equals p.
 */
PauliString restrict(const PauliString& p, const std::vector<std::size_t>& qubits);

/** Pauli string up to phase. */
struct UnsignedPauli {
  BitVec x;
  BitVec z;

  UnsignedPauli() = default;
  UnsignedPauli(BitVec x_, BitVec z_);
  explicit UnsignedPauli(const PauliString& p) : x(p.x()), z(p.z()) {}

  std::size_t size() const { return x.size(); }
  char letter(std::size_t q) const;
  /// The Hermitian string with coefficient +1.
  PauliString hermitian() const;
  /// Letters only, e.g. "Z0 X1"; the identity prints as "I".
  std::string to_string() const;

  bool operator==(const UnsignedPauli&) const = default;
  std::strong_ordering operator<=>(const UnsignedPauli& o) const;
};

/// Eigenstates of the single-qubit Paulis, named by operator and sign.
enum class QubitState : std::uint8_t { ZPlus, ZMinus, XPlus, XMinus, YPlus, YMinus };

/// 'X', 'Y' or 'Z'.
char state_axis(QubitState e);
/// +1 or -1.
int state_sign(QubitState e);
QubitState make_state(char axis, int sign);
/// Vacuum-string character: 0, 1, +, -, r, l.
char state_char(QubitState e);
QubitState state_from_char(char c);

/** Tensor product of single-qubit Pauli eigenstates times i^phase. */
struct ProductState {
  std::vector<QubitState> qubits;
  unsigned phase = 0;

  ProductState() = default;
  explicit ProductState(std::vector<QubitState> q, unsigned ph = 0)
      : qubits(std::move(q)), phase(ph & 3u) {}

  /// Computational basis state |bits>.
  static ProductState computational(const BitVec& bits, unsigned phase = 0);
  /// One character per qubit from {0,1,+,-,r,l}.
  static ProductState parse(std::string_view text);

  std::size_t size() const { return qubits.size(); }
  bool is_computational() const;
  /// Bit string of a computational state; throws otherwise.
  BitVec bits() const;
  /// Label string without the phase, e.g. "01+r".
  std::string label() const;
  /// Label with the phase prefix, e.g. "+i|01+r>".
  std::string to_string() const;

  bool operator==(const ProductState&) const = default;
};

ProductState apply_to_product_state(const PauliString& p, const ProductState& s);

}  // namespace fermap
