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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fermap/mapping.hpp"
#include "fermap/pauli.hpp"

namespace fermap {

/// Qubit q of the input becomes qubit sigma[q].
struct QubitSwap {
  std::vector<std::size_t> sigma;
};

/// Signed image of one Pauli letter.
struct LetterImage {
  char letter;
  bool negative = false;
  bool operator==(const LetterImage&) const = default;
};

/// Conjugation by a single-qubit Clifford, given by the images of X, Y, Z.
struct LocalBasisChange {
  std::size_t qubit;
  std::array<LetterImage, 3> images;
};

/// direction +1: (G_2i, G_2i+1) -> (G_2i+1, -G_2i); direction -1: -> (-G_2i+1, G_2i).
struct PairBraid {
  std::size_t mode;
  int direction = 1;
};

/// G_k -> -G_k.
struct SignChange {
  std::size_t index;
};

/// New pair i is old pair rho[i].
struct FermionSwap {
  std::vector<std::size_t> rho;
};

using SymmetryOp = std::variant<QubitSwap, LocalBasisChange, PairBraid, SignChange, FermionSwap>;

/// The 24 single-qubit Clifford images of (X, Y, Z).
const std::vector<std::array<LetterImage, 3>>& clifford_images();
/// Clifford image with unsigned letter images given by a permutation of XYZ;
/// X and Z keep a + sign and Y's sign follows.
std::array<LetterImage, 3> clifford_for_letters(const std::array<char, 3>& letters);

/// Throws std::invalid_argument when op does not fit an n-mode mapping.
void check_op(const SymmetryOp& op, std::size_t n);
FermionQubitMapping apply_symmetry(const FermionQubitMapping& m, const SymmetryOp& op);
FermionQubitMapping apply_symmetries(FermionQubitMapping m, const std::vector<SymmetryOp>& ops);

/// One line of the witness log, e.g. "local 0 Y -X Z" or "braid 1 +".
std::string to_string(const SymmetryOp& op);
SymmetryOp parse_symmetry_op(std::string_view line);
std::string witness_to_text(const std::vector<SymmetryOp>& ops);
std::vector<SymmetryOp> parse_witness(std::string_view text);

/** Invariant of the labelling symmetries, used to reject inequivalent pairs. */
struct Fingerprint {
  std::vector<std::vector<std::size_t>> qubit_classes;
  std::vector<std::vector<std::size_t>> pair_classes;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const FermionQubitMapping& m);

enum class Verdict { equivalent, inequivalent, unknown };

struct EquivOptions {
  std::size_t max_n = 4;
  std::uint64_t budget = 5'000'000;  ///< candidate (sigma, local relabelling) pairs
};

struct EquivResult {
  Verdict verdict = Verdict::unknown;
  std::vector<SymmetryOp> witness;
  std::string reason;
  std::uint64_t candidates = 0;
};

EquivResult equivalent(const FermionQubitMapping& a, const FermionQubitMapping& b,
                       const EquivOptions& opt = {});

std::string to_string(Verdict v);

enum class TwoModeTemplate { jordan_wigner, bravyi_kitaev, product_breaking };

std::string to_string(TwoModeTemplate t);
TwoModeTemplate classify_two_mode(const FermionQubitMapping& m);

/// Representatives m_JW(2), m_BK(2) and m6 = ((X0, -Z0Y1), (Z0X1, Y0)).
FermionQubitMapping two_mode_reference(TwoModeTemplate t);

struct CensusMember {
  FermionQubitMapping mapping;
  TwoModeTemplate tmpl;
};

struct Census {
  std::vector<CensusMember> members;
  std::map<TwoModeTemplate, std::size_t> counts;
};

/**
 * Every ordered 4-tuple of mutually anticommuting unsigned two-qubit Paulis,
 * read as two ordered pairs, with its template.
 */
Census two_mode_census();

}  // namespace fermap
