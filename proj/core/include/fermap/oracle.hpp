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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermap/gf2.hpp"
#include "fermap/mapping.hpp"
#include "fermap/pauli.hpp"

/**
 * Brute-force state-vector checks. Nothing in here uses the symplectic
 * algebra: Pauli strings are applied amplitude by amplitude, and every
 * claim is checked against explicit vectors.
 */
namespace fermap::oracle {

using cplx = std::complex<double>;

inline constexpr double kTol = 1e-9;

/// 2^n amplitudes; bit q of the index is the value of qubit q.
struct DenseState {
  std::size_t n = 0;
  std::vector<cplx> amp;

  DenseState() = default;
  explicit DenseState(std::size_t n_);
  static DenseState basis(std::size_t n, std::uint64_t index);
  static DenseState from_product(const ProductState& s);

  double norm() const;
  cplx inner(const DenseState& o) const;  ///< <this|o>
};

/// max_k |a_k - b_k|.
double distance(const DenseState& a, const DenseState& b);

DenseState apply_pauli(const PauliString& p, const DenseState& s);

struct Report {
  bool ok = true;
  std::string message;
  std::optional<BitVec> f;
  double deviation = 0.0;
  std::size_t checked = 0;  ///< number of Fock states examined
  bool sampled = false;
  explicit operator bool() const { return ok; }
};

/// Anticommutators and Hermiticity on every basis state.
Report check_car(const FermionQubitMapping& m, double tol = kTol);

/**
 * Common +1 eigenstate of the vacuum stabilizers: the projector product is
 * applied to |0>, |1>, ... until a nonzero image appears. The phase is
 * fixed so that the first nonzero amplitude is real positive.
 */
DenseState dense_vacuum(const FermionQubitMapping& m);

DenseState dense_fock_state(const FermionQubitMapping& m, const DenseState& vacuum,
                            const BitVec& f);

struct SweepOptions {
  std::size_t exhaustive_up_to = 10;  ///< full 2^n sweep up to this n
  std::size_t samples = 4096;         ///< random f above that
  std::uint64_t seed = 1;
};

/// Orthonormality and stabilizer eigenvalues (-1)^{f_i} of the Fock states.
Report verify_fock_basis(const FermionQubitMapping& m, const SweepOptions& opt = {});
/// Each Fock state equals +|G (f xor b)>.
Report verify_affine(const FermionQubitMapping& m, const BinMatrix& g, const BitVec& b,
                     const SweepOptions& opt = {});
/// Each Fock state equals +|G f>.
Report verify_linear(const FermionQubitMapping& m, const BinMatrix& g,
                     const SweepOptions& opt = {});
/// Agreement of the three Jordan-Wigner Fock state definitions on n modes.
Report verify_lemma1(std::size_t n);

/// Schmidt rank across the cut (subsystem | rest).
std::size_t schmidt_rank(const DenseState& s, const std::vector<std::size_t>& subsystem,
                         double tol = kTol);
/// True when every single-qubit cut has Schmidt rank 1.
bool is_product(const DenseState& s, double tol = kTol);

}  // namespace fermap::oracle
