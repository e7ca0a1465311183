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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "fermap/pauli.hpp"

namespace fermap::testing {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Seed for randomized suites; FERMAP_SEED overrides the fixed default.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("FERMAP_SEED")) return std::strtoull(s, nullptr, 10);
  return 20261016;
}

inline Eigen::Matrix2cd letter(char l) {
  const cplx i(0, 1);
  Eigen::Matrix2cd m;
  switch (l) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -i, i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  return m;
}

/// Dense matrix of p; bit q of a basis index is qubit q. Built from the
/// text form only (coefficient and letters), independently of the phase bookkeeping.
inline Mat dense(const PauliString& p) {
  const std::string text = p.to_string();
  const cplx i(0, 1);
  cplx c = 1;
  if (text.rfind("-1", 0) == 0) c = -1;
  if (text.rfind("+i", 0) == 0) c = i;
  if (text.rfind("-i", 0) == 0) c = -i;
  Mat m = Mat::Identity(1, 1) * c;
  // Kronecker products with qubit 0 as the least significant index bit.
  for (std::size_t q = 0; q < p.size(); ++q) {
    const Eigen::Matrix2cd l = letter(p.letter(q));
    Mat next(m.rows() * 2, m.cols() * 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) = l(a, b) * m;
    m = next;
  }
  return m;
}

inline Vec dense(const ProductState& s) {
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i(0, 1);
  Vec v = Vec::Ones(1) * std::pow(i, static_cast<int>(s.phase));
  for (std::size_t q = 0; q < s.size(); ++q) {
    Eigen::Vector2cd e;
    switch (s.qubits[q]) {
      case QubitState::ZPlus:
        e << 1, 0;
        break;
      case QubitState::ZMinus:
        e << 0, 1;
        break;
      case QubitState::XPlus:
        e << r, r;
        break;
      case QubitState::XMinus:
        e << r, -r;
        break;
      case QubitState::YPlus:
        e << r, i * r;
        break;
      case QubitState::YMinus:
        e << r, -i * r;
        break;
    }
    Vec next(v.size() * 2);
    next.head(v.size()) = e(0) * v;
    next.tail(v.size()) = e(1) * v;
    v = next;
  }
  return v;
}

inline PauliString random_pauli(std::size_t n, std::mt19937_64& rng) {
  BitVec x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x.set(q, rng() & 1);
    z.set(q, rng() & 1);
  }
  return PauliString(x, z, static_cast<unsigned>(rng() & 3));
}

inline PauliString random_hermitian(std::size_t n, std::mt19937_64& rng) {
  PauliString p = random_pauli(n, rng);
  return is_hermitian(p) ? p : p.times_i(1);
}

inline ProductState random_product(std::size_t n, std::mt19937_64& rng, bool zero_phase = false) {
  std::vector<QubitState> q(n);
  for (auto& e : q) e = static_cast<QubitState>(rng() % 6);
  return ProductState(q, zero_phase ? 0 : static_cast<unsigned>(rng() & 3));
}

inline BitVec random_bits(std::size_t n, std::mt19937_64& rng) {
  BitVec b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1);
  return b;
}

}  // namespace fermap::testing
