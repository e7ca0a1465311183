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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fermap/pauli.hpp"

namespace fermap {

/**
 * Ordered list of n ordered pairs (G_{2i}, G_{2i+1}) of Pauli strings on
 * n qubits, one pair per fermionic mode.
 */
class FermionQubitMapping {
 public:
  FermionQubitMapping() = default;
  /// Unchecked construction; ops.size() must be 2n with every op on n qubits.
  explicit FermionQubitMapping(std::vector<PauliString> ops);
  /// Throws std::invalid_argument if validate() reports a violation.
  static FermionQubitMapping checked(std::vector<PauliString> ops);

  std::size_t size() const { return ops_.size() / 2; }
  const PauliString& op(std::size_t k) const { return ops_.at(k); }
  const std::vector<PauliString>& ops() const { return ops_; }
  std::pair<const PauliString&, const PauliString&> pair(std::size_t i) const {
    return {ops_.at(2 * i), ops_.at(2 * i + 1)};
  }
  bool validated() const { return validated_; }

  /// Equality of the operator lists; the validated flag is ignored.
  bool operator==(const FermionQubitMapping& o) const { return ops_ == o.ops_; }

  /// `n=<N>` then `pair <i>: <PAULI> ; <PAULI>` per mode.
  std::string to_text() const;
  static FermionQubitMapping parse(std::string_view text);

 private:
  std::vector<PauliString> ops_;
  bool validated_ = false;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  /// Offending operator indices; j is unset for a Hermiticity failure.
  std::optional<std::size_t> i;
  std::optional<std::size_t> j;
  explicit operator bool() const { return ok; }
};

ValidationReport validate(const FermionQubitMapping& m);

enum class NamedMapping { jordan_wigner, bravyi_kitaev, parity };

FermionQubitMapping named_mapping(NamedMapping kind, std::size_t n);
FermionQubitMapping jordan_wigner(std::size_t n);

/// -i G_{2i} G_{2i+1} for every mode.
std::vector<PauliString> vacuum_stabilizers(const FermionQubitMapping& m);

/** Result of the symbolic vacuum computation. */
struct VacuumResult {
  /// Set when the vacuum is a product state; its phase is 0.
  std::optional<ProductState> state;
  /// For an entangled vacuum on at most 10 qubits, the dense oracle vacuum.
  std::vector<std::complex<double>> dense;
  bool is_product() const { return state.has_value(); }
};

VacuumResult vacuum_state(const FermionQubitMapping& m);

/// G_0^{f_0} G_2^{f_1} ... applied to the vacuum. Throws NonProductVacuum.
ProductState fock_state(const FermionQubitMapping& m, const BitVec& f);
/// Same with a precomputed product vacuum.
ProductState fock_state(const FermionQubitMapping& m, const ProductState& vacuum, const BitVec& f);

/** Exact complex number (re + i im) / 2^k. */
struct GaussianDyadic {
  std::int64_t re = 0;
  std::int64_t im = 0;
  int k = 0;

  GaussianDyadic() = default;
  GaussianDyadic(std::int64_t r, std::int64_t i = 0, int k_ = 0);
  static GaussianDyadic i_pow(unsigned p);

  bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> value() const;
  std::string to_string() const;

  bool operator==(const GaussianDyadic&) const = default;
};

GaussianDyadic operator+(const GaussianDyadic& a, const GaussianDyadic& b);
GaussianDyadic operator*(const GaussianDyadic& a, const GaussianDyadic& b);

/** Sum of Hermitian Pauli letter strings with exact coefficients. */
class PauliSum {
 public:
  explicit PauliSum(std::size_t n = 0) : n_(n) {}
  /// The single term p, with its phase folded into the coefficient.
  explicit PauliSum(const PauliString& p, GaussianDyadic c = GaussianDyadic(1));

  static PauliSum identity(std::size_t n, GaussianDyadic c = GaussianDyadic(1));

  void add(const PauliString& p, GaussianDyadic c = GaussianDyadic(1));

  std::size_t size() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<UnsignedPauli, GaussianDyadic>& terms() const { return terms_; }

  PauliSum& operator+=(const PauliSum& o);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(GaussianDyadic c, const PauliSum& a);

  bool operator==(const PauliSum&) const = default;

  /// One term per line, `<coeff> <letters>`; the zero sum prints as `0`.
  std::string to_string() const;

 private:
  std::size_t n_;
  std::map<UnsignedPauli, GaussianDyadic> terms_;
};

/// A_i = (G_{2i} + i G_{2i+1}) / 2.
PauliSum annihilation(const FermionQubitMapping& m, std::size_t i);
/// A_i^dagger = (G_{2i} - i G_{2i+1}) / 2.
PauliSum creation(const FermionQubitMapping& m, std::size_t i);
PauliSum number_operator(const FermionQubitMapping& m, std::size_t i);

struct LadderOp {
  std::size_t mode;
  bool dagger;
};

/// Product of ladder operators, left to right.
PauliSum transform_ladder_term(const FermionQubitMapping& m, const std::vector<LadderOp>& ops);
/// Parse e.g. "a† 3 a 1" (also accepts "a^" and "adag" for the creation operator).
std::vector<LadderOp> parse_ladder_term(std::string_view text);
PauliString transform_majorana_monomial(const FermionQubitMapping& m,
                                        const std::vector<std::size_t>& indices);

struct WeightStats {
  std::size_t max_weight = 0;
  std::size_t total_weight = 0;
  std::size_t count = 0;
  double mean() const { return count ? static_cast<double>(total_weight) / count : 0.0; }
  /// Mean as a reduced fraction, e.g. "5/2".
  std::string mean_fraction() const;
};

WeightStats weight_stats(const FermionQubitMapping& m);

}  // namespace fermap
