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

#include "fermap/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>

namespace fermap::oracle {

namespace {

constexpr std::size_t kMaxQubits = 20;

using Mat2 = std::array<std::array<cplx, 2>, 2>;

const cplx kI{0.0, 1.0};

Mat2 letter_matrix(char l) {
  switch (l) {
    case 'X':
      return {{{0.0, 1.0}, {1.0, 0.0}}};
    case 'Y':
      return {{{0.0, -kI}, {kI, 0.0}}};
    case 'Z':
      return {{{1.0, 0.0}, {0.0, -1.0}}};
    default:
      return {{{1.0, 0.0}, {0.0, 1.0}}};
  }
}

cplx i_pow(unsigned k) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[k & 3u];
}

void check_qubits(std::size_t n) {
  if (n > kMaxQubits) throw std::invalid_argument("dense oracle limited to 20 qubits");
}

// Monomial matrix: column k has its single nonzero entry coeff[k] in row target[k].
struct DenseOp {
  std::vector<std::uint64_t> target;
  std::vector<cplx> coeff;
};

DenseOp dense_op(const PauliString& p) {
  const std::size_t n = p.size();
  check_qubits(n);
  std::vector<Mat2> mats(n);
  for (std::size_t q = 0; q < n; ++q) mats[q] = letter_matrix(p.letter(q));
  const cplx scalar = i_pow(p.coefficient());
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseOp op{std::vector<std::uint64_t>(dim), std::vector<cplx>(dim)};
  for (std::uint64_t k = 0; k < dim; ++k) {
    std::uint64_t out = 0;
    cplx c = scalar;
    for (std::size_t q = 0; q < n; ++q) {
      const int in_bit = (k >> q) & 1;
      const int out_bit = std::abs(mats[q][0][in_bit]) > 0.5 ? 0 : 1;
      c *= mats[q][out_bit][in_bit];
      out |= static_cast<std::uint64_t>(out_bit) << q;
    }
    op.target[k] = out;
    op.coeff[k] = c;
  }
  return op;
}

DenseState apply(const DenseOp& op, const DenseState& s) {
  DenseState out(s.n);
  for (std::size_t k = 0; k < s.amp.size(); ++k) out.amp[op.target[k]] += op.coeff[k] * s.amp[k];
  return out;
}

std::vector<DenseOp> dense_ops(const FermionQubitMapping& m) {
  std::vector<DenseOp> ops;
  ops.reserve(m.ops().size());
  for (const auto& p : m.ops()) ops.push_back(dense_op(p));
  return ops;
}

// S_i |psi> = -i G_{2i} G_{2i+1} |psi>
DenseState apply_stabilizer(const std::vector<DenseOp>& ops, std::size_t i, const DenseState& s) {
  DenseState t = apply(ops[2 * i], apply(ops[2 * i + 1], s));
  for (auto& a : t.amp) a *= -kI;
  return t;
}

DenseState normalized(DenseState s) {
  const double nrm = s.norm();
  for (auto& a : s.amp) a /= nrm;
  return s;
}

DenseState vacuum_from_ops(const std::vector<DenseOp>& ops, std::size_t n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < dim; ++k) {
    DenseState v = DenseState::basis(n, k);
    for (std::size_t i = 0; i < n; ++i) {
      DenseState sv = apply_stabilizer(ops, i, v);
      for (std::size_t a = 0; a < v.amp.size(); ++a) v.amp[a] = 0.5 * (v.amp[a] + sv.amp[a]);
    }
    if (v.norm() < kTol) continue;
    v = normalized(std::move(v));
    for (const auto& a : v.amp) {
      if (std::abs(a) > kTol) {
        const cplx ph = std::conj(a) / std::abs(a);
        for (auto& b : v.amp) b *= ph;
        break;
      }
    }
    return v;
  }
  throw std::runtime_error("vacuum stabilizers have no common +1 eigenstate");
}

DenseState fock_from_ops(const std::vector<DenseOp>& ops, const DenseState& vac, const BitVec& f) {
  DenseState s = vac;
  for (std::size_t i = f.size(); i-- > 0;)
    if (f.get(i)) s = apply(ops[2 * i], s);
  return s;
}

// Occupation vectors to sweep: all of them, or a deterministic sample.
std::vector<BitVec> sweep(std::size_t n, const SweepOptions& opt, bool& sampled) {
  std::vector<BitVec> out;
  if (n <= opt.exhaustive_up_to) {
    sampled = false;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) out.push_back(BitVec::from_u64(n, k));
    return out;
  }
  sampled = true;
  std::mt19937_64 rng(opt.seed);
  out.push_back(BitVec(n));
  for (std::size_t s = 1; s < opt.samples; ++s) {
    BitVec f(n);
    for (std::size_t i = 0; i < n; ++i) f.set(i, (rng() >> 17) & 1);
    out.push_back(std::move(f));
  }
  return out;
}

std::uint64_t to_index(const BitVec& v) {
  std::uint64_t k = 0;
  for (std::size_t i : v.indices()) k |= std::uint64_t{1} << i;
  return k;
}

}  // namespace

DenseState::DenseState(std::size_t n_) : n(n_), amp(std::size_t{1} << n_, 0.0) {
  check_qubits(n_);
}

DenseState DenseState::basis(std::size_t n, std::uint64_t index) {
  DenseState s(n);
  s.amp.at(index) = 1.0;
  return s;
}

DenseState DenseState::from_product(const ProductState& p) {
  const double r = 1.0 / std::sqrt(2.0);
  DenseState s(p.size());
  for (std::uint64_t k = 0; k < s.amp.size(); ++k) {
    cplx a = i_pow(p.phase);
    for (std::size_t q = 0; q < p.size(); ++q) {
      const int bit = (k >> q) & 1;
      switch (p.qubits[q]) {
        case QubitState::ZPlus:
          a *= bit ? 0.0 : 1.0;
          break;
        case QubitState::ZMinus:
          a *= bit ? 1.0 : 0.0;
          break;
        case QubitState::XPlus:
          a *= r;
          break;
        case QubitState::XMinus:
          a *= bit ? -r : r;
          break;
        case QubitState::YPlus:
          a *= bit ? kI * r : cplx(r);
          break;
        case QubitState::YMinus:
          a *= bit ? -kI * r : cplx(r);
          break;
      }
    }
    s.amp[k] = a;
  }
  return s;
}

double DenseState::norm() const {
  double acc = 0.0;
  for (const auto& a : amp) acc += std::norm(a);
  return std::sqrt(acc);
}

cplx DenseState::inner(const DenseState& o) const {
  if (o.n != n) throw DimensionMismatch("dense states");
  cplx acc = 0.0;
  for (std::size_t k = 0; k < amp.size(); ++k) acc += std::conj(amp[k]) * o.amp[k];
  return acc;
}

double distance(const DenseState& a, const DenseState& b) {
  if (a.n != b.n) throw DimensionMismatch("dense states");
  double d = 0.0;
  for (std::size_t k = 0; k < a.amp.size(); ++k) d = std::max(d, std::abs(a.amp[k] - b.amp[k]));
  return d;
}

DenseState apply_pauli(const PauliString& p, const DenseState& s) {
  if (p.size() != s.n) throw DimensionMismatch("Pauli string and dense state");
  return apply(dense_op(p), s);
}

Report check_car(const FermionQubitMapping& m, double tol) {
  Report rep;
  const auto ops = dense_ops(m);
  const std::uint64_t dim = std::uint64_t{1} << m.size();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::uint64_t k = 0; k < dim; ++k) {
      const std::uint64_t t = ops[i].target[k];
      if (ops[i].target[t] != k || std::abs(ops[i].coeff[t] - std::conj(ops[i].coeff[k])) > tol) {
        rep.ok = false;
        rep.message = "operator " + std::to_string(i) + " is not Hermitian";
        return rep;
      }
    }
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i; j < ops.size(); ++j) {
      for (std::uint64_t k = 0; k < dim; ++k) {
        // Column k of G_i G_j + G_j G_i, read off the two monomial factors.
        const std::uint64_t tij = ops[i].target[ops[j].target[k]];
        const std::uint64_t tji = ops[j].target[ops[i].target[k]];
        const cplx cij = ops[j].coeff[k] * ops[i].coeff[ops[j].target[k]];
        const cplx cji = ops[i].coeff[k] * ops[j].coeff[ops[i].target[k]];
        const cplx want = i == j ? 2.0 : 0.0;
        double d;
        if (tij == tji) {
          d = std::abs(cij + cji - (tij == k ? want : 0.0));
          if (tij != k) d = std::max(d, std::abs(want));
        } else {
          d = std::max(std::abs(cij), std::abs(cji));
        }
        if (d > tol) {
          rep.ok = false;
          rep.deviation = d;
          rep.message = "anticommutator of operators " + std::to_string(i) + " and " +
                        std::to_string(j) + " is wrong on basis state " + std::to_string(k);
          return rep;
        }
      }
    }
  }
  return rep;
}

DenseState dense_vacuum(const FermionQubitMapping& m) {
  return vacuum_from_ops(dense_ops(m), m.size());
}

DenseState dense_fock_state(const FermionQubitMapping& m, const DenseState& vacuum,
                            const BitVec& f) {
  return fock_from_ops(dense_ops(m), vacuum, f);
}

Report verify_fock_basis(const FermionQubitMapping& m, const SweepOptions& opt) {
  Report rep;
  const std::size_t n = m.size();
  const auto ops = dense_ops(m);
  const DenseState vac = vacuum_from_ops(ops, n);
  const auto fs = sweep(n, opt, rep.sampled);
  std::vector<DenseState> states;
  for (const auto& f : fs) {
    DenseState s = fock_from_ops(ops, vac, f);
    const double nd = std::abs(s.norm() - 1.0);
    if (nd > kTol) {
      rep.ok = false;
      rep.f = f;
      rep.deviation = nd;
      rep.message = "Fock state " + f.to_string() + " is not normalized";
      return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
      DenseState t = apply_stabilizer(ops, i, s);
      const double sign = f.get(i) ? -1.0 : 1.0;
      for (auto& a : t.amp) a *= sign;
      const double d = distance(t, s);
      if (d > kTol) {
        rep.ok = false;
        rep.f = f;
        rep.deviation = d;
        rep.message = "Fock state " + f.to_string() + " has the wrong eigenvalue for stabilizer " +
                      std::to_string(i);
        return rep;
      }
    }
    ++rep.checked;
    if (n <= 6) states.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a + 1; b < states.size(); ++b) {
      const double ov = std::abs(states[a].inner(states[b]));
      if (ov > kTol) {
        rep.ok = false;
        rep.f = fs[b];
        rep.deviation = ov;
        rep.message = "Fock states " + fs[a].to_string() + " and " + fs[b].to_string() +
                      " overlap";
        return rep;
      }
    }
  }
  return rep;
}

Report verify_affine(const FermionQubitMapping& m, const BinMatrix& g, const BitVec& b,
                     const SweepOptions& opt) {
  Report rep;
  const std::size_t n = m.size();
  if (g.size() != n || b.size() != n) throw DimensionMismatch("encoding and mapping");
  const auto ops = dense_ops(m);
  const DenseState vac = vacuum_from_ops(ops, n);
  for (const auto& f : sweep(n, opt, rep.sampled)) {
    const DenseState s = fock_from_ops(ops, vac, f);
    const DenseState want = DenseState::basis(n, to_index(mat_vec(g, f ^ b)));
    const double d = distance(s, want);
    if (d > kTol) {
      rep.ok = false;
      rep.f = f;
      rep.deviation = d;
      rep.message = "Fock state " + f.to_string() + " is not +|G(f+b)>";
      return rep;
    }
    ++rep.checked;
  }
  return rep;
}

Report verify_linear(const FermionQubitMapping& m, const BinMatrix& g, const SweepOptions& opt) {
  return verify_affine(m, g, BitVec(m.size()), opt);
}

Report verify_lemma1(std::size_t n) {
  check_qubits(n);
  Report rep;
  const std::uint64_t dim = std::uint64_t{1} << n;
  // Jordan-Wigner Majoranas written out directly on basis states.
  auto gamma = [&](std::size_t k, const DenseState& s) {
    const std::size_t i = k / 2;
    const std::uint64_t low = (std::uint64_t{1} << i) - 1;
    DenseState out(n);
    for (std::uint64_t b = 0; b < dim; ++b) {
      cplx c = (std::popcount(b & low) & 1) ? -1.0 : 1.0;
      if (k % 2 == 1) c *= ((b >> i) & 1) ? -kI : kI;
      out.amp[b ^ (std::uint64_t{1} << i)] += c * s.amp[b];
    }
    return out;
  };
  auto create = [&](std::size_t i, const DenseState& s) {
    DenseState a = gamma(2 * i, s), b = gamma(2 * i + 1, s);
    DenseState out(n);
    for (std::uint64_t k = 0; k < dim; ++k) out.amp[k] = 0.5 * (a.amp[k] - kI * b.amp[k]);
    return out;
  };
  const DenseState vac = DenseState::basis(n, 0);
  for (std::uint64_t k = 0; k < dim; ++k) {
    const BitVec f = BitVec::from_u64(n, k);
    DenseState by_ladder = vac, by_even = vac, by_odd = vac;
    for (std::size_t i = n; i-- > 0;) {
      if (!f.get(i)) continue;
      by_ladder = create(i, by_ladder);
      by_even = gamma(2 * i, by_even);
      by_odd = gamma(2 * i + 1, by_odd);
      for (auto& a : by_odd.amp) a *= -kI;
    }
    const DenseState want = DenseState::basis(n, k);
    const double d = std::max({distance(by_ladder, want), distance(by_even, want),
                               distance(by_odd, want)});
    if (d > kTol) {
      rep.ok = false;
      rep.f = f;
      rep.deviation = d;
      rep.message = "Fock state definitions disagree at f=" + f.to_string();
      return rep;
    }
    ++rep.checked;
  }
  return rep;
}

std::size_t schmidt_rank(const DenseState& s, const std::vector<std::size_t>& subsystem,
                         double tol) {
  std::vector<std::size_t> rest;
  for (std::size_t q = 0; q < s.n; ++q)
    if (std::find(subsystem.begin(), subsystem.end(), q) == subsystem.end()) rest.push_back(q);
  const std::size_t rows = std::size_t{1} << subsystem.size();
  const std::size_t cols = std::size_t{1} << rest.size();
  std::vector<std::vector<cplx>> mat(rows, std::vector<cplx>(cols));
  for (std::uint64_t k = 0; k < s.amp.size(); ++k) {
    std::size_t r = 0, c = 0;
    for (std::size_t a = 0; a < subsystem.size(); ++a) r |= ((k >> subsystem[a]) & 1) << a;
    for (std::size_t a = 0; a < rest.size(); ++a) c |= ((k >> rest[a]) & 1) << a;
    mat[r][c] = s.amp[k];
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (std::abs(mat[r][c]) > std::abs(mat[piv][c])) piv = r;
    if (std::abs(mat[piv][c]) <= tol) continue;
    std::swap(mat[piv], mat[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const cplx f = mat[r][c] / mat[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) mat[r][cc] -= f * mat[rank][cc];
    }
    ++rank;
  }
  return rank;
}

bool is_product(const DenseState& s, double tol) {
  for (std::size_t q = 0; q < s.n; ++q)
    if (schmidt_rank(s, {q}, tol) > 1) return false;
  return true;
}

}  // namespace fermap::oracle
