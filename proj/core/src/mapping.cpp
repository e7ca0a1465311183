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

#include "fermap/mapping.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "fermap/encoding.hpp"
#include "fermap/gf2.hpp"
#include "fermap/oracle.hpp"

namespace fermap {

FermionQubitMapping::FermionQubitMapping(std::vector<PauliString> ops) : ops_(std::move(ops)) {
  if (ops_.empty() || ops_.size() % 2 != 0)
    throw std::invalid_argument("a mapping needs 2n operators with n >= 1");
  const std::size_t n = ops_.size() / 2;
  for (const auto& p : ops_)
    if (p.size() != n)
      throw DimensionMismatch("operator on " + std::to_string(p.size()) + " qubits in a " +
                              std::to_string(n) + "-mode mapping");
}

FermionQubitMapping FermionQubitMapping::checked(std::vector<PauliString> ops) {
  FermionQubitMapping m(std::move(ops));
  auto rep = validate(m);
  if (!rep) throw std::invalid_argument("invalid mapping: " + rep.message);
  m.validated_ = true;
  return m;
}

std::string FermionQubitMapping::to_text() const {
  std::string out = "n=" + std::to_string(size()) + "\n";
  for (std::size_t i = 0; i < size(); ++i) {
    out += "pair " + std::to_string(i) + ": " + ops_[2 * i].to_string() + " ; " +
           ops_[2 * i + 1].to_string() + "\n";
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

FermionQubitMapping FermionQubitMapping::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<PauliString> ops;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!have_n) {
      if (t.rfind("n=", 0) != 0) throw ParseError(where + "expected header n=<N>");
      try {
        std::size_t used = 0;
        n = std::stoul(t.substr(2), &used);
        if (used != t.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(where + "bad mode count");
      }
      if (n == 0) throw ParseError(where + "mode count must be positive");
      have_n = true;
      continue;
    }
    const std::string expect = "pair " + std::to_string(ops.size() / 2) + ":";
    if (t.rfind(expect, 0) != 0) throw ParseError(where + "expected '" + expect + "'");
    const std::string body = t.substr(expect.size());
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw ParseError(where + "missing ';' between operators");
    try {
      ops.push_back(PauliString::parse(body.substr(0, semi), n));
      ops.push_back(PauliString::parse(body.substr(semi + 1), n));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
    if (ops.size() > 2 * n) throw ParseError(where + "more pairs than the header declares");
  }
  if (!have_n) throw ParseError("mapping file has no header");
  if (ops.size() != 2 * n)
    throw ParseError("mapping file has " + std::to_string(ops.size() / 2) + " pairs, header says " +
                     std::to_string(n));
  return FermionQubitMapping(std::move(ops));
}

ValidationReport validate(const FermionQubitMapping& m) {
  ValidationReport rep;
  const auto& ops = m.ops();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!is_hermitian(ops[i])) {
      rep.ok = false;
      rep.i = i;
      rep.message = "operator " + std::to_string(i) + " (" + ops[i].to_string() +
                    ") is not Hermitian";
      return rep;
    }
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!anticommutes(ops[i], ops[j])) {
        rep.ok = false;
        rep.i = i;
        rep.j = j;
        rep.message = "operators " + std::to_string(i) + " (" + ops[i].to_string() + ") and " +
                      std::to_string(j) + " (" + ops[j].to_string() + ") commute";
        return rep;
      }
    }
  }
  return rep;
}

FermionQubitMapping jordan_wigner(std::size_t n) {
  if (n == 0) throw std::invalid_argument("mode count must be positive");
  std::vector<PauliString> ops;
  ops.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    PauliString chain(n);
    for (std::size_t k = 0; k < i; ++k) chain = chain * PauliString::single(n, k, 'Z');
    ops.push_back(chain * PauliString::single(n, i, 'X'));
    ops.push_back(chain * PauliString::single(n, i, 'Y'));
  }
  return FermionQubitMapping::checked(std::move(ops));
}

FermionQubitMapping named_mapping(NamedMapping kind, std::size_t n) {
  switch (kind) {
    case NamedMapping::jordan_wigner:
      return jordan_wigner(n);
    case NamedMapping::bravyi_kitaev:
      return majoranas_of_affine(AffineEncoding(named_matrix(NamedMatrix::bravyi_kitaev, n)));
    case NamedMapping::parity:
      return majoranas_of_affine(AffineEncoding(named_matrix(NamedMatrix::parity, n)));
  }
  throw std::invalid_argument("unknown mapping kind");
}

namespace {

void require_valid(const FermionQubitMapping& m) {
  if (m.validated()) return;
  auto rep = validate(m);
  if (!rep) throw std::invalid_argument("invalid mapping: " + rep.message);
}

// Row reduction of a set of symplectic vectors, remembering which inputs
// were combined so a target in the span can be written as a product.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<PauliString>& gens) : count_(gens.size()) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Row r{concat(gens[k]), BitVec::unit(count_, k), 0};
      reduce(r);
      if (r.vec.none()) throw std::logic_error("vacuum stabilizers are not independent");
      r.pivot = r.vec.indices().front();
      for (auto& other : rows_)
        if (other.vec.get(r.pivot)) {
          other.vec ^= r.vec;
          other.combo ^= r.combo;
        }
      rows_.push_back(std::move(r));
    }
  }

  std::optional<BitVec> solve(const PauliString& target) const {
    Row r{concat(target), BitVec(count_), 0};
    reduce(r);
    if (r.vec.any()) return std::nullopt;
    return r.combo;
  }

 private:
  struct Row {
    BitVec vec;
    BitVec combo;
    std::size_t pivot;
  };

  static BitVec concat(const PauliString& p) {
    const std::size_t n = p.size();
    BitVec v(2 * n);
    for (std::size_t q : p.x().indices()) v.set(q);
    for (std::size_t q : p.z().indices()) v.set(n + q);
    return v;
  }

  void reduce(Row& r) const {
    for (const auto& row : rows_)
      if (r.vec.get(row.pivot)) {
        r.vec ^= row.vec;
        r.combo ^= row.combo;
      }
  }

  std::size_t count_;
  std::vector<Row> rows_;
};

}  // namespace

std::vector<PauliString> vacuum_stabilizers(const FermionQubitMapping& m) {
  require_valid(m);
  std::vector<PauliString> out;
  out.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    out.push_back((m.op(2 * i) * m.op(2 * i + 1)).times_i(3));
  return out;
}

VacuumResult vacuum_state(const FermionQubitMapping& m) {
  const auto stabs = vacuum_stabilizers(m);
  const std::size_t n = m.size();
  SpanSolver solver(stabs);
  std::vector<QubitState> labels(n);
  for (std::size_t q = 0; q < n; ++q) {
    bool found = false;
    for (char axis : {'Z', 'X', 'Y'}) {
      const PauliString cand = PauliString::single(n, q, axis);
      bool commutes_all = true;
      for (const auto& s : stabs)
        if (anticommutes(s, cand)) {
          commutes_all = false;
          break;
        }
      if (!commutes_all) continue;
      // A Pauli commuting with a full stabilizer group lies in it up to sign.
      auto combo = solver.solve(cand);
      if (!combo) throw std::logic_error("stabilizer group is not maximal");
      PauliString prod(n);
      for (std::size_t k : combo->indices()) prod = prod * stabs[k];
      const unsigned c = prod.coefficient();
      if (c != 0 && c != 2) throw std::logic_error("stabilizer product is not Hermitian");
      labels[q] = make_state(axis, c == 0 ? 1 : -1);
      found = true;
      break;
    }
    if (!found) {
      VacuumResult r;
      if (n <= 10) r.dense = oracle::dense_vacuum(m).amp;
      return r;
    }
  }
  VacuumResult r;
  r.state = ProductState(std::move(labels));
  return r;
}

ProductState fock_state(const FermionQubitMapping& m, const BitVec& f) {
  auto vac = vacuum_state(m);
  if (!vac.is_product()) throw NonProductVacuum();
  return fock_state(m, *vac.state, f);
}

ProductState fock_state(const FermionQubitMapping& m, const ProductState& vacuum, const BitVec& f) {
  if (f.size() != m.size() || vacuum.size() != m.size())
    throw DimensionMismatch("occupation vector length");
  PauliString prod(m.size());
  for (std::size_t i : f.indices()) prod = prod * m.op(2 * i);
  return apply_to_product_state(prod, vacuum);
}

GaussianDyadic::GaussianDyadic(std::int64_t r, std::int64_t i, int k_) : re(r), im(i), k(k_) {
  if (k < 0) throw std::invalid_argument("negative dyadic exponent");
  if (re == 0 && im == 0) k = 0;
  while (k > 0 && re % 2 == 0 && im % 2 == 0) {
    re /= 2;
    im /= 2;
    --k;
  }
}

GaussianDyadic GaussianDyadic::i_pow(unsigned p) {
  switch (p & 3u) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

std::complex<double> GaussianDyadic::value() const {
  const double s = std::ldexp(1.0, -k);
  return {static_cast<double>(re) * s, static_cast<double>(im) * s};
}

std::string GaussianDyadic::to_string() const {
  if (is_zero()) return "0";
  std::string num;
  if (im == 0) {
    num = std::to_string(re);
    if (re > 0) num = "+" + num;
  } else if (re == 0) {
    if (im == 1) {
      num = "+i";
    } else if (im == -1) {
      num = "-i";
    } else {
      num = (im > 0 ? "+" : "") + std::to_string(im) + "i";
    }
  } else {
    std::string ip = im == 1 ? "+i" : im == -1 ? "-i" : (im > 0 ? "+" : "") + std::to_string(im) + "i";
    num = "+(" + std::to_string(re) + ip + ")";
  }
  if (k == 0) return num;
  return num + "/" + std::to_string(std::int64_t{1} << k);
}

GaussianDyadic operator+(const GaussianDyadic& a, const GaussianDyadic& b) {
  const int k = std::max(a.k, b.k);
  const std::int64_t sa = std::int64_t{1} << (k - a.k), sb = std::int64_t{1} << (k - b.k);
  return GaussianDyadic(a.re * sa + b.re * sb, a.im * sa + b.im * sb, k);
}

GaussianDyadic operator*(const GaussianDyadic& a, const GaussianDyadic& b) {
  return GaussianDyadic(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, a.k + b.k);
}

PauliSum::PauliSum(const PauliString& p, GaussianDyadic c) : n_(p.size()) { add(p, c); }

PauliSum PauliSum::identity(std::size_t n, GaussianDyadic c) {
  PauliSum s(n);
  s.add(PauliString(n), c);
  return s;
}

void PauliSum::add(const PauliString& p, GaussianDyadic c) {
  if (p.size() != n_) throw DimensionMismatch("Pauli sum term");
  const GaussianDyadic coeff = c * GaussianDyadic::i_pow(p.coefficient());
  if (coeff.is_zero()) return;
  UnsignedPauli key(p);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  if (o.n_ != n_) throw DimensionMismatch("Pauli sum addition");
  for (const auto& [p, c] : o.terms_) add(p.hermitian(), c);
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("Pauli sum product");
  PauliSum out(a.n_);
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add(pa.hermitian() * pb.hermitian(), ca * cb);
  return out;
}

PauliSum operator*(GaussianDyadic c, const PauliSum& a) {
  PauliSum out(a.n_);
  for (const auto& [p, coeff] : a.terms_) out.add(p.hermitian(), c * coeff);
  return out;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [p, c] : terms_) out += c.to_string() + " " + p.to_string() + "\n";
  return out;
}

namespace {

void check_mode(const FermionQubitMapping& m, std::size_t i) {
  if (i >= m.size())
    throw std::out_of_range("mode " + std::to_string(i) + " out of range for " +
                            std::to_string(m.size()) + " modes");
}

}  // namespace

PauliSum annihilation(const FermionQubitMapping& m, std::size_t i) {
  check_mode(m, i);
  PauliSum s(m.op(2 * i), GaussianDyadic(1, 0, 1));
  s.add(m.op(2 * i + 1), GaussianDyadic(0, 1, 1));
  return s;
}

PauliSum creation(const FermionQubitMapping& m, std::size_t i) {
  check_mode(m, i);
  PauliSum s(m.op(2 * i), GaussianDyadic(1, 0, 1));
  s.add(m.op(2 * i + 1), GaussianDyadic(0, -1, 1));
  return s;
}

PauliSum number_operator(const FermionQubitMapping& m, std::size_t i) {
  return creation(m, i) * annihilation(m, i);
}

PauliSum transform_ladder_term(const FermionQubitMapping& m, const std::vector<LadderOp>& ops) {
  PauliSum acc = PauliSum::identity(m.size());
  for (const auto& op : ops) acc = acc * (op.dagger ? creation(m, op.mode) : annihilation(m, op.mode));
  return acc;
}

std::vector<LadderOp> parse_ladder_term(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<LadderOp> ops;
  std::string tok;
  while (in >> tok) {
    bool dagger;
    if (tok == "a") {
      dagger = false;
    } else if (tok == "a†" || tok == "a^" || tok == "adag") {
      dagger = true;
    } else {
      throw ParseError("bad ladder operator token '" + tok + "'");
    }
    std::string mode;
    if (!(in >> mode)) throw ParseError("ladder operator '" + tok + "' is missing its mode");
    try {
      std::size_t used = 0;
      const auto v = std::stoul(mode, &used);
      if (used != mode.size()) throw std::invalid_argument("trailing");
      ops.push_back({v, dagger});
    } catch (const std::exception&) {
      throw ParseError("bad mode index '" + mode + "'");
    }
  }
  if (ops.empty()) throw ParseError("empty ladder term");
  return ops;
}

PauliString transform_majorana_monomial(const FermionQubitMapping& m,
                                        const std::vector<std::size_t>& indices) {
  PauliString acc(m.size());
  for (std::size_t k : indices) {
    if (k >= 2 * m.size()) throw std::out_of_range("Majorana index out of range");
    acc = acc * m.op(k);
  }
  return acc;
}

WeightStats weight_stats(const FermionQubitMapping& m) {
  WeightStats s;
  for (const auto& p : m.ops()) {
    const std::size_t w = weight(p);
    s.max_weight = std::max(s.max_weight, w);
    s.total_weight += w;
    ++s.count;
  }
  return s;
}

std::string WeightStats::mean_fraction() const {
  if (count == 0) return "0";
  const std::size_t g = std::gcd(total_weight, count);
  const std::size_t num = total_weight / g, den = count / g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace fermap
