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

#include "fermap/pauli.hpp"

#include <charconv>
#include <sstream>
#include <utility>

namespace fermap {

namespace {

void check_size(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size())
    throw DimensionMismatch("Pauli strings on " + std::to_string(p.size()) + " and " +
                            std::to_string(q.size()) + " qubits");
}

const char* kCoefficient[4] = {"+1", "+i", "-1", "-i"};

}  // namespace

PauliString::PauliString(BitVec x, BitVec z, unsigned phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3u) {
  if (x_.size() != z_.size()) throw DimensionMismatch("x and z parts differ in length");
}

PauliString PauliString::single(std::size_t n, std::size_t q, char letter) {
  if (q >= n) throw std::out_of_range("qubit index out of range");
  PauliString p(n);
  switch (letter) {
    case 'X':
      p.x_.set(q);
      break;
    case 'Z':
      p.z_.set(q);
      break;
    case 'Y':
      p.x_.set(q);
      p.z_.set(q);
      p.phase_ = 1;
      break;
    case 'I':
      break;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: ") + letter);
  }
  return p;
}

PauliString PauliString::parse(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok)) throw ParseError("empty Pauli string");
  unsigned coeff = 4;
  for (unsigned k = 0; k < 4; ++k)
    if (tok == kCoefficient[k]) coeff = k;
  if (coeff == 4) throw ParseError("bad Pauli sign token '" + tok + "'");

  std::vector<std::pair<std::size_t, char>> factors;
  bool saw_identity = false;
  while (in >> tok) {
    if (tok == "I") {
      saw_identity = true;
      continue;
    }
    const char letter = tok[0];
    if (letter != 'X' && letter != 'Y' && letter != 'Z')
      throw ParseError("bad Pauli factor '" + tok + "'");
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.size() < 2)
      throw ParseError("bad qubit index in '" + tok + "'");
    if (!factors.empty() && idx <= factors.back().first)
      throw ParseError("Pauli factors must have strictly increasing qubit indices");
    factors.emplace_back(idx, letter);
  }
  if (saw_identity && !factors.empty()) throw ParseError("identity token mixed with factors");
  if (!saw_identity && factors.empty()) throw ParseError("Pauli string has no factors");

  if (n == 0) {
    if (factors.empty()) throw ParseError("cannot infer qubit count of the identity");
    n = factors.back().first + 1;
  }
  PauliString p(n);
  unsigned ys = 0;
  for (auto [q, letter] : factors) {
    if (q >= n) throw ParseError("qubit index " + std::to_string(q) + " out of range");
    if (letter != 'Z') p.x_.set(q);
    if (letter != 'X') p.z_.set(q);
    if (letter == 'Y') ++ys;
  }
  p.phase_ = (coeff + ys) & 3u;
  return p;
}

char PauliString::letter(std::size_t q) const {
  const bool xb = x_.get(q), zb = z_.get(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

unsigned PauliString::coefficient() const {
  return (phase_ + 4u - static_cast<unsigned>(y_count(*this) & 3u)) & 3u;
}

PauliString PauliString::times_i(unsigned k) const {
  PauliString r = *this;
  r.phase_ = (phase_ + k) & 3u;
  return r;
}

std::strong_ordering PauliString::operator<=>(const PauliString& o) const {
  if (auto c = x_ <=> o.x_; c != 0) return c;
  if (auto c = z_ <=> o.z_; c != 0) return c;
  return phase_ <=> o.phase_;
}

std::string PauliString::to_string() const {
  std::string out = kCoefficient[coefficient()];
  const std::string letters = UnsignedPauli(*this).to_string();
  out += ' ';
  out += letters;
  return out;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  check_size(p, q);
  // Moving Z^{p.z} past X^{q.x} picks up (-1) per overlapping qubit.
  const unsigned swaps = static_cast<unsigned>((p.z() & q.x()).popcount() & 1u);
  return PauliString(p.x() ^ q.x(), p.z() ^ q.z(), p.phase() + q.phase() + 2 * swaps);
}

bool anticommutes(const PauliString& p, const PauliString& q) {
  check_size(p, q);
  return p.x().dot(q.z()) != p.z().dot(q.x());
}

std::size_t weight(const PauliString& p) { return (p.x() | p.z()).popcount(); }

std::size_t y_count(const PauliString& p) { return (p.x() & p.z()).popcount(); }

bool is_hermitian(const PauliString& p) { return ((p.phase() + y_count(p)) & 1u) == 0; }

PauliString restrict(const PauliString& p, const std::vector<std::size_t>& qubits) {
  const std::size_t n = p.size();
  BitVec mask(n);
  for (std::size_t q : qubits) {
    if (q >= n) throw std::out_of_range("restrict: qubit index out of range");
    mask.set(q);
  }
  BitVec x = p.x() & mask, z = p.z() & mask;
  const auto dropped_y = static_cast<unsigned>(y_count(p) - (x & z).popcount());
  return PauliString(std::move(x), std::move(z), p.phase() + 4u - (dropped_y & 3u));
}

UnsignedPauli::UnsignedPauli(BitVec x_, BitVec z_) : x(std::move(x_)), z(std::move(z_)) {
  if (x.size() != z.size()) throw DimensionMismatch("x and z parts differ in length");
}

char UnsignedPauli::letter(std::size_t q) const {
  const bool xb = x.get(q), zb = z.get(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

PauliString UnsignedPauli::hermitian() const {
  return PauliString(x, z, static_cast<unsigned>((x & z).popcount() & 3u));
}

std::string UnsignedPauli::to_string() const {
  std::string out;
  for (std::size_t q = 0; q < size(); ++q) {
    const char l = letter(q);
    if (l == 'I') continue;
    if (!out.empty()) out += ' ';
    out += l;
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

std::strong_ordering UnsignedPauli::operator<=>(const UnsignedPauli& o) const {
  if (auto c = x <=> o.x; c != 0) return c;
  return z <=> o.z;
}

char state_axis(QubitState e) {
  switch (e) {
    case QubitState::ZPlus:
    case QubitState::ZMinus:
      return 'Z';
    case QubitState::XPlus:
    case QubitState::XMinus:
      return 'X';
    default:
      return 'Y';
  }
}

int state_sign(QubitState e) {
  return (e == QubitState::ZPlus || e == QubitState::XPlus || e == QubitState::YPlus) ? 1 : -1;
}

QubitState make_state(char axis, int sign) {
  const bool plus = sign > 0;
  switch (axis) {
    case 'Z':
      return plus ? QubitState::ZPlus : QubitState::ZMinus;
    case 'X':
      return plus ? QubitState::XPlus : QubitState::XMinus;
    case 'Y':
      return plus ? QubitState::YPlus : QubitState::YMinus;
    default:
      throw std::invalid_argument(std::string("not a Pauli axis: ") + axis);
  }
}

char state_char(QubitState e) {
  static const char chars[6] = {'0', '1', '+', '-', 'r', 'l'};
  return chars[static_cast<int>(e)];
}

QubitState state_from_char(char c) {
  switch (c) {
    case '0':
      return QubitState::ZPlus;
    case '1':
      return QubitState::ZMinus;
    case '+':
      return QubitState::XPlus;
    case '-':
      return QubitState::XMinus;
    case 'r':
      return QubitState::YPlus;
    case 'l':
      return QubitState::YMinus;
    default:
      throw ParseError(std::string("bad vacuum character '") + c + "'");
  }
}

ProductState ProductState::computational(const BitVec& bits, unsigned phase) {
  std::vector<QubitState> q(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) q[i] = bits.get(i) ? QubitState::ZMinus : QubitState::ZPlus;
  return ProductState(std::move(q), phase);
}

ProductState ProductState::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty vacuum string");
  std::vector<QubitState> q;
  q.reserve(text.size());
  for (char c : text) q.push_back(state_from_char(c));
  return ProductState(std::move(q));
}

bool ProductState::is_computational() const {
  for (QubitState e : qubits)
    if (state_axis(e) != 'Z') return false;
  return true;
}

BitVec ProductState::bits() const {
  if (!is_computational()) throw std::logic_error("state is not a computational basis state");
  BitVec b(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (qubits[i] == QubitState::ZMinus) b.set(i);
  return b;
}

std::string ProductState::label() const {
  std::string s;
  for (QubitState e : qubits) s += state_char(e);
  return s;
}

std::string ProductState::to_string() const {
  return std::string(kCoefficient[phase]) + "|" + label() + ">";
}

namespace {

// Action of X or Z on one eigenstate: returns the image and the phase picked up.
std::pair<QubitState, unsigned> act(char op, QubitState e) {
  if (op == 'Z') {
    switch (e) {
      case QubitState::ZPlus:
        return {QubitState::ZPlus, 0};
      case QubitState::ZMinus:
        return {QubitState::ZMinus, 2};
      case QubitState::XPlus:
        return {QubitState::XMinus, 0};
      case QubitState::XMinus:
        return {QubitState::XPlus, 0};
      case QubitState::YPlus:
        return {QubitState::YMinus, 0};
      case QubitState::YMinus:
        return {QubitState::YPlus, 0};
    }
  }
  switch (e) {
    case QubitState::ZPlus:
      return {QubitState::ZMinus, 0};
    case QubitState::ZMinus:
      return {QubitState::ZPlus, 0};
    case QubitState::XPlus:
      return {QubitState::XPlus, 0};
    case QubitState::XMinus:
      return {QubitState::XMinus, 2};
    case QubitState::YPlus:
      return {QubitState::YMinus, 1};
    case QubitState::YMinus:
      return {QubitState::YPlus, 3};
  }
  return {e, 0};
}

}  // namespace

ProductState apply_to_product_state(const PauliString& p, const ProductState& s) {
  if (p.size() != s.size())
    throw DimensionMismatch("Pauli string on " + std::to_string(p.size()) + " qubits, state on " +
                            std::to_string(s.size()));
  ProductState out = s;
  unsigned phase = s.phase + p.phase();
  for (std::size_t q : (p.x() | p.z()).indices()) {
    QubitState e = out.qubits[q];
    if (p.z().get(q)) {
      auto [img, ph] = act('Z', e);
      e = img;
      phase += ph;
    }
    if (p.x().get(q)) {
      auto [img, ph] = act('X', e);
      e = img;
      phase += ph;
    }
    out.qubits[q] = e;
  }
  out.phase = phase & 3u;
  return out;
}

}  // namespace fermap
