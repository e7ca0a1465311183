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

#include "fermap/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fermap/ttree.hpp"

namespace fermap {

namespace {

PauliString image_string(std::size_t n, std::size_t q, const LetterImage& im) {
  PauliString p = PauliString::single(n, q, im.letter);
  return im.negative ? -p : p;
}

// Y image forced by Y = i X Z.
LetterImage y_image(const LetterImage& x, const LetterImage& z) {
  const PauliString y = (image_string(1, 0, x) * image_string(1, 0, z)).times_i(1);
  const unsigned c = y.coefficient();
  if (c != 0 && c != 2) throw std::logic_error("X and Z images must anticommute");
  return {y.letter(0), c == 2};
}

bool is_permutation(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string image_text(const LetterImage& im) {
  return std::string(im.negative ? "-" : "") + im.letter;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

const std::vector<std::array<LetterImage, 3>>& clifford_images() {
  static const std::vector<std::array<LetterImage, 3>> all = [] {
    std::vector<std::array<LetterImage, 3>> out;
    for (char lx : {'X', 'Y', 'Z'})
      for (bool sx : {false, true})
        for (char lz : {'X', 'Y', 'Z'}) {
          if (lz == lx) continue;
          for (bool sz : {false, true}) {
            const LetterImage x{lx, sx}, z{lz, sz};
            out.push_back({x, y_image(x, z), z});
          }
        }
    return out;
  }();
  return all;
}

std::array<LetterImage, 3> clifford_for_letters(const std::array<char, 3>& letters) {
  const LetterImage x{letters[0], false}, z{letters[2], false};
  const LetterImage y = y_image(x, z);
  if (y.letter != letters[1]) throw std::invalid_argument("letters are not a permutation of XYZ");
  return {x, y, z};
}

void check_op(const SymmetryOp& op, std::size_t n) {
  std::visit(overloaded{
                 [&](const QubitSwap& s) {
                   if (!is_permutation(s.sigma, n))
                     throw std::invalid_argument("qubit-swap needs a permutation of 0.." +
                                                 std::to_string(n - 1));
                 },
                 [&](const LocalBasisChange& c) {
                   if (c.qubit >= n) throw std::invalid_argument("local basis change qubit out of range");
                   const auto& all = clifford_images();
                   if (std::find(all.begin(), all.end(), c.images) == all.end())
                     throw std::invalid_argument("images are not a single-qubit Clifford");
                 },
                 [&](const PairBraid& b) {
                   if (b.mode >= n) throw std::invalid_argument("braid mode out of range");
                   if (b.direction != 1 && b.direction != -1)
                     throw std::invalid_argument("braid direction must be + or -");
                 },
                 [&](const SignChange& s) {
                   if (s.index >= 2 * n) throw std::invalid_argument("sign change index out of range");
                 },
                 [&](const FermionSwap& f) {
                   if (!is_permutation(f.rho, n))
                     throw std::invalid_argument("fermion-swap needs a permutation of 0.." +
                                                 std::to_string(n - 1));
                 },
             },
             op);
}

FermionQubitMapping apply_symmetry(const FermionQubitMapping& m, const SymmetryOp& op) {
  const std::size_t n = m.size();
  check_op(op, n);
  std::vector<PauliString> ops = m.ops();
  std::visit(overloaded{
                 [&](const QubitSwap& s) {
                   for (auto& p : ops) {
                     BitVec x(n), z(n);
                     for (std::size_t q : p.x().indices()) x.set(s.sigma[q]);
                     for (std::size_t q : p.z().indices()) z.set(s.sigma[q]);
                     p = PauliString(std::move(x), std::move(z), p.phase());
                   }
                 },
                 [&](const LocalBasisChange& c) {
                   const std::size_t q = c.qubit;
                   for (auto& p : ops) {
                     BitVec x = p.x(), z = p.z();
                     x.set(q, false);
                     z.set(q, false);
                     PauliString r(std::move(x), std::move(z), p.phase());
                     if (p.x().get(q)) r = r * image_string(n, q, c.images[0]);
                     if (p.z().get(q)) r = r * image_string(n, q, c.images[2]);
                     p = std::move(r);
                   }
                 },
                 [&](const PairBraid& b) {
                   PauliString& e = ops[2 * b.mode];
                   PauliString& o = ops[2 * b.mode + 1];
                   PauliString ne = b.direction > 0 ? o : -o;
                   PauliString no = b.direction > 0 ? -e : e;
                   e = std::move(ne);
                   o = std::move(no);
                 },
                 [&](const SignChange& s) { ops[s.index] = -ops[s.index]; },
                 [&](const FermionSwap& f) {
                   std::vector<PauliString> out(2 * n);
                   for (std::size_t i = 0; i < n; ++i) {
                     out[2 * i] = m.op(2 * f.rho[i]);
                     out[2 * i + 1] = m.op(2 * f.rho[i] + 1);
                   }
                   ops = std::move(out);
                 },
             },
             op);
  return FermionQubitMapping(std::move(ops));
}

FermionQubitMapping apply_symmetries(FermionQubitMapping m, const std::vector<SymmetryOp>& ops) {
  for (const auto& op : ops) m = apply_symmetry(m, op);
  return m;
}

std::string to_string(const SymmetryOp& op) {
  return std::visit(
      overloaded{
          [](const QubitSwap& s) {
            std::string out = "qubit-swap";
            for (auto v : s.sigma) out += " " + std::to_string(v);
            return out;
          },
          [](const LocalBasisChange& c) {
            return "local " + std::to_string(c.qubit) + " " + image_text(c.images[0]) + " " +
                   image_text(c.images[1]) + " " + image_text(c.images[2]);
          },
          [](const PairBraid& b) {
            return "braid " + std::to_string(b.mode) + (b.direction > 0 ? " +" : " -");
          },
          [](const SignChange& s) { return "sign " + std::to_string(s.index); },
          [](const FermionSwap& f) {
            std::string out = "fermion-swap";
            for (auto v : f.rho) out += " " + std::to_string(v);
            return out;
          },
      },
      op);
}

namespace {

std::size_t parse_index(const std::string& tok) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad index '" + tok + "'");
  }
}

LetterImage parse_image(const std::string& tok) {
  const bool neg = !tok.empty() && tok[0] == '-';
  const std::string body = (neg || (!tok.empty() && tok[0] == '+')) ? tok.substr(1) : tok;
  if (body != "X" && body != "Y" && body != "Z") throw ParseError("bad letter image '" + tok + "'");
  return {body[0], neg};
}

}  // namespace

SymmetryOp parse_symmetry_op(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind;
  in >> kind;
  std::vector<std::string> args;
  for (std::string t; in >> t;) args.push_back(t);
  auto indices = [&] {
    std::vector<std::size_t> v;
    for (const auto& a : args) v.push_back(parse_index(a));
    return v;
  };
  if (kind == "qubit-swap") return QubitSwap{indices()};
  if (kind == "fermion-swap") return FermionSwap{indices()};
  if (kind == "local") {
    if (args.size() != 4) throw ParseError("local needs a qubit and three images");
    return LocalBasisChange{parse_index(args[0]),
                            {parse_image(args[1]), parse_image(args[2]), parse_image(args[3])}};
  }
  if (kind == "braid") {
    if (args.size() != 2 || (args[1] != "+" && args[1] != "-"))
      throw ParseError("braid needs a mode and + or -");
    return PairBraid{parse_index(args[0]), args[1] == "+" ? 1 : -1};
  }
  if (kind == "sign") {
    if (args.size() != 1) throw ParseError("sign needs one operator index");
    return SignChange{parse_index(args[0])};
  }
  throw ParseError("unknown symmetry op '" + kind + "'");
}

std::string witness_to_text(const std::vector<SymmetryOp>& ops) {
  std::string out;
  for (const auto& op : ops) out += to_string(op) + "\n";
  return out;
}

std::vector<SymmetryOp> parse_witness(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<SymmetryOp> ops;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    ops.push_back(parse_symmetry_op(line));
  }
  return ops;
}

std::string Fingerprint::to_string() const {
  auto dump = [](const std::vector<std::vector<std::size_t>>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += "(";
      for (std::size_t j = 0; j < v[i].size(); ++j) {
        if (j) out += " ";
        out += std::to_string(v[i][j]);
      }
      out += ")";
    }
    return out + "]";
  };
  return "qubits " + dump(qubit_classes) + " pairs " + dump(pair_classes);
}

namespace {

// Letter classes on qubit q (as sorted weight lists) and pair incidence counts.
std::vector<std::size_t> qubit_signature(const FermionQubitMapping& m, std::size_t q) {
  const std::size_t n = m.size();
  std::array<std::vector<std::size_t>, 3> by_letter;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    const char l = m.op(k).letter(q);
    if (l != 'I') by_letter[l == 'X' ? 0 : l == 'Y' ? 1 : 2].push_back(weight(m.op(k)));
  }
  for (auto& v : by_letter) std::sort(v.begin(), v.end());
  std::sort(by_letter.begin(), by_letter.end());
  std::size_t same = 0, differ = 0, single = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const char a = m.op(2 * i).letter(q), b = m.op(2 * i + 1).letter(q);
    if (a != 'I' && b != 'I') {
      (a == b ? same : differ) += 1;
    } else if (a != 'I' || b != 'I') {
      ++single;
    }
  }
  std::vector<std::size_t> sig;
  for (const auto& v : by_letter) {
    sig.push_back(v.size());
    sig.insert(sig.end(), v.begin(), v.end());
  }
  sig.insert(sig.end(), {same, differ, single});
  return sig;
}

}  // namespace

Fingerprint fingerprint(const FermionQubitMapping& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> w(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) w[k] = weight(m.op(k));
  Fingerprint fp;
  for (std::size_t q = 0; q < n; ++q) fp.qubit_classes.push_back(qubit_signature(m, q));
  for (std::size_t i = 0; i < n; ++i) {
    const PauliString &a = m.op(2 * i), &b = m.op(2 * i + 1);
    std::size_t overlap = 0, same = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const char la = a.letter(q), lb = b.letter(q);
      if (la != 'I' && lb != 'I') {
        ++overlap;
        if (la == lb) ++same;
      }
    }
    fp.pair_classes.push_back({std::min(w[2 * i], w[2 * i + 1]), std::max(w[2 * i], w[2 * i + 1]),
                               overlap, same, overlap - same});
  }
  std::sort(fp.qubit_classes.begin(), fp.qubit_classes.end());
  std::sort(fp.pair_classes.begin(), fp.pair_classes.end());
  return fp;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent:
      return "Equivalent";
    case Verdict::inequivalent:
      return "Inequivalent";
    case Verdict::unknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

using Key = std::pair<std::uint64_t, std::uint64_t>;  // (x, z) masks
using PairKey = std::pair<Key, Key>;

Key key_of(const PauliString& p) { return {p.x().to_u64(), p.z().to_u64()}; }

std::vector<PairKey> pair_keys(const std::vector<Key>& ops) {
  std::vector<PairKey> out;
  for (std::size_t i = 0; i + 1 < ops.size(); i += 2)
    out.emplace_back(std::min(ops[i], ops[i + 1]), std::max(ops[i], ops[i + 1]));
  std::sort(out.begin(), out.end());
  return out;
}

const std::array<std::array<std::size_t, 3>, 6> kLetterPerms{{
    {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1},
}};

std::vector<SymmetryOp> build_witness(const FermionQubitMapping& a, const FermionQubitMapping& b,
                                      const std::vector<std::size_t>& sigma,
                                      const std::vector<std::size_t>& perm_of_qubit) {
  const std::size_t n = a.size();
  std::vector<SymmetryOp> ops;
  std::vector<std::size_t> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  if (sigma != ident) ops.push_back(QubitSwap{sigma});
  for (std::size_t q = 0; q < n; ++q) {
    const auto& perm = kLetterPerms[perm_of_qubit[q]];
    if (perm_of_qubit[q] == 0) continue;
    std::array<char, 3> letters{letter_of(perm[0]), letter_of(perm[1]), letter_of(perm[2])};
    ops.push_back(LocalBasisChange{q, clifford_for_letters(letters)});
  }
  FermionQubitMapping cur = apply_symmetries(a, ops);

  std::vector<std::size_t> rho(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const UnsignedPauli t0(b.op(2 * i)), t1(b.op(2 * i + 1));
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (used[j]) continue;
      const UnsignedPauli c0(cur.op(2 * j)), c1(cur.op(2 * j + 1));
      if ((c0 == t0 && c1 == t1) || (c0 == t1 && c1 == t0)) {
        rho[i] = j;
        used[j] = true;
        found = true;
      }
    }
    if (!found) throw std::logic_error("matched supports but could not pair modes");
  }
  if (rho != ident) {
    ops.push_back(FermionSwap{rho});
    cur = apply_symmetry(cur, ops.back());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (UnsignedPauli(cur.op(2 * i)) != UnsignedPauli(b.op(2 * i))) {
      ops.push_back(PairBraid{i, 1});
      cur = apply_symmetry(cur, ops.back());
    }
  }
  for (std::size_t k = 0; k < 2 * n; ++k) {
    if (cur.op(k) != b.op(k)) {
      ops.push_back(SignChange{k});
      cur = apply_symmetry(cur, ops.back());
    }
  }
  if (!(cur == b)) throw std::logic_error("witness replay does not reach the target mapping");
  return ops;
}

}  // namespace

EquivResult equivalent(const FermionQubitMapping& a, const FermionQubitMapping& b,
                       const EquivOptions& opt) {
  if (a.size() != b.size())
    throw DimensionMismatch("mappings on " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " modes");
  const std::size_t n = a.size();
  EquivResult res;
  const Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (!(fa == fb)) {
    res.verdict = Verdict::inequivalent;
    res.reason = "fingerprints differ: " + fa.to_string() + " vs " + fb.to_string();
    return res;
  }
  if (n > opt.max_n || n > 64) {
    res.reason = "search limited to n <= " + std::to_string(opt.max_n);
    return res;
  }

  std::vector<std::vector<std::size_t>> sig_a, sig_b;
  for (std::size_t q = 0; q < n; ++q) {
    sig_a.push_back(qubit_signature(a, q));
    sig_b.push_back(qubit_signature(b, q));
  }

  std::vector<Key> ka, kb;
  for (const auto& p : a.ops()) ka.push_back(key_of(p));
  for (const auto& p : b.ops()) kb.push_back(key_of(p));
  const std::vector<PairKey> target = pair_keys(kb);

  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Key> moved(ka.size());
  do {
    bool compatible = true;
    for (std::size_t q = 0; q < n && compatible; ++q) compatible = sig_a[q] == sig_b[sigma[q]];
    if (!compatible) continue;
    std::vector<std::size_t> perm(n, 0);
    for (;;) {
      if (++res.candidates > opt.budget) {
        res.verdict = Verdict::unknown;
        res.reason = "search budget of " + std::to_string(opt.budget) + " candidates exhausted";
        return res;
      }
      for (std::size_t k = 0; k < ka.size(); ++k) {
        std::uint64_t x = 0, z = 0;
        for (std::size_t q = 0; q < n; ++q) {
          const bool bx = (ka[k].first >> q) & 1, bz = (ka[k].second >> q) & 1;
          if (!bx && !bz) continue;
          const std::size_t slot = bx && bz ? 1 : bx ? 0 : 2;
          const std::size_t d = sigma[q];
          const std::size_t img = kLetterPerms[perm[d]][slot];
          if (img != 2) x |= std::uint64_t{1} << d;
          if (img != 0) z |= std::uint64_t{1} << d;
        }
        moved[k] = {x, z};
      }
      if (pair_keys(moved) == target) {
        res.verdict = Verdict::equivalent;
        res.witness = build_witness(a, b, sigma, perm);
        return res;
      }
      std::size_t d = 0;
      while (d < n && ++perm[d] == kLetterPerms.size()) perm[d++] = 0;
      if (d == n) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  res.verdict = Verdict::inequivalent;
  res.reason = "exhaustive search over qubit permutations and local relabellings found no match";
  return res;
}

std::string to_string(TwoModeTemplate t) {
  switch (t) {
    case TwoModeTemplate::jordan_wigner:
      return "JW_template";
    case TwoModeTemplate::bravyi_kitaev:
      return "BK_template";
    case TwoModeTemplate::product_breaking:
      return "ProductBreaking_template";
  }
  return "?";
}

TwoModeTemplate classify_two_mode(const FermionQubitMapping& m) {
  if (m.size() != 2) throw std::invalid_argument("classify_two_mode needs a two-mode mapping");
  if (auto rep = validate(m); !rep) throw std::invalid_argument("invalid mapping: " + rep.message);
  std::array<std::pair<std::size_t, std::size_t>, 2> pw;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t u = weight(m.op(2 * i)), v = weight(m.op(2 * i + 1));
    pw[i] = {std::min(u, v), std::max(u, v)};
  }
  std::sort(pw.begin(), pw.end());
  using P = std::pair<std::size_t, std::size_t>;
  if (pw[0] == P{1, 1} && pw[1] == P{2, 2}) return TwoModeTemplate::jordan_wigner;
  if (pw[0] == P{1, 2} && pw[1] == P{2, 2}) return TwoModeTemplate::bravyi_kitaev;
  if (pw[0] == P{1, 2} && pw[1] == P{1, 2}) return TwoModeTemplate::product_breaking;
  throw std::logic_error("two-mode mapping matches no template");
}

FermionQubitMapping two_mode_reference(TwoModeTemplate t) {
  switch (t) {
    case TwoModeTemplate::jordan_wigner:
      return jordan_wigner(2);
    case TwoModeTemplate::bravyi_kitaev:
      return named_mapping(NamedMapping::bravyi_kitaev, 2);
    case TwoModeTemplate::product_breaking:
      return FermionQubitMapping::checked({PauliString::parse("+1 X0", 2),
                                           PauliString::parse("-1 Z0 Y1", 2),
                                           PauliString::parse("+1 Z0 X1", 2),
                                           PauliString::parse("+1 Y0", 2)});
  }
  throw std::invalid_argument("unknown template");
}

Census two_mode_census() {
  std::vector<PauliString> all;
  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t z = 0; z < 4; ++z)
      if (x || z) all.push_back(UnsignedPauli(BitVec::from_u64(2, x), BitVec::from_u64(2, z)).hermitian());
  Census c;
  const std::size_t m = all.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (b == a || !anticommutes(all[a], all[b])) continue;
      for (std::size_t d = 0; d < m; ++d) {
        if (d == a || d == b || !anticommutes(all[a], all[d]) || !anticommutes(all[b], all[d]))
          continue;
        for (std::size_t e = 0; e < m; ++e) {
          if (e == a || e == b || e == d) continue;
          if (!anticommutes(all[a], all[e]) || !anticommutes(all[b], all[e]) ||
              !anticommutes(all[d], all[e]))
            continue;
          FermionQubitMapping mp = FermionQubitMapping::checked({all[a], all[b], all[d], all[e]});
          const TwoModeTemplate t = classify_two_mode(mp);
          ++c.counts[t];
          c.members.push_back({std::move(mp), t});
        }
      }
    }
  return c;
}

}  // namespace fermap
