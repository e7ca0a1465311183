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

#include "fermap/ttree.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>

namespace fermap {

std::size_t slot_of(char letter) {
  switch (letter) {
    case 'X':
      return 0;
    case 'Y':
      return 1;
    case 'Z':
      return 2;
    default:
      throw std::invalid_argument(std::string("not a tree edge label: ") + letter);
  }
}

char letter_of(std::size_t slot) { return "XYZ"[slot]; }

TernaryTree::TernaryTree(std::size_t root, std::vector<Children> children)
    : root_(root), children_(std::move(children)), parent_(children_.size()) {
  const std::size_t n = children_.size();
  if (n == 0) throw std::invalid_argument("tree has no vertices");
  if (root_ >= n) throw std::invalid_argument("root label out of range");
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& c : children_[v]) {
      if (!c) continue;
      if (*c >= n) throw std::invalid_argument("child label " + std::to_string(*c) + " out of range");
      if (*c == root_) throw std::invalid_argument("root appears as a child");
      if (parent_[*c]) throw std::invalid_argument("vertex " + std::to_string(*c) + " has two parents");
      parent_[*c] = v;
    }
  }
  std::vector<std::size_t> stack{root_};
  std::size_t seen = 0;
  std::vector<bool> visited(n, false);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (visited[v]) throw std::invalid_argument("tree contains a cycle");
    visited[v] = true;
    ++seen;
    for (const auto& c : children_[v])
      if (c) stack.push_back(*c);
  }
  if (seen != n) throw std::invalid_argument("tree is not connected");
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  TernaryTree run() {
    skip();
    const std::size_t root = node();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    const std::size_t n = kids_.size();
    std::vector<TernaryTree::Children> children(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (!kids_[v]) fail("vertex labels must be exactly 0.." + std::to_string(n - 1));
      children[v] = *kids_[v];
    }
    try {
      return TernaryTree(root, std::move(children));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad tree: ") + e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t node() {
    expect('(');
    skip();
    std::size_t id = 0;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      id = id * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (id > 1'000'000) fail("vertex label too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a vertex label");
    if (kids_.size() <= id) kids_.resize(id + 1);
    if (kids_[id]) fail("vertex label " + std::to_string(id) + " used twice");
    kids_[id] = TernaryTree::Children{};
    for (;;) {
      skip();
      if (pos_ >= s_.size()) fail("unterminated node");
      if (s_[pos_] == ')') {
        ++pos_;
        return id;
      }
      const char l = s_[pos_];
      if (l != 'X' && l != 'Y' && l != 'Z') fail("expected X, Y, Z or ')'");
      ++pos_;
      expect('=');
      const std::size_t c = node();
      auto& slot = (*kids_[id])[slot_of(l)];
      if (slot) fail(std::string("label ") + l + " used twice on vertex " + std::to_string(id));
      slot = c;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::optional<TernaryTree::Children>> kids_;
};

}  // namespace

TernaryTree TernaryTree::parse(std::string_view text) { return TreeParser(text).run(); }

std::string TernaryTree::to_string() const {
  std::string out;
  auto emit = [&](auto&& self, std::size_t v) -> void {
    out += '(';
    out += std::to_string(v);
    for (std::size_t s = 0; s < 3; ++s) {
      if (!children_[v][s]) continue;
      out += ' ';
      out += letter_of(s);
      out += '=';
      self(self, *children_[v][s]);
    }
    out += ')';
  };
  emit(emit, root_);
  return out;
}

UnsignedPauli path_pauli(std::size_t n, const TreePath& path) {
  BitVec x(n), z(n);
  for (const auto& st : path) {
    if (st.label != 'Z') x.set(st.vertex);
    if (st.label != 'X') z.set(st.vertex);
  }
  return UnsignedPauli(std::move(x), std::move(z));
}

UnsignedPauli PathEnumeration::pauli(std::size_t k) const { return path_pauli(n, paths.at(k)); }

PathEnumeration enumerate_paths(const TernaryTree& t) {
  PathEnumeration e;
  e.n = t.size();
  TreePath prefix;
  auto visit = [&](auto&& self, std::size_t v, bool flipped) -> void {
    static constexpr std::array<char, 3> fwd{'X', 'Y', 'Z'}, rev{'Z', 'Y', 'X'};
    for (char l : flipped ? rev : fwd) {
      prefix.push_back({v, l});
      if (auto c = t.child(v, l)) {
        self(self, *c, flipped != (l == 'Y'));
      } else {
        e.paths.push_back(prefix);
      }
      prefix.pop_back();
    }
  };
  visit(visit, t.root(), false);
  return e;
}

std::vector<UnsignedPauli> path_paulis(const TernaryTree& t) {
  const PathEnumeration e = enumerate_paths(t);
  std::vector<UnsignedPauli> out;
  out.reserve(e.paths.size());
  for (std::size_t k = 0; k < e.paths.size(); ++k) out.push_back(e.pauli(k));
  return out;
}

namespace {

TreePath root_to(const TernaryTree& t, std::size_t v) {
  TreePath path;
  std::size_t cur = v;
  while (auto p = t.parent(cur)) {
    const auto& ch = t.children(*p);
    std::size_t s = 0;
    while (ch[s] != cur) ++s;
    path.push_back({*p, letter_of(s)});
    cur = *p;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Single-qubit Paulis B, C with -iBC|a> = |a>.
std::pair<char, char> pairing_letters(QubitState a) {
  switch (a) {
    case QubitState::ZPlus:
      return {'X', 'Y'};
    case QubitState::ZMinus:
      return {'Y', 'X'};
    case QubitState::XPlus:
      return {'Y', 'Z'};
    case QubitState::XMinus:
      return {'Z', 'Y'};
    case QubitState::YPlus:
      return {'Z', 'X'};
    case QubitState::YMinus:
      return {'X', 'Z'};
  }
  throw std::logic_error("bad eigenstate");
}

}  // namespace

FermionQubitMapping pair_for_vacuum(const TernaryTree& t, const ProductState& v) {
  const std::size_t n = t.size();
  if (v.size() != n)
    throw std::invalid_argument("vacuum has " + std::to_string(v.size()) + " qubits, tree has " +
                                std::to_string(n) + " vertices");
  if (v.phase != 0) throw std::invalid_argument("vacuum must have phase 0");

  // Leave vertex i through `letter`, then follow each vertex's stabilizing letter.
  auto walk = [&](std::size_t i, char letter, TreePath& path, std::size_t& minus) {
    path.push_back({i, letter});
    auto cur = t.child(i, letter);
    while (cur) {
      const QubitState a = v.qubits[*cur];
      path.push_back({*cur, state_axis(a)});
      if (state_sign(a) < 0) ++minus;
      cur = t.child(*cur, state_axis(a));
    }
  };

  std::vector<PauliString> ops;
  ops.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [b, c] = pairing_letters(v.qubits[i]);
    TreePath pb = root_to(t, i), pc = pb;
    std::size_t minus = 0;
    walk(i, b, pb, minus);
    walk(i, c, pc, minus);
    if (minus % 2 == 1) std::swap(pb, pc);
    ops.push_back(path_pauli(n, pb).hermitian());
    ops.push_back(path_pauli(n, pc).hermitian());
  }
  return FermionQubitMapping::checked(std::move(ops));
}

FermionQubitMapping braided_real_pairing(const TernaryTree& t) {
  const std::size_t n = t.size();
  const FermionQubitMapping base = pair_for_vacuum(t, ProductState::computational(BitVec(n)));
  std::vector<PauliString> ops = base.ops();
  for (std::size_t i = 0; i < n; ++i) {
    if (y_count(ops[2 * i]) % 2 == 1) {
      PauliString b = ops[2 * i];
      ops[2 * i] = -ops[2 * i + 1];
      ops[2 * i + 1] = std::move(b);
    }
  }
  return FermionQubitMapping::checked(std::move(ops));
}

FermionQubitMapping canonical_mapping(const TernaryTree& t) {
  const PathEnumeration e = enumerate_paths(t);
  std::vector<PauliString> ops;
  ops.reserve(2 * e.n);
  // With Y stored as iXZ, the hatted strings (-i)^{#Y} times the letters are
  // exactly the phase-0 strings.
  for (std::size_t i = 0; i < e.n; ++i) {
    const UnsignedPauli a = e.pauli(2 * i), b = e.pauli(2 * i + 1);
    ops.emplace_back(a.x, a.z, 0);
    ops.emplace_back(b.x, b.z, 1);
  }
  return FermionQubitMapping::checked(std::move(ops));
}

BinMatrix tree_matrix(const TernaryTree& t) {
  const FermionQubitMapping m = canonical_mapping(t);
  BinMatrix g(t.size());
  for (std::size_t j = 0; j < t.size(); ++j)
    for (std::size_t i : m.op(2 * j).x().indices()) g.set(i, j);
  return g;
}

TernaryTree complete_tree(std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("depth must be at least 1");
  if (depth > 12) throw std::invalid_argument("depth too large");
  std::vector<TernaryTree::Children> children(1);
  std::vector<std::size_t> level(1, 1);
  for (std::size_t v = 0; v < children.size(); ++v) {
    if (level[v] == depth) continue;
    for (std::size_t s = 0; s < 3; ++s) {
      children[v][s] = children.size();
      children.emplace_back();
      level.push_back(level[v] + 1);
    }
  }
  const TernaryTree bfs(0, children);
  // Relabel each vertex by the mode whose pair of paths splits there.
  const PathEnumeration e = enumerate_paths(bfs);
  std::vector<std::size_t> label(children.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    const TreePath& a = e.paths[2 * i];
    const TreePath& b = e.paths[2 * i + 1];
    std::size_t k = 0;
    while (a[k] == b[k]) ++k;
    label[a[k].vertex] = i;
  }
  std::vector<TernaryTree::Children> relabelled(children.size());
  for (std::size_t v = 0; v < children.size(); ++v)
    for (std::size_t s = 0; s < 3; ++s)
      if (children[v][s]) relabelled[label[v]][s] = label[*children[v][s]];
  return TernaryTree(label[0], std::move(relabelled));
}

TernaryTree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<TernaryTree::Children> children(1);
  std::vector<std::pair<std::size_t, std::size_t>> free_slots{{0, 0}, {0, 1}, {0, 2}};
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, free_slots.size() - 1);
    const std::size_t k = pick(rng);
    auto [p, s] = free_slots[k];
    free_slots[k] = free_slots.back();
    free_slots.pop_back();
    children[p][s] = v;
    children.emplace_back();
    for (std::size_t t = 0; t < 3; ++t) free_slots.emplace_back(v, t);
  }
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<TernaryTree::Children> relabelled(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t s = 0; s < 3; ++s)
      if (children[v][s]) relabelled[label[v]][s] = label[*children[v][s]];
  return TernaryTree(label[0], std::move(relabelled));
}

TreeMapping relabel_vertex(const TernaryTree& t, const FermionQubitMapping& m, std::size_t q,
                           const LetterPerm& perm) {
  const std::size_t n = t.size();
  if (q >= n) throw std::out_of_range("vertex out of range");
  if (m.size() != n) throw DimensionMismatch("tree and mapping");
  std::vector<TernaryTree::Children> children(n);
  for (std::size_t v = 0; v < n; ++v) children[v] = t.children(v);
  TernaryTree::Children moved{};
  for (std::size_t s = 0; s < 3; ++s) moved[perm[s]] = children[q][s];
  children[q] = moved;

  std::vector<PauliString> ops;
  ops.reserve(m.ops().size());
  for (const auto& p : m.ops()) {
    UnsignedPauli u(p);
    const char l = u.letter(q);
    if (l != 'I') {
      const char img = letter_of(perm[slot_of(l)]);
      u.x.set(q, img != 'Z');
      u.z.set(q, img != 'X');
    }
    ops.push_back(u.hermitian().times_i(p.coefficient()));
  }
  return {TernaryTree(t.root(), std::move(children)), FermionQubitMapping::checked(std::move(ops))};
}

bool is_tree_based(const TernaryTree& t, const FermionQubitMapping& m) {
  if (m.size() != t.size()) return false;
  const auto paths = path_paulis(t);
  const std::set<UnsignedPauli> set(paths.begin(), paths.end());
  for (const auto& p : m.ops())
    if (!set.count(UnsignedPauli(p))) return false;
  return true;
}

TreeMapping revacuum(const TernaryTree& t, const FermionQubitMapping& m,
                     const ProductState& target) {
  const std::size_t n = t.size();
  if (target.size() != n) throw std::invalid_argument("target vacuum has the wrong qubit count");
  if (!is_tree_based(t, m)) throw std::invalid_argument("mapping is not based on this tree");
  const auto start = vacuum_state(m);
  if (!start.is_product()) throw std::invalid_argument("mapping is not product preserving");

  static const std::array<LetterPerm, 6> kPerms{{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1},
  }};
  // Letter of -i G_a G_b on one qubit, up to phase.
  const auto product_letter = [](char a, char b) {
    if (a == 'I') return b;
    if (b == 'I') return a;
    if (a == b) return 'I';
    return static_cast<char>('X' + 'Y' + 'Z' - a - b);
  };
  TreeMapping cur{t, m};
  for (std::size_t q = 0; q < n; ++q) {
    const char axis = state_axis(target.qubits[q]);
    bool done = false;
    for (const auto& perm : kPerms) {
      const auto image = [&](char l) { return l == 'I' ? 'I' : letter_of(perm[slot_of(l)]); };
      bool fits = true;
      for (std::size_t i = 0; i < n && fits; ++i) {
        const char l = product_letter(image(cur.mapping.op(2 * i).letter(q)), image(cur.mapping.op(2 * i + 1).letter(q)));
        fits = l == 'I' || l == axis;
      }
      if (!fits) continue;
      if (perm != kPerms[0]) cur = relabel_vertex(cur.tree, cur.mapping, q, perm);
      done = true;
      break;
    }
    if (!done)
      throw std::logic_error("no label permutation at vertex " + std::to_string(q) + " fits the target axis");
  }
  // Every pair stabiliser now has the target as a +-1 eigenstate; fix the signs.
  std::vector<PauliString> ops = cur.mapping.ops();
  for (std::size_t i = 0; i < n; ++i) {
    const PauliString s = (ops[2 * i] * ops[2 * i + 1]).times_i(3);
    if (apply_to_product_state(s, target).phase != target.phase) ops[2 * i + 1] = -ops[2 * i + 1];
  }
  cur.mapping = FermionQubitMapping::checked(std::move(ops));
  const auto reached = vacuum_state(cur.mapping);
  if (!reached.is_product() || reached.state->qubits != target.qubits)
    throw std::logic_error("relabelled mapping missed the target vacuum");
  return cur;
}

}  // namespace fermap
