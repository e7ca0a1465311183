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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermap/gf2.hpp"
#include "fermap/mapping.hpp"
#include "fermap/pauli.hpp"

namespace fermap {

/// Child slot index of a Pauli letter: X -> 0, Y -> 1, Z -> 2.
std::size_t slot_of(char letter);
char letter_of(std::size_t slot);

/**
 * Rooted tree with at most three children per vertex, in slots labelled
 * X, Y and Z. Vertex ids are 0..n-1 and double as qubit indices.
 */
class TernaryTree {
 public:
  using Children = std::array<std::optional<std::size_t>, 3>;

  TernaryTree() = default;
  /// Throws std::invalid_argument unless the children lists form one tree.
  TernaryTree(std::size_t root, std::vector<Children> children);

  /// Grammar: node := '(' INT branch* ')', branch := ('X'|'Y'|'Z') '=' node.
  static TernaryTree parse(std::string_view text);

  std::size_t size() const { return children_.size(); }
  std::size_t root() const { return root_; }
  const Children& children(std::size_t v) const { return children_.at(v); }
  std::optional<std::size_t> child(std::size_t v, char letter) const {
    return children_.at(v)[slot_of(letter)];
  }
  std::optional<std::size_t> parent(std::size_t v) const { return parent_.at(v); }

  bool operator==(const TernaryTree& o) const {
    return root_ == o.root_ && children_ == o.children_;
  }

  /// Canonical text, e.g. "(0 X=(1) Y=(2 Z=(3)) Z=(4))".
  std::string to_string() const;

 private:
  std::size_t root_ = 0;
  std::vector<Children> children_;
  std::vector<std::optional<std::size_t>> parent_;
};

struct PathStep {
  std::size_t vertex;
  char label;
  bool operator==(const PathStep&) const = default;
};
using TreePath = std::vector<PathStep>;

/**
 * The 2n+1 root-to-leaf paths in canonical order: children are visited
 * X, Y, Z, the order reverses inside any subtree reached through an odd
 * number of Y edges, and an empty slot is one leaf.
 */
struct PathEnumeration {
  std::size_t n = 0;
  std::vector<TreePath> paths;

  UnsignedPauli pauli(std::size_t k) const;
};

PathEnumeration enumerate_paths(const TernaryTree& t);
UnsignedPauli path_pauli(std::size_t n, const TreePath& path);
/// Path strings in canonical order.
std::vector<UnsignedPauli> path_paulis(const TernaryTree& t);

/// Tree-based mapping whose vacuum is the product state v (mode i paired at vertex i).
FermionQubitMapping pair_for_vacuum(const TernaryTree& t, const ProductState& v);
/// The |0...0> pairing with every pair whose first string has odd Y count braided.
FermionQubitMapping braided_real_pairing(const TernaryTree& t);
/// The tree-based mapping that linearly encodes the Fock basis.
FermionQubitMapping canonical_mapping(const TernaryTree& t);
/// (G_T)_{ij} = 1 when G_{2j} of canonical_mapping(t) has X or Y on qubit i.
BinMatrix tree_matrix(const TernaryTree& t);

/// Full ternary tree of the given depth (1, 4, 13, 40, ... vertices). Vertex i is where the
/// paths of G_{2i} and G_{2i+1} split, so G_T has a unit diagonal.
TernaryTree complete_tree(std::size_t depth);
/// Random tree with n vertices and shuffled labels, deterministic in `seed`.
TernaryTree random_tree(std::size_t n, std::uint64_t seed);

/// Letter permutation: perm[slot_of(L)] is the slot of the image of L.
using LetterPerm = std::array<std::size_t, 3>;

struct TreeMapping {
  TernaryTree tree;
  FermionQubitMapping mapping;
};

/**
 * Permute the edge labels at vertex q and the Pauli letters on qubit q
 * (coefficients in front of the letters are kept).
 */
TreeMapping relabel_vertex(const TernaryTree& t, const FermionQubitMapping& m, std::size_t q,
                           const LetterPerm& perm);

/// True when every operator of m is, up to sign, a path string of t.
bool is_tree_based(const TernaryTree& t, const FermionQubitMapping& m);

/**
 * Move a product-preserving t-based mapping to the vacuum `target` by local
 * label permutations, one vertex at a time, then re-sign the second operator
 * of every pair whose stabiliser has the target as a -1 eigenstate.
 */
TreeMapping revacuum(const TernaryTree& t, const FermionQubitMapping& m,
                     const ProductState& target);

}  // namespace fermap
