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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "fermap/equiv.hpp"
#include "fermap/oracle.hpp"
#include "fermap/ttree.hpp"

using namespace fermap;

namespace {

std::uint64_t seed() {
  if (const char* s = std::getenv("FERMAP_SEED")) return std::strtoull(s, nullptr, 10);
  return 20261016;
}

FermionQubitMapping M(std::initializer_list<const char*> ops) {
  std::vector<PauliString> v;
  for (const char* s : ops) v.push_back(PauliString::parse(s, 2));
  return FermionQubitMapping(std::move(v));
}

// JW(2) relabelled by one symmetry of each kind.
std::vector<FermionQubitMapping> jw_relatives() {
  return {
      M({"+1 X1", "+1 Y1", "+1 X0 Z1", "+1 Y0 Z1"}),  // qubit swap
      M({"+1 Y0", "+1 Z0", "+1 X0 X1", "+1 X0 Y1"}),  // local basis change on qubit 0
      M({"+1 Y0", "+1 X0", "+1 Z0 X1", "+1 Z0 Y1"}),  // order within a pair
      M({"+1 X0", "-1 Y0", "+1 Z0 X1", "-1 Z0 Y1"}),  // signs
      M({"+1 Z0 X1", "+1 Z0 Y1", "+1 X0", "+1 Y0"}),  // fermionic labels
  };
}

SymmetryOp random_op(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  switch (rng() % 5) {
    case 0:
      std::shuffle(perm.begin(), perm.end(), rng);
      return QubitSwap{perm};
    case 1:
      return LocalBasisChange{rng() % n, clifford_images()[rng() % 24]};
    case 2:
      return PairBraid{rng() % n, rng() % 2 ? 1 : -1};
    case 3:
      return SignChange{rng() % (2 * n)};
    default:
      std::shuffle(perm.begin(), perm.end(), rng);
      return FermionSwap{perm};
  }
}

// Set-builder forms of the three two-mode templates, on unsigned letters.
struct Pattern {
  char at_i;
  char at_j;
};

Pattern letters(const PauliString& p, std::size_t i) { return {p.letter(i), p.letter(1 - i)}; }

bool distinct3(char a, char b, char c) { return a != b && b != c && a != c; }

bool single(const Pattern& p) { return p.at_i != 'I' && p.at_j == 'I'; }
bool full(const Pattern& p) { return p.at_i != 'I' && p.at_j != 'I'; }

bool matches(TwoModeTemplate t, const FermionQubitMapping& m) {
  for (std::size_t i = 0; i < 2; ++i) {
    for (int swap_pairs = 0; swap_pairs < 2; ++swap_pairs) {
      const std::size_t s = swap_pairs ? 1 : 0, u = 1 - s;
      for (int so = 0; so < 2; ++so) {
        for (int uo = 0; uo < 2; ++uo) {
          const Pattern s0 = letters(m.op(2 * s + so), i), s1 = letters(m.op(2 * s + 1 - so), i);
          const Pattern u0 = letters(m.op(2 * u + uo), i), u1 = letters(m.op(2 * u + 1 - uo), i);
          switch (t) {
            case TwoModeTemplate::jordan_wigner:
              // {A_i, B_i}, {C_i A'_j, C_i B'_j}
              if (single(s0) && single(s1) && full(u0) && full(u1) && u0.at_i == u1.at_i &&
                  distinct3(s0.at_i, s1.at_i, u0.at_i) && u0.at_j != u1.at_j)
                return true;
              break;
            case TwoModeTemplate::bravyi_kitaev:
              // {A_i, B_i A'_j}, {B_i B'_j, B_i C'_j}
              if (single(s0) && full(s1) && full(u0) && full(u1) && s0.at_i != s1.at_i &&
                  u0.at_i == s1.at_i && u1.at_i == s1.at_i && distinct3(s1.at_j, u0.at_j, u1.at_j))
                return true;
              break;
            case TwoModeTemplate::product_breaking:
              // {A_i, B_i A'_j}, {C_i, B_i B'_j}
              if (single(s0) && full(s1) && single(u0) && full(u1) && u1.at_i == s1.at_i &&
                  distinct3(s0.at_i, s1.at_i, u0.at_i) && s1.at_j != u1.at_j)
                return true;
              break;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST(ApplySymmetry, BraidThenSignIsReorder) {
  const FermionQubitMapping jw = jordan_wigner(2);
  const FermionQubitMapping r = apply_symmetries(jw, {PairBraid{0, -1}, SignChange{0}});
  EXPECT_EQ(r, M({"+1 Y0", "+1 X0", "+1 Z0 X1", "+1 Z0 Y1"}));
  const FermionQubitMapping b = apply_symmetry(jw, PairBraid{0, -1});
  EXPECT_EQ(b.op(0), -jw.op(1));
  EXPECT_EQ(b.op(1), jw.op(0));
  const FermionQubitMapping p = apply_symmetry(jw, PairBraid{0, 1});
  EXPECT_EQ(p.op(0), jw.op(1));
  EXPECT_EQ(p.op(1), -jw.op(0));
}

TEST(ApplySymmetry, IdentityQubitSwap) {
  const FermionQubitMapping m = canonical_mapping(complete_tree(2));
  EXPECT_EQ(apply_symmetry(m, QubitSwap{{0, 1, 2, 3}}), m);
}

TEST(ApplySymmetry, CyclicLocalBasisChange) {
  const LocalBasisChange c{0, clifford_for_letters({'Y', 'Z', 'X'})};
  const FermionQubitMapping out = apply_symmetry(jordan_wigner(2), c);
  EXPECT_EQ(out, M({"+1 Y0", "+1 Z0", "+1 X0 X1", "+1 X0 Y1"}));
  EXPECT_TRUE(validate(out));
  EXPECT_TRUE(oracle::check_car(out));
}

TEST(ApplySymmetry, CliffordImagesAreValid) {
  const auto& imgs = clifford_images();
  ASSERT_EQ(imgs.size(), 24u);
  for (const auto& im : imgs) {
    // Images of X and Z anticommute and Y's image is i X' Z'.
    const PauliString x = PauliString::single(1, 0, im[0].letter).times_i(im[0].negative ? 2 : 0);
    const PauliString y = PauliString::single(1, 0, im[1].letter).times_i(im[1].negative ? 2 : 0);
    const PauliString z = PauliString::single(1, 0, im[2].letter).times_i(im[2].negative ? 2 : 0);
    EXPECT_EQ((x * z).times_i(1), y);
  }
  EXPECT_THROW(check_op(LocalBasisChange{0, {LetterImage{'X'}, LetterImage{'X'}, LetterImage{'Z'}}}, 2),
               std::invalid_argument);
  EXPECT_THROW(check_op(QubitSwap{{0, 0}}, 2), std::invalid_argument);
  EXPECT_THROW(check_op(SignChange{4}, 2), std::invalid_argument);
  EXPECT_THROW(check_op(PairBraid{0, 0}, 2), std::invalid_argument);
}

TEST(ApplySymmetry, PreservesValidityAndFingerprint) {
  std::mt19937_64 rng(seed());
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const FermionQubitMapping m = pair_for_vacuum(random_tree(n, rng()), ProductState(std::vector<QubitState>(n)));
    const FermionQubitMapping out = apply_symmetry(m, random_op(n, rng));
    EXPECT_TRUE(validate(out));
    EXPECT_EQ(fingerprint(out), fingerprint(m));
  }
}

TEST(WitnessText, RoundTrip) {
  std::mt19937_64 rng(seed() + 1);
  std::vector<SymmetryOp> ops;
  for (int t = 0; t < 50; ++t) ops.push_back(random_op(4, rng));
  const std::vector<SymmetryOp> back = parse_witness(witness_to_text(ops));
  ASSERT_EQ(back.size(), ops.size());
  const FermionQubitMapping m = canonical_mapping(complete_tree(2));
  EXPECT_EQ(apply_symmetries(m, back), apply_symmetries(m, ops));
  EXPECT_EQ(to_string(SymmetryOp{PairBraid{1, 1}}), "braid 1 +");
  EXPECT_THROW(parse_symmetry_op("twist 0"), ParseError);
}

TEST(Equivalent, JordanWignerRelatives) {
  const FermionQubitMapping jw = jordan_wigner(2);
  for (const auto& m : jw_relatives()) {
    ASSERT_TRUE(validate(m));
    const EquivResult r = equivalent(jw, m);
    ASSERT_EQ(r.verdict, Verdict::equivalent) << m.to_text() << r.reason;
    EXPECT_EQ(apply_symmetries(jw, r.witness), m);
    EXPECT_EQ(classify_two_mode(m), TwoModeTemplate::jordan_wigner);
  }
}

TEST(Equivalent, JordanWignerVersusBravyiKitaev) {
  const EquivResult r = equivalent(jordan_wigner(2), named_mapping(NamedMapping::bravyi_kitaev, 2));
  EXPECT_EQ(r.verdict, Verdict::inequivalent);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_EQ(equivalent(jordan_wigner(4), named_mapping(NamedMapping::bravyi_kitaev, 4)).verdict, Verdict::inequivalent);
}

TEST(Equivalent, ConstructedEquivalences) {
  std::mt19937_64 rng(seed() + 2);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const TernaryTree tree = random_tree(n, rng());
    const FermionQubitMapping m = rng() % 2 ? canonical_mapping(tree) : braided_real_pairing(tree);
    std::vector<SymmetryOp> ops;
    for (int k = 0; k < 6; ++k) ops.push_back(random_op(n, rng));
    const FermionQubitMapping target = apply_symmetries(m, ops);
    const EquivResult r = equivalent(m, target);
    ASSERT_EQ(r.verdict, Verdict::equivalent) << m.to_text() << target.to_text();
    EXPECT_EQ(apply_symmetries(m, r.witness), target);
    const EquivResult back = equivalent(target, m);
    ASSERT_EQ(back.verdict, Verdict::equivalent);
    EXPECT_EQ(apply_symmetries(target, back.witness), m);
  }
}

TEST(Equivalent, ReflexiveAndSymmetric) {
  std::vector<FermionQubitMapping> ms = {jordan_wigner(3), named_mapping(NamedMapping::parity, 3),
                                         canonical_mapping(TernaryTree::parse("(0 X=(1) Y=(2))")),
                                         braided_real_pairing(TernaryTree::parse("(0 Y=(1 X=(2)))"))};
  for (const auto& a : ms) {
    EXPECT_EQ(equivalent(a, a).verdict, Verdict::equivalent);
    for (const auto& b : ms) EXPECT_EQ(equivalent(a, b).verdict, equivalent(b, a).verdict);
  }
  EXPECT_THROW(equivalent(jordan_wigner(2), jordan_wigner(3)), DimensionMismatch);
}

TEST(Equivalent, BeyondMaxNIsUnknownUnlessFingerprintsDiffer) {
  const FermionQubitMapping jw = jordan_wigner(5);
  const FermionQubitMapping moved = apply_symmetry(jw, QubitSwap{{4, 3, 2, 1, 0}});
  EXPECT_EQ(equivalent(jw, moved).verdict, Verdict::unknown);
  EXPECT_EQ(equivalent(jw, moved, {.max_n = 5}).verdict, Verdict::equivalent);
  EXPECT_EQ(equivalent(jw, named_mapping(NamedMapping::parity, 5)).verdict, Verdict::inequivalent);
}

TEST(ClassifyTwoMode, References) {
  EXPECT_EQ(classify_two_mode(jordan_wigner(2)), TwoModeTemplate::jordan_wigner);
  EXPECT_EQ(classify_two_mode(M({"+1 X0", "-1 Z0 Y1", "+1 Z0 X1", "+1 Y0"})), TwoModeTemplate::product_breaking);
  EXPECT_EQ(classify_two_mode(named_mapping(NamedMapping::bravyi_kitaev, 2)), TwoModeTemplate::bravyi_kitaev);
  EXPECT_THROW(classify_two_mode(jordan_wigner(3)), std::invalid_argument);
  for (auto t : {TwoModeTemplate::jordan_wigner, TwoModeTemplate::bravyi_kitaev, TwoModeTemplate::product_breaking})
    EXPECT_EQ(classify_two_mode(two_mode_reference(t)), t);
}

TEST(Census, ThreeTemplates) {
  const Census c = two_mode_census();
  EXPECT_EQ(c.counts.size(), 3u);
  std::size_t total = 0;
  for (const auto& [t, k] : c.counts) {
    EXPECT_GT(k, 0u);
    total += k;
  }
  EXPECT_EQ(total, c.members.size());
  // Six maximal anticommuting 5-sets, each 4-subset ordered 4! ways.
  EXPECT_EQ(total, 6u * 5u * 24u);
  EXPECT_EQ(c.counts.at(TwoModeTemplate::jordan_wigner), 144u);
  EXPECT_EQ(c.counts.at(TwoModeTemplate::bravyi_kitaev), 288u);
  EXPECT_EQ(c.counts.at(TwoModeTemplate::product_breaking), 288u);
}

TEST(Census, BruteForceRecount) {
  // Letter-level enumeration, independent of the library's symplectic arithmetic.
  const std::string abc = "IXYZ";
  std::vector<std::string> strings;
  for (char a : abc)
    for (char b : abc)
      if (a != 'I' || b != 'I') strings.push_back({a, b});
  const auto anti = [](const std::string& p, const std::string& q) {
    int k = 0;
    for (std::size_t i = 0; i < 2; ++i) k += p[i] != 'I' && q[i] != 'I' && p[i] != q[i];
    return k % 2 == 1;
  };
  const auto op = [](const std::string& p) {
    std::string text = "+1";
    for (std::size_t i = 0; i < 2; ++i)
      if (p[i] != 'I') text += std::string(" ") + p[i] + std::to_string(i);
    return PauliString::parse(text, 2);
  };
  std::map<TwoModeTemplate, std::size_t> counts;
  std::size_t total = 0;
  for (const auto& a : strings)
    for (const auto& b : strings)
      for (const auto& c : strings)
        for (const auto& d : strings) {
          if (!anti(a, b) || !anti(a, c) || !anti(a, d) || !anti(b, c) || !anti(b, d) || !anti(c, d)) continue;
          ++total;
          const FermionQubitMapping m({op(a), op(b), op(c), op(d)});
          for (auto t : {TwoModeTemplate::jordan_wigner, TwoModeTemplate::bravyi_kitaev, TwoModeTemplate::product_breaking})
            if (matches(t, m)) ++counts[t];
        }
  EXPECT_EQ(total, two_mode_census().members.size());
  EXPECT_EQ(counts, two_mode_census().counts);
}

TEST(Census, ClassifierMatchesSetBuilderForms) {
  for (const auto& member : two_mode_census().members) {
    for (auto t : {TwoModeTemplate::jordan_wigner, TwoModeTemplate::bravyi_kitaev, TwoModeTemplate::product_breaking})
      EXPECT_EQ(matches(t, member.mapping), member.tmpl == t) << member.mapping.to_text() << to_string(t);
  }
}

TEST(Census, VacuumStructurePerTemplate) {
  for (const auto& member : two_mode_census().members) {
    const oracle::DenseState v = oracle::dense_vacuum(member.mapping);
    EXPECT_EQ(oracle::is_product(v), member.tmpl != TwoModeTemplate::product_breaking) << member.mapping.to_text();
    EXPECT_EQ(vacuum_state(member.mapping).is_product(), member.tmpl != TwoModeTemplate::product_breaking);
  }
}

TEST(Census, AgreesWithEquivalenceSearch) {
  std::mt19937_64 rng(seed() + 3);
  const Census c = two_mode_census();
  for (int t = 0; t < 60; ++t) {
    const auto& member = c.members[rng() % c.members.size()];
    const EquivResult r = equivalent(two_mode_reference(member.tmpl), member.mapping);
    ASSERT_EQ(r.verdict, Verdict::equivalent) << member.mapping.to_text();
    EXPECT_EQ(apply_symmetries(two_mode_reference(member.tmpl), r.witness), member.mapping);
    for (auto other : {TwoModeTemplate::jordan_wigner, TwoModeTemplate::bravyi_kitaev, TwoModeTemplate::product_breaking})
      if (other != member.tmpl) EXPECT_EQ(equivalent(two_mode_reference(other), member.mapping).verdict, Verdict::inequivalent);
  }
}
