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

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "fermap/equiv.hpp"
#include "fermap/ttree.hpp"

using namespace fermap;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("FERMAP_TEST_DATA");
  return (std::filesystem::path(dir ? dir : "tests/data") / name).string();
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scratch(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::path(testing::TempDir()) / ("fermap_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

// Minimal DOT grammar: digraph ID { (stmt ;?)* } with node, edge and attribute statements.
class DotChecker {
 public:
  explicit DotChecker(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '"') {
        std::size_t j = i + 1;
        while (j < text.size() && text[j] != '"') j += text[j] == '\\' ? 2 : 1;
        if (j >= text.size()) throw std::runtime_error("unterminated string");
        toks_.push_back(text.substr(i, j + 1 - i));
        i = j + 1;
      } else if (text.compare(i, 2, "->") == 0) {
        toks_.push_back("->");
        i += 2;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '.')) ++j;
        toks_.push_back(text.substr(i, j - i));
        i = j;
      } else if (std::string("{}[];,=").find(c) != std::string::npos) {
        toks_.emplace_back(1, c);
        ++i;
      } else {
        throw std::runtime_error(std::string("stray character ") + c);
      }
    }
    expect("digraph");
    id();
    expect("{");
    while (peek() != "}") stmt();
    expect("}");
    if (pos_ != toks_.size()) throw std::runtime_error("tokens after closing brace");
  }

  std::set<std::string> declared;
  std::set<std::string> referenced;
  std::size_t edges = 0;

 private:
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;

  const std::string& peek() const {
    if (pos_ >= toks_.size()) throw std::runtime_error("unexpected end");
    return toks_[pos_];
  }
  std::string next() {
    std::string t = peek();
    ++pos_;
    return t;
  }
  void expect(const std::string& t) {
    if (next() != t) throw std::runtime_error("expected " + t + " near token " + std::to_string(pos_));
  }
  static bool is_id(const std::string& t) {
    return !t.empty() && (t[0] == '"' || std::isalnum(static_cast<unsigned char>(t[0])) || t[0] == '_');
  }
  std::string id() {
    std::string t = next();
    if (!is_id(t)) throw std::runtime_error("expected identifier, got " + t);
    return t;
  }
  void attrs() {
    expect("[");
    while (peek() != "]") {
      id();
      expect("=");
      id();
      if (peek() == "," || peek() == ";") next();
    }
    expect("]");
  }
  void stmt() {
    const std::string first = id();
    if (peek() == "=") {
      next();
      id();
    } else if (first == "node" || first == "edge" || first == "graph") {
      attrs();
    } else if (peek() == "->") {
      referenced.insert(first);
      while (peek() == "->") {
        next();
        referenced.insert(id());
        ++edges;
      }
      if (peek() == "[") attrs();
    } else {
      declared.insert(first);
      if (peek() == "[") attrs();
    }
    if (peek() == ";") next();
  }
};

}  // namespace

TEST(Known, JordanWignerTwoModes) {
  const Result r = run({"known", "--name", "jw", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=2\npair 0: +1 X0 ; +1 Y0\npair 1: +1 Z0 X1 ; +1 Z0 Y1\n");
}

TEST(Known, RoundTripsAndMatchesLibrary) {
  for (std::size_t n : {1, 2, 4, 8}) {
    EXPECT_EQ(FermionQubitMapping::parse(run({"known", "--name", "bk", "--n", std::to_string(n)}).out),
              named_mapping(NamedMapping::bravyi_kitaev, n));
    EXPECT_EQ(FermionQubitMapping::parse(run({"known", "--name", "parity", "--n", std::to_string(n)}).out),
              named_mapping(NamedMapping::parity, n));
  }
  std::size_t depth = 1;
  for (std::size_t n : {1, 4, 13, 40}) {
    const Result r = run({"known", "--name", "sierpinski", "--n", std::to_string(n)});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(FermionQubitMapping::parse(r.out), canonical_mapping(complete_tree(depth++)));
  }
}

TEST(Known, RejectsBadSizes) {
  const Result bk = run({"known", "--name", "bk", "--n", "3"});
  EXPECT_EQ(bk.code, 2);
  EXPECT_NE(bk.err.find("--n"), std::string::npos);
  EXPECT_EQ(run({"known", "--name", "sierpinski", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"known", "--name", "fenwick", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"known", "--name", "jw"}).code, 2);
}

TEST(TreeMatrix, ChainIsIdentity) {
  const Result r = run({"tree-matrix", "--tree", data("chain2.tree")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10\n01\n");
  EXPECT_EQ(BinMatrix::parse(r.out), BinMatrix::identity(2));
}

TEST(TreeMatrix, RoundTrip) {
  const TernaryTree t = TernaryTree::parse("(0 X=(1) Y=(2 Z=(3)) Z=(4))");
  const Result r = run({"tree-matrix", "--tree", data("five_vertex.tree")});
  EXPECT_EQ(BinMatrix::parse(r.out), tree_matrix(t));
  EXPECT_EQ(BinMatrix::parse(r.out).to_text(), r.out);
}

TEST(TreeMapping, PairingsMatchLibrary) {
  const TernaryTree t = TernaryTree::parse("(0 X=(1) Y=(2 Z=(3)) Z=(4))");
  const std::string file = data("five_vertex.tree");
  EXPECT_EQ(FermionQubitMapping::parse(run({"tree-mapping", "--tree", file}).out), canonical_mapping(t));
  EXPECT_EQ(FermionQubitMapping::parse(run({"tree-mapping", "--tree", file, "--pairing", "real"}).out),
            braided_real_pairing(t));
  EXPECT_EQ(FermionQubitMapping::parse(run({"tree-mapping", "--tree", file, "--pairing", "legacy"}).out),
            pair_for_vacuum(t, ProductState::parse("00000")));
  const Result v = run({"tree-mapping", "--tree", file, "--vacuum", "01r1+"});
  ASSERT_EQ(v.code, 0) << v.err;
  const FermionQubitMapping m = FermionQubitMapping::parse(v.out);
  EXPECT_EQ(m, pair_for_vacuum(t, ProductState::parse("01r1+")));
  EXPECT_EQ(m.to_text(), v.out);
}

TEST(TreeMapping, InputErrors) {
  const std::string file = data("five_vertex.tree");
  const Result size = run({"tree-mapping", "--tree", file, "--vacuum", "01"});
  EXPECT_EQ(size.code, 2);
  EXPECT_NE(size.err.find("--vacuum"), std::string::npos);
  EXPECT_EQ(run({"tree-mapping", "--tree", file, "--vacuum", "0q000"}).code, 2);
  EXPECT_EQ(run({"tree-mapping", "--tree", file, "--vacuum", "00000", "--pairing", "canonical"}).code, 2);
  const Result bad_tree = run({"tree-mapping", "--tree", scratch("bad.tree", "(0 X=(1) X=(2))\n")});
  EXPECT_EQ(bad_tree.code, 2);
  EXPECT_NE(bad_tree.err.find("bad.tree"), std::string::npos);
}

TEST(Verify, SierpinskiWithOracle) {
  const std::string file = scratch("sierpinski13.map", run({"known", "--name", "sierpinski", "--n", "13"}).out);
  const Result r = run({"verify", "--mapping", file, "--oracle"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "linear encoding, G read back, all 2^13 Fock states +1 phase (sampled 4096)");
  const std::string g = r.out.substr(r.out.find("G:\n") + 3, 13 * 14);
  EXPECT_EQ(BinMatrix::parse(g), tree_matrix(complete_tree(3)));
}

TEST(Verify, ReportsEncodingKinds) {
  const Result jw = run({"verify", "--mapping", data("jw2.map")});
  EXPECT_EQ(jw.code, 0);
  EXPECT_EQ(jw.out, "linear encoding\nG:\n10\n01\nb: 00\n");
  const Result m6 = run({"verify", "--mapping", data("m6.map"), "--oracle"});
  EXPECT_EQ(m6.code, 0) << m6.err;
  EXPECT_EQ(m6.out.rfind("not a classical encoding", 0), 0u) << m6.out;
  const Result offset = run({"verify", "--mapping", scratch("ex5.map", "n=2\npair 0: +1 X0 ; -1 Y0\npair 1: -1 Z0 X1 ; -1 Z0 Y1\n"),
                             "--oracle"});
  EXPECT_EQ(offset.code, 0) << offset.err;
  EXPECT_EQ(offset.out.substr(0, offset.out.find('\n')), "affine encoding, b=10, G read back, all 2^2 Fock states +1 phase");
}

TEST(Verify, FailuresAndInputErrors) {
  const Result broken = run({"verify", "--mapping", data("broken.map")});
  EXPECT_EQ(broken.code, 1);
  EXPECT_EQ(broken.out.rfind("invalid:", 0), 0u);
  const Result garbage = run({"verify", "--mapping", data("garbage.map")});
  EXPECT_EQ(garbage.code, 2);
  EXPECT_NE(garbage.err.find("garbage.map"), std::string::npos);
  const Result missing = run({"verify", "--mapping", data("no-such-file.map")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("no-such-file.map"), std::string::npos);
}

TEST(Verify, JsonMirror) {
  const Result r = run({"--json", "verify", "--mapping", data("jw2.map"), "--oracle"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["valid"].get<bool>());
  EXPECT_EQ(j["encoding"], "linear");
  EXPECT_EQ(j["G"], nlohmann::json::array({"10", "01"}));
  EXPECT_TRUE(j["oracle"]["car"].get<bool>());
  EXPECT_EQ(j["oracle"]["checked"], 4);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Verify, SeedFromEnvironment) {
  ::setenv("FERMAP_SEED", "not-a-number", 1);
  const Result bad = run({"verify", "--mapping", data("jw2.map")});
  ::unsetenv("FERMAP_SEED");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("FERMAP_SEED"), std::string::npos);
}

TEST(Weights, SierpinskiAndJordanWigner) {
  const std::string file = scratch("s13.map", run({"known", "--name", "sierpinski", "--n", "13"}).out);
  EXPECT_EQ(run({"weights", "--mapping", file}).out, "max 3\nmean 3\ntotal 78\ncount 26\n");
  EXPECT_EQ(run({"weights", "--mapping", data("jw2.map")}).out, "max 2\nmean 3/2\ntotal 6\ncount 4\n");
  const auto j = nlohmann::json::parse(run({"--json", "weights", "--mapping", data("jw2.map")}).out);
  EXPECT_EQ(j["mean"], "3/2");
}

TEST(Classify2, Templates) {
  EXPECT_EQ(run({"classify2", "--mapping", data("jw2.map")}).out, "JW_template\n");
  EXPECT_EQ(run({"classify2", "--mapping", data("jw2_swapped.map")}).out, "JW_template\n");
  EXPECT_EQ(run({"classify2", "--mapping", data("m6.map")}).out, "ProductBreaking_template\n");
  const std::string bk = scratch("bk2.map", run({"known", "--name", "bk", "--n", "2"}).out);
  EXPECT_EQ(run({"classify2", "--mapping", bk}).out, "BK_template\n");
  const std::string jw3 = scratch("jw3.map", run({"known", "--name", "jw", "--n", "3"}).out);
  EXPECT_EQ(run({"classify2", "--mapping", jw3}).code, 2);
  EXPECT_EQ(run({"classify2", "--mapping", data("broken.map")}).code, 2);
}

TEST(Equivalent, WitnessReplays) {
  const Result r = run({"equivalent", "--a", data("jw2.map"), "--b", data("jw2_swapped.map")});
  EXPECT_EQ(r.code, 0);
  ASSERT_EQ(r.out.rfind("Equivalent\n", 0), 0u) << r.out;
  std::string log = r.out.substr(std::string("Equivalent\n").size());
  const auto ops = parse_witness(log);
  EXPECT_EQ(apply_symmetries(jordan_wigner(2), ops),
            FermionQubitMapping::parse("n=2\npair 0: +1 X1 ; +1 Y1\npair 1: +1 X0 Z1 ; +1 Y0 Z1\n"));
}

TEST(Equivalent, VerdictsAndErrors) {
  const std::string bk = scratch("bk2e.map", run({"known", "--name", "bk", "--n", "2"}).out);
  const Result no = run({"equivalent", "--a", data("jw2.map"), "--b", bk});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out.rfind("Inequivalent\n", 0), 0u);
  const std::string jw5 = scratch("jw5.map", run({"known", "--name", "jw", "--n", "5"}).out);
  const Result unknown = run({"equivalent", "--a", jw5, "--b", jw5});
  EXPECT_EQ(unknown.out.rfind("Unknown\n", 0), 0u) << unknown.out;
  const Result raised = run({"equivalent", "--a", jw5, "--b", jw5, "--max-n", "5"});
  EXPECT_EQ(raised.code, 0);
  EXPECT_EQ(raised.out.rfind("Equivalent\n", 0), 0u);
  const std::string jw3 = scratch("jw3e.map", run({"known", "--name", "jw", "--n", "3"}).out);
  EXPECT_EQ(run({"equivalent", "--a", data("jw2.map"), "--b", jw3}).code, 2);
  const auto j = nlohmann::json::parse(run({"--json", "equivalent", "--a", data("jw2.map"), "--b", bk}).out);
  EXPECT_EQ(j["verdict"], "Inequivalent");
}

TEST(Transform, LadderTerms) {
  EXPECT_EQ(run({"transform", "--mapping", data("jw2.map"), "--term", "a 1"}).out, "+1/2 Z0 X1\n+i/2 Z0 Y1\n");
  const Result num = run({"transform", "--mapping", data("jw2.map"), "--term", "a† 0 a 0"});
  EXPECT_EQ(num.code, 0);
  EXPECT_EQ(num.out, number_operator(jordan_wigner(2), 0).to_string());
  EXPECT_EQ(run({"transform", "--mapping", data("jw2.map"), "--term", "a 0 a 0"}).out, "0\n");
  const Result range = run({"transform", "--mapping", data("jw2.map"), "--term", "a† 3 a 1"});
  EXPECT_EQ(range.code, 2);
  EXPECT_NE(range.err.find("--term"), std::string::npos);
  EXPECT_EQ(run({"transform", "--mapping", data("jw2.map"), "--term", "b 1"}).code, 2);
}

TEST(Dot, ParsesAndCoversEveryString) {
  for (const std::string file : {data("jw2.map"), data("m6.map")}) {
    const Result r = run({"dot", "--mapping", file});
    ASSERT_EQ(r.code, 0);
    const FermionQubitMapping m = FermionQubitMapping::parse(read(file));
    const DotChecker dot(r.out);
    for (const auto& node : dot.referenced) EXPECT_TRUE(dot.declared.count(node)) << node;
    std::size_t weight_sum = 0;
    for (const auto& p : m.ops()) weight_sum += weight(p);
    EXPECT_EQ(dot.edges, weight_sum + m.size());
  }
  const std::string big = scratch("s13d.map", run({"known", "--name", "sierpinski", "--n", "13"}).out);
  EXPECT_NO_THROW(DotChecker(run({"dot", "--mapping", big}).out));
  EXPECT_NE(run({"dot", "--mapping", data("m6.map")}).out.find("\"-1 G1\""), std::string::npos);
}

TEST(Cli, UsageErrorsAndHelp) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("tree-mapping"), std::string::npos);
}
