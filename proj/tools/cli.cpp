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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "fermap/encoding.hpp"
#include "fermap/equiv.hpp"
#include "fermap/oracle.hpp"
#include "fermap/ttree.hpp"

namespace fermap::cli {
namespace {

using json = nlohmann::ordered_json;

// Bad input; becomes exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t env_seed() {
  const char* s = std::getenv("FERMAP_SEED");
  if (!s || !*s) return 1;
  char* end = nullptr;
  const std::uint64_t v = std::strtoull(s, &end, 10);
  if (*end) throw InputError("FERMAP_SEED must be an unsigned integer, got '" + std::string(s) + "'");
  return v;
}

std::string slurp(const std::string& path, const std::string& flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(flag + ": cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto parse_file(const std::string& path, const std::string& flag, F&& parse) {
  const std::string text = slurp(path, flag);
  try {
    return parse(text);
  } catch (const std::exception& e) {
    throw InputError(flag + " '" + path + "': " + e.what());
  }
}

FermionQubitMapping read_mapping(const std::string& path, const std::string& flag = "--mapping") {
  return parse_file(path, flag, [](const std::string& t) { return FermionQubitMapping::parse(t); });
}

TernaryTree read_tree(const std::string& path) {
  return parse_file(path, "--tree", [](const std::string& t) { return TernaryTree::parse(t); });
}

json mapping_json(const FermionQubitMapping& m) {
  json pairs = json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    pairs.push_back({m.op(2 * i).to_string(), m.op(2 * i + 1).to_string()});
  return {{"n", m.size()}, {"pairs", pairs}};
}

json matrix_json(const BinMatrix& g) {
  json rows = json::array();
  std::istringstream in(g.to_text());
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  return {{"n", g.size()}, {"rows", rows}};
}

struct Context {
  std::ostream& out;
  bool as_json = false;
};

void emit_mapping(Context& c, const FermionQubitMapping& m) {
  if (c.as_json)
    c.out << mapping_json(m).dump(2) << '\n';
  else
    c.out << m.to_text();
}

int cmd_known(Context& c, const std::string& name, std::size_t n) {
  FermionQubitMapping m = [&] {
    try {
      if (name == "jw") return named_mapping(NamedMapping::jordan_wigner, n);
      if (name == "bk") return named_mapping(NamedMapping::bravyi_kitaev, n);
      if (name == "parity") return named_mapping(NamedMapping::parity, n);
    } catch (const std::exception& e) {
      throw InputError("--n " + std::to_string(n) + ": " + e.what());
    }
    std::size_t depth = 1, size = 1;
    for (; size < n; size = 3 * size + 1) ++depth;
    if (size != n)
      throw InputError("--n " + std::to_string(n) + ": sierpinski needs 1, 4, 13, 40, ... qubits");
    return canonical_mapping(complete_tree(depth));
  }();
  emit_mapping(c, m);
  return kOk;
}

int cmd_tree_mapping(Context& c, const std::string& tree_file, const std::string& vacuum,
                     std::string pairing) {
  const TernaryTree t = read_tree(tree_file);
  if (pairing.empty()) pairing = vacuum.empty() ? "canonical" : "legacy";
  if (!vacuum.empty() && pairing != "legacy")
    throw InputError("--vacuum only applies to --pairing legacy");
  FermionQubitMapping m = [&] {
    if (pairing == "canonical") return canonical_mapping(t);
    if (pairing == "real") return braided_real_pairing(t);
    ProductState v = ProductState(std::vector<QubitState>(t.size(), QubitState::ZPlus));
    if (!vacuum.empty()) {
      try {
        v = ProductState::parse(vacuum);
      } catch (const std::exception& e) {
        throw InputError("--vacuum '" + vacuum + "': " + e.what());
      }
      if (v.size() != t.size())
        throw InputError("--vacuum '" + vacuum + "' has " + std::to_string(v.size()) + " qubits, tree has " +
                         std::to_string(t.size()));
    }
    return pair_for_vacuum(t, v);
  }();
  emit_mapping(c, m);
  return kOk;
}

int cmd_tree_matrix(Context& c, const std::string& tree_file) {
  const BinMatrix g = tree_matrix(read_tree(tree_file));
  if (c.as_json)
    c.out << matrix_json(g).dump(2) << '\n';
  else
    c.out << g.to_text();
  return kOk;
}

std::string sweep_phrase(const oracle::Report& r, std::size_t n) {
  std::string s = "all 2^" + std::to_string(n) + " Fock states +1 phase";
  if (r.sampled) s += " (sampled " + std::to_string(r.checked) + ")";
  return s;
}

int cmd_verify(Context& c, const std::string& file, bool with_oracle) {
  const FermionQubitMapping m = read_mapping(file);
  const std::uint64_t seed = env_seed();
  json report = {{"n", m.size()}};
  std::vector<std::string> summary;
  bool ok = true;

  const ValidationReport v = validate(m);
  report["valid"] = v.ok;
  if (!v.ok) {
    report["validation_error"] = v.message;
    summary.push_back("invalid: " + v.message);
    ok = false;
  }

  std::optional<AffineEncoding> enc;
  if (v.ok) {
    const ClassicalResult cr = detect_classical(m, DetectOptions{.seed = seed});
    if (cr) {
      enc = cr.encoding;
      report["encoding"] = enc->is_linear() ? "linear" : "affine";
      report["G"] = matrix_json(enc->g)["rows"];
      report["b"] = enc->b.to_string();
      summary.push_back(enc->is_linear() ? "linear encoding" : "affine encoding, b=" + enc->b.to_string());
    } else {
      report["encoding"] = "not classical";
      report["reason"] = cr.failure->reason + " at f=" + cr.failure->f.to_string();
      summary.push_back("not a classical encoding (" + cr.failure->reason + " at f=" + cr.failure->f.to_string() + ")");
    }
  }

  if (with_oracle && v.ok) {
    const oracle::SweepOptions opt{.seed = seed};
    json o;
    if (m.size() <= opt.exhaustive_up_to) {
      const oracle::Report car = oracle::check_car(m);
      o["car"] = car.ok;
      if (!car.ok) {
        o["car_error"] = car.message;
        summary.push_back("oracle CAR check failed: " + car.message);
        ok = false;
      }
    }
    const oracle::Report r = enc ? oracle::verify_affine(m, enc->g, enc->b, opt) : oracle::verify_fock_basis(m, opt);
    o["fock_ok"] = r.ok;
    o["checked"] = r.checked;
    o["sampled"] = r.sampled;
    if (!r.ok) o["fock_error"] = r.message;
    report["oracle"] = o;
    if (!r.ok) {
      summary.push_back("oracle: " + r.message);
      ok = false;
    } else if (enc) {
      summary.push_back("G read back");
      summary.push_back(sweep_phrase(r, m.size()));
    } else {
      summary.push_back("Fock basis orthonormal and stabilised (" + std::to_string(r.checked) + " states" +
                        (r.sampled ? ", sampled" : "") + ")");
    }
  }
  report["ok"] = ok;

  if (c.as_json) {
    c.out << report.dump(2) << '\n';
  } else {
    std::string line;
    for (const auto& s : summary) line += (line.empty() ? "" : ", ") + s;
    c.out << line << '\n';
    if (enc) c.out << "G:\n" << enc->g.to_text() << "b: " << enc->b.to_string() << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_weights(Context& c, const std::string& file) {
  const WeightStats w = weight_stats(read_mapping(file));
  if (c.as_json) {
    c.out << json{{"max", w.max_weight}, {"mean", w.mean_fraction()}, {"total", w.total_weight}, {"count", w.count}}.dump(2)
          << '\n';
  } else {
    c.out << "max " << w.max_weight << "\nmean " << w.mean_fraction() << "\ntotal " << w.total_weight << "\ncount "
          << w.count << '\n';
  }
  return kOk;
}

int cmd_classify2(Context& c, const std::string& file) {
  const FermionQubitMapping m = read_mapping(file);
  if (m.size() != 2) throw InputError("--mapping '" + file + "': classify2 needs a two-mode mapping");
  if (const ValidationReport v = validate(m); !v.ok) throw InputError("--mapping '" + file + "': " + v.message);
  const std::string t = to_string(classify_two_mode(m));
  if (c.as_json)
    c.out << json{{"template", t}}.dump(2) << '\n';
  else
    c.out << t << '\n';
  return kOk;
}

int cmd_equivalent(Context& c, const std::string& a_file, const std::string& b_file, std::size_t max_n) {
  const FermionQubitMapping a = read_mapping(a_file, "--a");
  const FermionQubitMapping b = read_mapping(b_file, "--b");
  if (a.size() != b.size())
    throw InputError("--a and --b have " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " modes");
  const EquivResult r = equivalent(a, b, EquivOptions{.max_n = max_n});
  if (c.as_json) {
    json w = json::array();
    for (const auto& op : r.witness) w.push_back(to_string(op));
    c.out << json{{"verdict", to_string(r.verdict)}, {"reason", r.reason}, {"candidates", r.candidates}, {"witness", w}}
                 .dump(2)
          << '\n';
  } else {
    c.out << to_string(r.verdict) << '\n';
    if (!r.reason.empty()) c.out << "# " << r.reason << '\n';
    c.out << witness_to_text(r.witness);
  }
  return r.verdict == Verdict::equivalent ? kOk : kVerificationFailed;
}

int cmd_transform(Context& c, const std::string& file, const std::string& term) {
  const FermionQubitMapping m = read_mapping(file);
  std::vector<LadderOp> ops;
  try {
    ops = parse_ladder_term(term);
    for (const auto& op : ops)
      if (op.mode >= m.size()) throw std::out_of_range("mode " + std::to_string(op.mode) + " out of range");
  } catch (const std::exception& e) {
    throw InputError("--term '" + term + "': " + e.what());
  }
  const PauliSum s = transform_ladder_term(m, ops);
  if (c.as_json) {
    json terms = json::array();
    std::istringstream in(s.to_string());
    for (std::string line; std::getline(in, line);)
      if (line != "0") terms.push_back(line);
    c.out << json{{"terms", terms}}.dump(2) << '\n';
  } else {
    c.out << s.to_string();
  }
  return kOk;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

int cmd_dot(Context& c, const std::string& file) {
  const FermionQubitMapping m = read_mapping(file);
  const std::size_t n = m.size();
  std::ostringstream d;
  d << "digraph mapping {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t q = 0; q < n; ++q) d << "  q" << q << " [label=\"" << q << "\"];\n";
  d << "  node [shape=box];\n";
  for (std::size_t k = 0; k < 2 * n; ++k) {
    const PauliString& p = m.op(k);
    const std::string coeff = p.to_string().substr(0, p.to_string().find(' '));
    d << "  g" << k << " [label=\"" << dot_escape(coeff) << " G" << k << "\"];\n";
    std::string prev = "g" + std::to_string(k);
    for (std::size_t q = 0; q < n; ++q) {
      const char l = p.letter(q);
      if (l == 'I') continue;
      d << "  " << prev << " -> q" << q << " [label=\"" << l << "\", colorscheme=set312, color=" << (k % 12) + 1
        << "];\n";
      prev = "q" + std::to_string(q);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    d << "  g" << 2 * i << " -> g" << 2 * i + 1 << " [dir=none, style=dashed, label=\"mode " << i << "\"];\n";
  d << "}\n";
  if (c.as_json)
    c.out << json{{"dot", d.str()}}.dump(2) << '\n';
  else
    c.out << d.str();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermion-to-qubit mappings: construction, verification and equivalence", "fermap"};
  app.require_subcommand(1);
  Context ctx{out};
  app.add_flag("--json", ctx.as_json, "Print reports as JSON");

  std::string name, tree_file, vacuum, pairing, mapping_file, a_file, b_file, term;
  std::size_t n = 0, max_n = 4;
  bool with_oracle = false;
  std::function<int()> action;

  auto* known = app.add_subcommand("known", "Emit a named mapping");
  known->add_option("--name", name)->required()->check(CLI::IsMember({"jw", "bk", "parity", "sierpinski"}));
  known->add_option("--n", n)->required()->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  known->callback([&] { action = [&] { return cmd_known(ctx, name, n); }; });

  auto* tm = app.add_subcommand("tree-mapping", "Build a mapping from a ternary tree");
  tm->add_option("--tree", tree_file)->required();
  tm->add_option("--vacuum", vacuum, "Product vacuum, one of 0 1 + - r l per qubit");
  tm->add_option("--pairing", pairing)->check(CLI::IsMember({"canonical", "legacy", "real"}));
  tm->callback([&] { action = [&] { return cmd_tree_mapping(ctx, tree_file, vacuum, pairing); }; });

  auto* tmat = app.add_subcommand("tree-matrix", "Emit the matrix G_T of a ternary tree");
  tmat->add_option("--tree", tree_file)->required();
  tmat->callback([&] { action = [&] { return cmd_tree_matrix(ctx, tree_file); }; });

  auto* verify = app.add_subcommand("verify", "Validate a mapping and detect its encoding");
  verify->add_option("--mapping", mapping_file)->required();
  verify->add_flag("--oracle", with_oracle, "Cross-check with the dense state-vector oracle");
  verify->callback([&] { action = [&] { return cmd_verify(ctx, mapping_file, with_oracle); }; });

  auto* weights = app.add_subcommand("weights", "Print Pauli weight statistics");
  weights->add_option("--mapping", mapping_file)->required();
  weights->callback([&] { action = [&] { return cmd_weights(ctx, mapping_file); }; });

  auto* classify = app.add_subcommand("classify2", "Name the template of a two-mode mapping");
  classify->add_option("--mapping", mapping_file)->required();
  classify->callback([&] { action = [&] { return cmd_classify2(ctx, mapping_file); }; });

  auto* eq = app.add_subcommand("equivalent", "Decide equivalence of two mappings");
  eq->add_option("--a", a_file)->required();
  eq->add_option("--b", b_file)->required();
  eq->add_option("--max-n", max_n, "Largest mode count searched exhaustively")->check(CLI::Range(1, 8));
  eq->callback([&] { action = [&] { return cmd_equivalent(ctx, a_file, b_file, max_n); }; });

  auto* tr = app.add_subcommand("transform", "Map a product of ladder operators to Pauli strings");
  tr->add_option("--mapping", mapping_file)->required();
  tr->add_option("--term", term, "e.g. \"a† 3 a 1\"")->required();
  tr->callback([&] { action = [&] { return cmd_transform(ctx, mapping_file, term); }; });

  auto* dot = app.add_subcommand("dot", "Emit a Graphviz diagram of a mapping");
  dot->add_option("--mapping", mapping_file)->required();
  dot->callback([&] { action = [&] { return cmd_dot(ctx, mapping_file); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fermap: " << e.what() << '\n';
    return kInputError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "fermap: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "fermap: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "fermap: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace fermap::cli
