// Copyright 2026 The lapdual Authors
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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lapdual/congruence.hpp"
#include "lapdual/error.hpp"
#include "lapdual/laplacian.hpp"
#include "lapdual/planarity.hpp"
#include "lapdual/properties.hpp"
#include "lapdual/serialize.hpp"
#include "lapdual/two_isomorphism.hpp"

namespace lapdual::cli {

enum Exit : int { Affirmative = 0, Negative = 1, Undecided = 2, Usage = 64, BadInput = 65 };

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// LAPDUAL_BUDGET replaces the built-in default; an explicit --budget wins.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("LAPDUAL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultBudget;
}

struct CliConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::string forest = "auto";  // "auto" or e1,e5,... (1-based) or 0,4,... (0-based)
  std::string v0 = "auto";      // "auto" or v3,... (1-based) or 2,... (0-based)
  std::string beta = "auto";    // "auto" or 0-based edge images
  std::string out;              // empty: stdout
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "laplacian",        "reduced-laplacian", "incidence", "cut-block",   "flow-matrix",
      "dual-laplacian",   "snf",               "check-congruence", "check-2iso", "verify-property",
      "planarity",        "find-dual",         "verify-dual",      "emit-dot"};
  return names;
}

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

/// Comma list of indices; a leading letter marks 1-based labels like e3 or v2.
inline std::vector<std::size_t> parse_index_list(const std::string& text, char prefix) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw Error(ErrorCode::MalformedInput, "empty entry in list '" + text + "'");
    bool labelled = tok[0] == prefix;
    std::string digits = labelled ? tok.substr(1) : tok;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::MalformedInput, "bad list entry '" + tok + "'");
    std::size_t v = std::stoull(digits);
    if (labelled) {
      if (v == 0) throw Error(ErrorCode::MalformedInput, "labels start at 1: '" + tok + "'");
      --v;
    }
    out.push_back(v);
  }
  return out;
}

inline void need_inputs(const CliConfig& c, std::size_t k) {
  if (c.inputs.size() != k)
    throw UsageError(c.subcommand + " expects " + std::to_string(k) + " argument(s), got " + std::to_string(c.inputs.size()));
}

inline ReductionSpec reduction_for(const MultiGraph& g, const CliConfig& c) {
  return c.v0 == "auto" ? default_reduction(g) : make_reduction(g, parse_index_list(c.v0, 'v'));
}

inline ForestCertificate forest_for(const MultiGraph& g, const CliConfig& c) {
  return c.forest == "auto" ? maximal_forest(g) : make_forest_certificate(g, parse_index_list(c.forest, 'e'));
}

inline int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::UnknownTag: return Usage;
    case ErrorCode::CapExceeded:
    case ErrorCode::BudgetExceeded: return Undecided;
    case ErrorCode::NonplanarInput: return Negative;
    default: return BadInput;
  }
}

inline int dispatch(const CliConfig& c, std::ostream& out) {
  const std::string& cmd = c.subcommand;
  auto emit = [&](const Json& j) { out << j.dump(2) << '\n'; };
  auto graph_arg = [&](std::size_t i) { return graph_from_json(read_json(c.inputs.at(i))); };

  if (cmd == "laplacian") {
    need_inputs(c, 1);
    emit(to_json(laplacian(graph_arg(0))));
    return Affirmative;
  }
  if (cmd == "reduced-laplacian") {
    need_inputs(c, 1);
    auto g = graph_arg(0);
    emit(to_json(reduced_laplacian(g, reduction_for(g, c))));
    return Affirmative;
  }
  if (cmd == "incidence") {
    need_inputs(c, 1);
    auto g = graph_arg(0);
    auto o = Orientation::natural(g);
    emit(to_json(c.v0 == "auto" ? incidence(g, o) : reduced_incidence(g, o, reduction_for(g, c))));
    return Affirmative;
  }
  if (cmd == "cut-block") {
    need_inputs(c, 1);
    auto g = graph_arg(0);
    auto cb = cut_block(g, Orientation::natural(g), forest_for(g, c), reduction_for(g, c));
    emit(Json{{"matrix", to_json(cb.matrix)}, {"row_edges", index_array(cb.row_edges)},
              {"col_edges", index_array(cb.col_edges)}});
    return Affirmative;
  }
  if (cmd == "flow-matrix") {
    need_inputs(c, 1);
    auto g = graph_arg(0);
    emit(to_json(flow_matrix(g, Orientation::natural(g), forest_for(g, c), reduction_for(g, c))));
    return Affirmative;
  }
  if (cmd == "dual-laplacian") {
    need_inputs(c, 1);
    auto g = graph_arg(0);
    auto o = Orientation::natural(g);
    auto f = forest_for(g, c);
    auto s = reduction_for(g, c);
    auto p = reduced_dual_laplacian(g, o, f, s);
    IntMatrix hat = superbase_matrix(g, o, f, s);
    emit(Json{{"reduced", to_json(p.reduced)},
              {"unreduced", to_json(p.unreduced)},
              {"witness", to_json(p.witness.matrix())},
              {"base", to_json(p.base)},
              {"superbase_gram", to_json(hat * hat.transpose())}});
    return Affirmative;
  }
  if (cmd == "snf") {
    need_inputs(c, 1);
    auto m = matrix_from_json(read_json(c.inputs[0]));
    auto r = smith_normal_form(m);
    emit(Json{{"diag", to_json(r.diag)}, {"left", to_json(r.left.matrix())}, {"right", to_json(r.right.matrix())}});
    return Affirmative;
  }
  if (cmd == "check-congruence") {
    need_inputs(c, 2);
    auto a = matrix_from_json(read_json(c.inputs[0]));
    auto b = matrix_from_json(read_json(c.inputs[1]));
    auto v = decide_congruence(a, b, c.budget);
    emit(to_json(v));
    return v.status == CongruenceVerdict::Status::Congruent      ? Affirmative
           : v.status == CongruenceVerdict::Status::NotCongruent ? Negative
                                                                 : Undecided;
  }
  if (cmd == "check-2iso") {
    need_inputs(c, 2);
    auto r = decide_2_isomorphism_bruteforce(graph_arg(0), graph_arg(1), c.budget);
    emit(to_json(r));
    return r.status == TwoIsoResult::Status::TwoIsomorphic      ? Affirmative
           : r.status == TwoIsoResult::Status::NotTwoIsomorphic ? Negative
                                                                : Undecided;
  }
  if (cmd == "verify-property") {
    need_inputs(c, 2);
    PropertyOptions opt;
    opt.budget = c.budget;
    opt.seed = c.seed;
    auto r = verify_property(graph_arg(1), c.inputs[0], opt);
    emit(to_json(r));
    return r.passed ? Affirmative : Negative;
  }
  if (cmd == "planarity") {
    need_inputs(c, 1);
    auto v = decide_planarity(graph_arg(0), c.budget, c.seed);
    emit(to_json(v));
    return v.status == PlanarityVerdict::Status::Planar      ? Affirmative
           : v.status == PlanarityVerdict::Status::Nonplanar ? Negative
                                                             : Undecided;
  }
  if (cmd == "find-dual") {
    need_inputs(c, 1);
    emit(to_json(construct_abstract_dual(graph_arg(0), c.budget, c.seed)));
    return Affirmative;
  }
  if (cmd == "verify-dual") {
    need_inputs(c, 2);
    auto g = graph_arg(0);
    Json second = read_json(c.inputs[1]);
    MultiGraph h;
    std::vector<EdgeId> beta;
    std::optional<bool> algebra;
    if (second.contains("dual_graph")) {
      auto cert = certificate_from_json(second, g);
      h = cert.dual_graph;
      beta = cert.edge_bijection;
      algebra = check_certificate_algebra(g, cert);
    } else {
      h = graph_from_json(second);
      beta.resize(g.num_edges());
      for (EdgeId e = 0; e < beta.size(); ++e) beta[e] = e;
    }
    if (c.beta != "auto") beta = parse_index_list(c.beta, '\0');
    auto r = verify_abstract_dual(g, h, beta);
    Json j = to_json(r);
    if (algebra) j["certificate_algebra"] = *algebra;
    emit(j);
    return r.passed && algebra.value_or(true) ? Affirmative : Negative;
  }
  if (cmd == "emit-dot") {
    need_inputs(c, 1);
    Json j = read_json(c.inputs[0]);
    if (j.contains("dual_graph"))
      out << to_dot(graph_from_json(j["dual_graph"]), orientation_from_json(lapdual::detail::field(j, "dual_orientation")));
    else
      out << to_dot(graph_from_json(j));
    return Affirmative;
  }
  throw UsageError("unknown subcommand '" + cmd + "'");
}

}  // namespace detail

/// Runs one subcommand. Results go to `out` (or the --out file); failures
/// are reported as a JSON error object with the matching exit code.
inline int run(const CliConfig& config, std::ostream& out) {
  std::ostringstream buffer;
  int code = Affirmative;
  try {
    code = detail::dispatch(config, buffer);
  } catch (const detail::UsageError& e) {
    out << error_json("Usage", e.what()).dump(2) << '\n';
    return Usage;
  } catch (const Error& e) {
    out << error_json(std::string(to_string(e.code())), e.what()).dump(2) << '\n';
    return detail::exit_for(e);
  }
  if (config.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out);
    if (!file) {
      out << error_json("MalformedInput", "cannot write '" + config.out + "'").dump(2) << '\n';
      return BadInput;
    }
    file << buffer.str();
  }
  return code;
}

/// Parses argv and runs. Usage problems exit with 64.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  config.budget = default_budget();
  CLI::App app{"Exact Laplacian, dual Laplacian and planarity tools for multigraphs"};
  app.set_version_flag("--version", "lapdual 0.1.0");
  std::string commands;
  for (const auto& s : subcommands()) commands += (commands.empty() ? "" : ", ") + s;
  app.add_option("command", config.subcommand, "one of: " + commands)->required();
  app.add_option("inputs", config.inputs, "input files (verify-property takes TAG GRAPH)");
  app.add_option("--budget", config.budget, "elementary search steps (default 1000000, or LAPDUAL_BUDGET)");
  app.add_option("--seed", config.seed, "seed for randomized restarts");
  app.add_option("--forest", config.forest, "maximal forest: auto, e1,e5,... or 0-based indices");
  app.add_option("--v0", config.v0, "deleted vertices: auto, v3,... or 0-based indices");
  app.add_option("--beta", config.beta, "edge map for verify-dual: auto or 0-based images");
  app.add_option("--out", config.out, "write the result here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Affirmative;
  } catch (const CLI::CallForVersion&) {
    out << "lapdual 0.1.0\n";
    return Affirmative;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << error_json("Usage", e.what()).dump(2) << '\n';
    return Usage;
  }
  const auto& names = subcommands();
  if (std::find(names.begin(), names.end(), config.subcommand) == names.end()) {
    out << error_json("Usage", "unknown subcommand '" + config.subcommand + "'").dump(2) << '\n';
    return Usage;
  }
  return run(config, out);
}

}  // namespace lapdual::cli
