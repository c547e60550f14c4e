// Copyright 2026 The qegraph Authors
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

// qegraph command-line front end.
//
// Exit codes: 0 QE (or success), 1 NonQE (or a failing fixture), 2 error,
// 3 methods disagree.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qegraph/distance.h"
#include "qegraph/fixtures.h"
#include "qegraph/io.h"
#include "qegraph/qe_analysis.h"
#include "qegraph/winkler.h"

namespace {

using namespace qegraph;

constexpr int kExitQe = 0;
constexpr int kExitNonQe = 1;
constexpr int kExitError = 2;
constexpr int kExitDisagree = 3;

struct Config {
  std::string graph;
  std::string method = "schoenberg";
  std::string mode;
  double tol_psd = Tolerances{}.psd;
  std::string format = "text";
  std::string tree;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string fixtures;
  int max_vertices = 18;
};

Mode resolve_mode(const Config& c) {
  if (!c.mode.empty()) return parse_mode(c.mode);
  if (const char* env = std::getenv("QEGRAPH_MODE"); env && *env) {
    return parse_mode(env);
  }
  return Mode::kAuto;
}

Tolerances resolve_tol(const Config& c) {
  if (!(c.tol_psd > 0)) throw std::invalid_argument("--tol-psd must be positive");
  Tolerances t;
  t.psd = c.tol_psd;
  return t;
}

std::optional<OrientedTree> resolve_tree(const Config& c, const Graph& g) {
  if (!c.tree.empty()) return read_tree(g, c.tree);
  if (c.seed) {
    std::mt19937_64 rng(*c.seed);
    return random_oriented_tree(g, rng);
  }
  return std::nullopt;
}

void print_verdict_text(const std::string& name, const QeVerdict& v) {
  std::cout << name << "  " << to_string(v.method) << "  " << to_string(v.decision);
  if (!v.rule.empty()) std::cout << "  rule: " << v.rule;
  if (v.cnd) {
    std::cout << "  lambda_max=" << v.cnd->lambda_max << " (" << to_string(v.cnd->mode)
              << ")";
    if (!v.cnd->cnd) std::cout << "  <f,Df>=" << v.cnd->certificate_value;
  }
  if (v.psd) {
    std::cout << "  lambda_min=" << v.psd->lambda_min << " (" << to_string(v.psd->mode)
              << ")";
    if (!v.psd->psd) std::cout << "  <v,Kv>=" << v.psd->certificate_value;
  }
  std::cout << '\n';
}

int cmd_classify(const Config& c) {
  const LoadedGraph lg = load_graph(c.graph);
  const Mode mode = resolve_mode(c);
  const Tolerances tol = resolve_tol(c);
  std::vector<Method> methods;
  if (c.method == "all") {
    if (lg.theta) methods.push_back(Method::kClosedForm);
    methods.push_back(Method::kSchoenberg);
    methods.push_back(Method::kWinkler);
  } else {
    methods.push_back(parse_method(c.method));
  }
  std::vector<QeVerdict> verdicts;
  for (Method m : methods) {
    switch (m) {
      case Method::kClosedForm:
        if (!lg.theta) {
          throw std::invalid_argument("closed_form needs a theta: graph");
        }
        verdicts.push_back(classify_theta_closed_form(*lg.theta));
        break;
      case Method::kSchoenberg:
        verdicts.push_back(classify_schoenberg(lg.graph, mode, tol));
        break;
      case Method::kWinkler:
        verdicts.push_back(
            classify_winkler(lg.graph, resolve_tree(c, lg.graph), mode, tol));
        break;
    }
  }
  std::optional<double> q;
  if (lg.graph.num_vertices() >= 2) q = qec(lg.graph).value;
  if (c.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const QeVerdict& v : verdicts) out.push_back(verdict_to_json(lg.name, v, q));
    std::cout << (verdicts.size() == 1 ? out[0] : out).dump(2) << '\n';
  } else {
    for (const QeVerdict& v : verdicts) print_verdict_text(lg.name, v);
  }
  for (const QeVerdict& v : verdicts) {
    if (v.decision != verdicts.front().decision) {
      std::cerr << "methods disagree on " << lg.name << '\n';
      return kExitDisagree;
    }
  }
  return verdicts.front().is_qe() ? kExitQe : kExitNonQe;
}

int cmd_qec(const Config& c) {
  const LoadedGraph lg = load_graph(c.graph);
  const QecValue v = qec(lg.graph);
  if (c.format == "json") {
    nlohmann::json j{{"graph", lg.name}, {"qec", v.value}, {"maximizer", v.maximizer}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << std::fixed << std::setprecision(8) << v.value << '\n';
  }
  return 0;
}

int cmd_kernel(const Config& c) {
  const LoadedGraph lg = load_graph(c.graph);
  std::optional<OrientedTree> t = resolve_tree(c, lg.graph);
  if (!t) t = default_orientation_and_tree(lg.graph);
  const KernelMatrix k = winkler_kernel(lg.graph, *t);
  const bool exact = resolve_mode(c) != Mode::kFloat;
  if (c.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < k.m; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < k.m; ++j) {
        if (exact) {
          row.push_back(to_string(k.exact(i, j)));
        } else {
          row.push_back(k(i, j));
        }
      }
      rows.push_back(row);
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const DirectedEdge& e : t->tree_edges) edges.push_back({e.tail, e.head});
    std::cout << nlohmann::json{{"graph", lg.name}, {"tree", edges}, {"kernel", rows}}.dump(2)
              << '\n';
  } else {
    write_kernel(std::cout, k, exact);
  }
  return 0;
}

int cmd_distance(const Config& c) {
  const LoadedGraph lg = load_graph(c.graph);
  const DistanceMatrix d = distance_matrix(lg.graph);
  if (c.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < d.size(); ++i) {
      const auto r = d.entries().subspan(static_cast<std::size_t>(i) * d.size(), d.size());
      rows.push_back(std::vector<int>(r.begin(), r.end()));
    }
    std::cout << rows.dump() << '\n';
  } else {
    write_matrix(std::cout, d);
  }
  return 0;
}

int cmd_verify_paper(const Config& c) {
  FixtureOptions opt;
  opt.mode = resolve_mode(c);
  opt.tol = resolve_tol(c);
  const std::filesystem::path dir =
      c.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(c.fixtures);
  const std::vector<FixtureCheck> checks = verify_paper_fixtures(dir, opt);
  int passed = 0;
  const FixtureCheck* first_failure = nullptr;
  for (const FixtureCheck& f : checks) {
    std::cout << (f.pass ? "PASS  " : "FAIL  ") << f.name;
    if (!f.pass) std::cout << ": " << f.detail;
    std::cout << '\n';
    if (f.pass) {
      ++passed;
    } else if (!first_failure) {
      first_failure = &f;
    }
  }
  std::cout << passed << "/" << checks.size() << " fixtures pass\n";
  if (first_failure) {
    std::cerr << "first failure: " << first_failure->name << ": "
              << first_failure->detail << '\n';
    return 1;
  }
  return 0;
}

int cmd_sweep(const Config& c) {
  const SweepReport r =
      classification_sweep(c.max_vertices, resolve_mode(c), resolve_tol(c));
  const bool json = c.format == "json";
  auto emit = [&](std::ostream& os) {
    if (json) {
      os << sweep_to_json(r).dump(2) << '\n';
    } else {
      write_sweep_csv(os, r);
    }
  };
  if (c.out.empty()) {
    emit(std::cout);
  } else {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    emit(f);
    if (!f) throw std::runtime_error("write to " + c.out + " failed");
  }
  (c.out.empty() ? std::cerr : std::cout)
      << r.rows.size() << " theta graphs: " << r.qe_count << " QE, " << r.non_qe_count
      << " NonQE, " << r.disagreements << " disagreements\n";
  return r.disagreements == 0 ? 0 : kExitDisagree;
}

void add_mode_flags(CLI::App* sub, Config& c) {
  sub->add_option("--mode", c.mode, "float, exact or auto (default: $QEGRAPH_MODE or auto)")
      ->check(CLI::IsMember({"float", "exact", "auto"}));
  sub->add_option("--tol-psd", c.tol_psd, "relative PSD tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Quadratic-embedding analysis of graphs"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "decide QE class");
  classify->add_option("graph", c.graph, "theta:A,B,C | path:N | cycle:N | edge-list file")
      ->required();
  classify->add_option("--method", c.method, "closed_form, schoenberg, winkler or all")
      ->check(CLI::IsMember({"closed_form", "schoenberg", "winkler", "all"}));
  classify->add_option("--tree", c.tree, "oriented spanning tree file");
  classify->add_option("--seed", c.seed, "random spanning tree and orientation");
  classify->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  add_mode_flags(classify, c);

  auto* qec_cmd = app.add_subcommand("qec", "QE constant");
  qec_cmd->add_option("graph", c.graph)->required();
  qec_cmd->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* kernel = app.add_subcommand("kernel", "spanning-tree kernel K");
  kernel->add_option("graph", c.graph)->required();
  kernel->add_option("--tree", c.tree, "oriented spanning tree file");
  kernel->add_option("--seed", c.seed, "random spanning tree and orientation");
  kernel->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  add_mode_flags(kernel, c);

  auto* distance = app.add_subcommand("distance", "distance matrix");
  distance->add_option("graph", c.graph)->required();
  distance->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify-paper", "reproduce the theta-graph fixtures");
  verify->add_option("--fixtures", c.fixtures, "fixture directory");
  add_mode_flags(verify, c);

  auto* sweep = app.add_subcommand("sweep", "classify every theta graph up to a size");
  sweep->add_option("--max-vertices", c.max_vertices, "largest vertex count");
  sweep->add_option("--out", c.out, "output file (default stdout)");
  sweep->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  add_mode_flags(sweep, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*classify) return cmd_classify(c);
    if (*qec_cmd) return cmd_qec(c);
    if (*kernel) return cmd_kernel(c);
    if (*distance) return cmd_distance(c);
    if (*verify) return cmd_verify_paper(c);
    if (*sweep) return cmd_sweep(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
