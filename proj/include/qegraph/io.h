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

// Text formats.
//
//   edge list   first line n, then "u v" per edge (0-based); '#' starts a
//               comment anywhere on a line.
//   tree file   "a b" per directed tree edge, order significant; '#' comments.
//   matrix      first line n, then n rows of n whitespace-separated entries;
//               entries are integers, decimals, or rationals "p/q".
//
// Graph URIs: "theta:A,B,C", "path:N", "cycle:N"; anything else is read as
// an edge-list file path.

#ifndef QEGRAPH_IO_H_
#define QEGRAPH_IO_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qegraph/distance.h"
#include "qegraph/graph.h"
#include "qegraph/qe_analysis.h"
#include "qegraph/rational.h"
#include "qegraph/spectra.h"
#include "qegraph/winkler.h"

namespace qegraph {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

struct LoadedGraph {
  Graph graph;
  // Set for theta: URIs.
  std::optional<ThetaSpec> theta;
  std::string name;
};
LoadedGraph load_graph(std::string_view uri_or_path);

std::vector<DirectedEdge> parse_tree_edges(std::string_view text);
OrientedTree read_tree(const Graph& g, const std::filesystem::path& path);

struct RationalMatrix {
  int n = 0;
  std::vector<Rational> entries;

  const Rational& operator()(int i, int j) const { return entries[i * n + j]; }
};
RationalMatrix parse_matrix(std::string_view text);
RationalMatrix read_matrix(const std::filesystem::path& path);
// Plain whitespace-separated integers.
std::vector<long long> read_integer_vector(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const DistanceMatrix& d);
// Exact: entries as reduced rationals (halves print as "p/2").
// Float: decimals.
void write_kernel(std::ostream& out, const KernelMatrix& k, bool exact);
void write_matrix(std::ostream& out, const SymMatrix& m);

nlohmann::json verdict_to_json(const std::string& graph_name,
                               const QeVerdict& verdict,
                               std::optional<double> qec_value);

// Re-derives the decision stored in a verdict JSON against g: a certificate
// is re-evaluated by direct quadratic form; a QE verdict is re-checked by
// recomputing the method on g. Returns the decision so derived.
QeDecision reverify_verdict_json(const nlohmann::json& verdict,
                                 const Graph& g,
                                 const Tolerances& tol = Tolerances{});

void write_sweep_csv(std::ostream& out, const SweepReport& report);
nlohmann::json sweep_to_json(const SweepReport& report);

}  // namespace qegraph

#endif  // QEGRAPH_IO_H_
