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

#ifndef QEGRAPH_GRAPH_H_
#define QEGRAPH_GRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qegraph {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1. Immutable once built; every
// analysis in the library takes it by const reference.
class Graph {
 public:
  // Throws std::invalid_argument on self-loops, duplicate edges, out-of-range
  // endpoints, n < 1, or a label vector whose size is not n.
  Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges,
        std::vector<std::string> labels = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }
  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  // Position of {a,b} in edges(), or nullopt.
  std::optional<int> edge_index(Vertex a, Vertex b) const;

  bool has_labels() const { return !labels_.empty(); }
  // Falls back to the decimal index when the graph carries no labels.
  std::string label(Vertex v) const;
  std::optional<Vertex> find_label(std::string_view label) const;

  bool is_connected() const;
  // A pair of mutually unreachable vertices, if any.
  std::optional<std::pair<Vertex, Vertex>> unreachable_pair() const;
  bool is_bipartite() const;
  bool is_tree() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

// Three internally disjoint paths of lengths alpha, beta, gamma sharing both
// endpoints. At most one length may equal 1.
struct ThetaSpec {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;

  // Throws std::invalid_argument when a length is < 1 or two lengths are 1.
  void validate() const;
  // Sorted copy (alpha <= beta <= gamma).
  ThetaSpec normalized() const;
  int num_vertices() const { return alpha + beta + gamma - 1; }
  int num_edges() const { return alpha + beta + gamma; }

  friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;
};

// Vertex numbering of make_theta: 0 is x_0 = y_0 = z_0, 1 is
// x_alpha = y_beta = z_gamma, then the interior vertices x_1..x_{alpha-1},
// y_1..y_{beta-1}, z_1..z_{gamma-1}. Labels are "x_j", "y_j", "z_j" (interior)
// with the two junctions labelled "x_0" and "x_<alpha>".
Graph make_theta(const ThetaSpec& spec);

// Index of the vertex at position j along the path named by `path`
// ('x', 'y' or 'z'), honouring the junction identifications.
// Throws std::out_of_range when j exceeds the path length.
Vertex theta_vertex(const ThetaSpec& spec, char path, int j);

Graph make_path(int n_vertices);
Graph make_cycle(int n_vertices);

}  // namespace qegraph

#endif  // QEGRAPH_GRAPH_H_
