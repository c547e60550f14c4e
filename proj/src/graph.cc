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

#include "qegraph/graph.h"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <string>

namespace qegraph {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges,
             std::vector<std::string> labels)
    : n_(n), adjacency_(n > 0 ? n : 0), labels_(std::move(labels)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw std::invalid_argument("label count " +
                                std::to_string(labels_.size()) +
                                " does not match vertex count " +
                                std::to_string(n));
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("edge {" + std::to_string(a) + "," +
                                  std::to_string(b) + "} out of range");
    }
    if (a == b) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) +
                                "," + std::to_string(dup->v) + "}");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return false;
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> Graph::unreachable_pair() const {
  std::vector<char> seen(n_, 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < n_; ++v) {
    if (!seen[v]) return std::pair{Vertex{0}, v};
  }
  return std::nullopt;
}

bool Graph::is_connected() const { return !unreachable_pair().has_value(); }

bool Graph::is_bipartite() const {
  std::vector<int> color(n_, -1);
  for (Vertex s = 0; s < n_; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : adjacency_[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Graph::is_tree() const {
  return num_edges() == n_ - 1 && is_connected();
}

void ThetaSpec::validate() const {
  if (alpha < 1 || beta < 1 || gamma < 1) {
    throw std::invalid_argument("theta path lengths must be positive");
  }
  const int ones = (alpha == 1) + (beta == 1) + (gamma == 1);
  if (ones > 1) {
    throw std::invalid_argument(
        "at most one theta path length may equal 1 (got " +
        std::to_string(alpha) + "," + std::to_string(beta) + "," +
        std::to_string(gamma) + ")");
  }
}

ThetaSpec ThetaSpec::normalized() const {
  std::array<int, 3> v{alpha, beta, gamma};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

Vertex theta_vertex(const ThetaSpec& spec, char path, int j) {
  int length = 0;
  int offset = 2;
  switch (path) {
    case 'x':
      length = spec.alpha;
      break;
    case 'y':
      length = spec.beta;
      offset += spec.alpha - 1;
      break;
    case 'z':
      length = spec.gamma;
      offset += spec.alpha - 1 + spec.beta - 1;
      break;
    default:
      throw std::invalid_argument(std::string("unknown theta path '") + path +
                                  "'");
  }
  if (j < 0 || j > length) {
    throw std::out_of_range(std::string(1, path) + "_" + std::to_string(j) +
                            " outside path of length " +
                            std::to_string(length));
  }
  if (j == 0) return 0;
  if (j == length) return 1;
  return offset + j - 1;
}

Graph make_theta(const ThetaSpec& spec) {
  spec.validate();
  const int n = spec.num_vertices();
  std::vector<std::string> labels(n);
  labels[0] = "x_0";
  labels[1] = "x_" + std::to_string(spec.alpha);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(spec.num_edges());
  for (auto [name, length] : {std::pair{'x', spec.alpha},
                              std::pair{'y', spec.beta},
                              std::pair{'z', spec.gamma}}) {
    for (int j = 1; j <= length; ++j) {
      const Vertex v = theta_vertex(spec, name, j);
      edges.emplace_back(theta_vertex(spec, name, j - 1), v);
      if (j < length) labels[v] = std::string(1, name) + "_" + std::to_string(j);
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

Graph make_path(int n_vertices) {
  if (n_vertices < 1) {
    throw std::invalid_argument("path needs at least 1 vertex");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i < n_vertices; ++i) edges.emplace_back(i - 1, i);
  return Graph(n_vertices, std::move(edges));
}

Graph make_cycle(int n_vertices) {
  if (n_vertices < 3) {
    throw std::invalid_argument("cycle needs at least 3 vertices (got " +
                                std::to_string(n_vertices) + ")");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n_vertices; ++i) {
    edges.emplace_back(i, (i + 1) % n_vertices);
  }
  return Graph(n_vertices, std::move(edges));
}

}  // namespace qegraph
