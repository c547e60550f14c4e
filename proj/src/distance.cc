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

#include "qegraph/distance.h"

#include <string>
#include <vector>

namespace qegraph {
namespace {

// Distances from `source` into out[0..n); -1 marks unreachable vertices.
void bfs_row(const Graph& g, Vertex source, int* out,
             std::vector<Vertex>& queue) {
  const int n = g.num_vertices();
  std::fill(out, out + n, -1);
  queue.clear();
  queue.push_back(source);
  out[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (out[w] < 0) {
        out[w] = out[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

DisconnectedGraphError::DisconnectedGraphError(Vertex a, Vertex b)
    : std::runtime_error("graph is disconnected: no path between vertices " +
                         std::to_string(a) + " and " + std::to_string(b)),
      a_(a),
      b_(b) {}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries)
    : n_(n), d_(std::move(entries)) {
  if (n < 1 || d_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("distance matrix size mismatch");
  }
}

std::vector<int> DistanceMatrix::submatrix(std::span<const Vertex> rows) const {
  const std::size_t m = rows.size();
  std::vector<int> out(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out[i * m + j] = (*this)(rows[i], rows[j]);
    }
  }
  return out;
}

double DistanceMatrix::quadratic_form(std::span<const double> f) const {
  double total = 0.0;
  for (int x = 0; x < n_; ++x) {
    double row_sum = 0.0;
    for (int y = 0; y < n_; ++y) row_sum += (*this)(x, y) * f[y];
    total += f[x] * row_sum;
  }
  return total;
}

long long DistanceMatrix::quadratic_form(std::span<const long long> f) const {
  long long total = 0;
  for (int x = 0; x < n_; ++x) {
    long long row_sum = 0;
    for (int y = 0; y < n_; ++y) row_sum += (*this)(x, y) * f[y];
    total += f[x] * row_sum;
  }
  return total;
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> d(static_cast<std::size_t>(n) * n);
  int bad_source = -1;
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(static)
    for (int s = 0; s < n; ++s) {
      bfs_row(g, s, d.data() + static_cast<std::size_t>(s) * n, queue);
    }
  }
  for (int y = 0; y < n && bad_source < 0; ++y) {
    if (d[y] < 0) bad_source = y;
  }
  if (bad_source >= 0) throw DisconnectedGraphError(0, bad_source);
  return DistanceMatrix(n, std::move(d));
}

namespace reference {

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> d(static_cast<std::size_t>(n) * n);
  std::vector<Vertex> queue;
  for (int s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<std::size_t>(s) * n;
    bfs_row(g, s, row, queue);
    for (int y = 0; y < n; ++y) {
      if (row[y] < 0) throw DisconnectedGraphError(s, y);
    }
  }
  return DistanceMatrix(n, std::move(d));
}

}  // namespace reference

bool is_isometrically_embedded(const Graph& h, const Graph& g,
                               std::span<const Vertex> vertex_map) {
  const int nh = h.num_vertices();
  if (static_cast<int>(vertex_map.size()) != nh) {
    throw std::invalid_argument("vertex map has " +
                                std::to_string(vertex_map.size()) +
                                " entries, expected " + std::to_string(nh));
  }
  std::vector<char> used(g.num_vertices(), 0);
  for (Vertex image : vertex_map) {
    if (image < 0 || image >= g.num_vertices()) {
      throw std::invalid_argument("vertex map image " + std::to_string(image) +
                                  " out of range");
    }
    if (used[image]) {
      throw std::invalid_argument("vertex map is not injective at " +
                                  std::to_string(image));
    }
    used[image] = 1;
  }
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(vertex_map[e.u], vertex_map[e.v])) {
      throw std::invalid_argument(
          "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
          "} maps to non-edge {" + std::to_string(vertex_map[e.u]) + "," +
          std::to_string(vertex_map[e.v]) + "}");
    }
  }
  const DistanceMatrix dh = distance_matrix(h);
  const DistanceMatrix dg = distance_matrix(g);
  for (int x = 0; x < nh; ++x) {
    for (int y = x + 1; y < nh; ++y) {
      if (dh(x, y) != dg(vertex_map[x], vertex_map[y])) return false;
    }
  }
  return true;
}

}  // namespace qegraph
