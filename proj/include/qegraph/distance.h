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

#ifndef QEGRAPH_DISTANCE_H_
#define QEGRAPH_DISTANCE_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "qegraph/graph.h"

namespace qegraph {

// Raised by distance-based operations on a disconnected graph.
class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(Vertex a, Vertex b);
  Vertex first() const { return a_; }
  Vertex second() const { return b_; }

 private:
  Vertex a_;
  Vertex b_;
};

// All-pairs shortest path lengths of a connected graph, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> entries);

  int size() const { return n_; }
  int operator()(Vertex x, Vertex y) const { return d_[x * n_ + y]; }
  std::span<const int> row(Vertex x) const {
    return {d_.data() + static_cast<std::size_t>(x) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::span<const int> entries() const { return d_; }

  // Principal submatrix on `rows` (in that order).
  std::vector<int> submatrix(std::span<const Vertex> rows) const;
  // Sum over x,y of d(x,y) f(x) f(y).
  double quadratic_form(std::span<const double> f) const;
  long long quadratic_form(std::span<const long long> f) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int n_;
  std::vector<int> d_;
};

// One BFS per source, sources distributed over OpenMP threads.
DistanceMatrix distance_matrix(const Graph& g);

namespace reference {
// Single-threaded BFS; kept as the baseline for tests and benchmarks.
DistanceMatrix distance_matrix(const Graph& g);
}  // namespace reference

// True iff d_h(x,y) == d_g(map[x], map[y]) for every vertex pair of h.
// Throws std::invalid_argument when the map is not injective, has the wrong
// size, points outside g, or sends an edge of h to a non-edge of g.
bool is_isometrically_embedded(const Graph& h, const Graph& g,
                               std::span<const Vertex> vertex_map);

}  // namespace qegraph

#endif  // QEGRAPH_DISTANCE_H_
