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

// Spanning-tree kernel machinery.
//
// For a connected graph G on n vertices, an orientation of G and a spanning
// tree T with oriented edges e_i = (a_i, b_i), the tree-edge kernel is
//
//   K(e_i, e_j) = 1/2 (d(a_i,b_j) - d(a_i,a_j) - d(b_i,b_j) + d(b_i,a_j)).
//
// G admits a quadratic embedding iff K is positive semidefinite, for any
// choice of tree and orientation. When K = L L^T, placing the root at the
// origin and stepping phi(b) = phi(a) + L_i along every tree edge yields the
// embedding explicitly.

#ifndef QEGRAPH_WINKLER_H_
#define QEGRAPH_WINKLER_H_

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qegraph/distance.h"
#include "qegraph/graph.h"
#include "qegraph/rational.h"
#include "qegraph/spectra.h"

namespace qegraph {

// Directed edge tail -> head, i.e. (a, b).
struct DirectedEdge {
  Vertex tail = 0;
  Vertex head = 0;

  DirectedEdge reversed() const { return {head, tail}; }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// Spanning tree of a host graph together with an orientation of every host
// edge. Tree edge directions always agree with host_orientation.
struct OrientedTree {
  int num_vertices = 0;
  // Kernel rows/columns follow this order.
  std::vector<DirectedEdge> tree_edges;
  // host_orientation[i] orients g.edges()[i].
  std::vector<DirectedEdge> host_orientation;
  Vertex root = 0;

  // Throws std::invalid_argument when the tree is not a spanning tree of g
  // or the directions disagree.
  void validate(const Graph& g) const;

  // Copy with tree edge i (and its host edge) reversed.
  OrientedTree flipped(int i) const;
};

// Uses `edges` (order kept) as the tree; non-tree host edges are oriented from
// the lower to the higher index. Validates against g.
OrientedTree oriented_tree_from_edges(const Graph& g,
                                      std::vector<DirectedEdge> edges,
                                      Vertex root = 0);

// BFS from vertex 0. Host edges point from the lower BFS layer to the higher
// one, ties from the lower index to the higher. Tree edges are listed in
// discovery order.
OrientedTree default_orientation_and_tree(const Graph& g);

// Uniform spanning tree (Wilson's algorithm) with every host edge oriented by
// a fair coin.
OrientedTree random_oriented_tree(const Graph& g, std::mt19937_64& rng);

// Same tree, fresh coin flips for every host edge direction.
OrientedTree reorient_randomly(const Graph& g, const OrientedTree& t,
                               std::mt19937_64& rng);

// Symmetric kernel over tree edges. Entries are half-integers; `twice` holds
// 2K exactly.
struct KernelMatrix {
  int m = 0;
  std::vector<int> twice;

  int twice_at(int i, int j) const { return twice[i * m + j]; }
  double operator()(int i, int j) const { return 0.5 * twice_at(i, j); }
  Rational exact(int i, int j) const { return Rational(twice_at(i, j), 2); }
  SymMatrix to_sym() const;

  friend bool operator==(const KernelMatrix&, const KernelMatrix&) = default;
};

// 2K(e, e') for two directed edges; the raw four-distance combination.
int twice_edge_inner_product(const DistanceMatrix& d, DirectedEdge e,
                             DirectedEdge f);

// Rows filled in parallel (OpenMP).
KernelMatrix winkler_kernel(const DistanceMatrix& d, const OrientedTree& t);
KernelMatrix winkler_kernel(const Graph& g, const OrientedTree& t);

namespace reference {
KernelMatrix winkler_kernel(const DistanceMatrix& d, const OrientedTree& t);
}  // namespace reference

// Value of <e, e'> together with the distance condition that determines it.
// case_id follows the nine-way split on
//   p = d(a,a') - d(b,a'),  q = d(a,b') - d(b,b')  (each in {-1,0,1}):
//   1: p<0,q<0   2: p>0,q>0   3: p=0,q=0          -> 0
//   4: p=0,q<0   5: q=0,p>0                        -> -1/2
//   6: q=0,p<0   7: p=0,q>0                        -> +1/2
//   8: p>0,q<0                                     -> -1
//   9: p<0,q>0                                     -> +1
struct EdgePairValue {
  int twice_value = 0;
  int case_id = 0;

  double value() const { return 0.5 * twice_value; }
};

class EdgePairError : public std::runtime_error {
 public:
  // distances: d(a,a'), d(b,a'), d(a,b'), d(b,b'), d(a,b), d(a',b').
  explicit EdgePairError(std::vector<int> distances);
  const std::vector<int>& distances() const { return distances_; }

 private:
  std::vector<int> distances_;
};

EdgePairValue classify_edge_pair(const DistanceMatrix& d, DirectedEdge e,
                                 DirectedEdge f);
// Also checks that both edges exist in g.
EdgePairValue classify_edge_pair(const Graph& g, DirectedEdge e,
                                 DirectedEdge f);

enum class Parity { kEven, kOdd };

// Closed-form kernel of Theta(1, 2k, 2l) (kEven, dimension 2k+2l-1) or
// Theta(1, 2k, 2l+1) (kOdd, dimension 2k+2l) assembled from the block
// formulas, without touching a graph.
// Even: k >= 2 and l >= k. Odd: k >= 2 and l >= 2.
KernelMatrix build_theta1_block_kernel(int k, int l, Parity parity);

// The graph and oriented tree the block kernel corresponds to. Path edges
// b_i = (y_{i-1}, y_i) and c_j = (z_{j-1}, z_j) point away from x_0 and the
// chord is (x_0, x_1). The tree drops the chord and c_{2l} (even) or c_{l+1}
// (odd); its edges are b_1..b_2k followed by the remaining c_j ascending.
struct Theta1BlockFixture {
  ThetaSpec spec;
  Graph graph;
  OrientedTree tree;
};
Theta1BlockFixture theta1_block_fixture(int k, int l, Parity parity);

// Gershgorin row test: unit diagonal and off-diagonal absolute row sums <= 1.
bool passes_unit_gershgorin(const KernelMatrix& k);

// Edges of the tree path from x to y with sign +1 when walked tail -> head.
std::vector<std::pair<DirectedEdge, int>> zeta_path_signs(
    const OrientedTree& t, Vertex x, Vertex y);

struct Embedding {
  // vectors[v] = phi(v); all of dimension tree_edges.size().
  std::vector<std::vector<double>> vectors;
  Vertex root = 0;
  // max over pairs of | ||phi(x)-phi(y)||^2 - d(x,y) |
  double max_error = 0.0;
};

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kEmbeddingTolerance = 1e-8;

// Factors K = L L^T by eigendecomposition (eigenvalues above -clamp are
// clamped to 0, anything lower throws EmbeddingError) and walks the tree from
// t.root. Throws EmbeddingError if the result misses a distance by more than
// kEmbeddingTolerance.
Embedding reconstruct_embedding(const Graph& g, const OrientedTree& t,
                                const KernelMatrix& kernel,
                                double clamp = 1e-9);

}  // namespace qegraph

#endif  // QEGRAPH_WINKLER_H_
