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

#include "qegraph/winkler.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace qegraph {
namespace {

std::string edge_str(DirectedEdge e) {
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Tree adjacency: for each vertex, (neighbor, tree edge index).
std::vector<std::vector<std::pair<Vertex, int>>> tree_adjacency(
    const OrientedTree& t) {
  std::vector<std::vector<std::pair<Vertex, int>>> adj(t.num_vertices);
  for (int i = 0; i < static_cast<int>(t.tree_edges.size()); ++i) {
    const auto [a, b] = t.tree_edges[i];
    adj[a].emplace_back(b, i);
    adj[b].emplace_back(a, i);
  }
  return adj;
}

}  // namespace

void OrientedTree::validate(const Graph& g) const {
  const int n = g.num_vertices();
  if (num_vertices != n) {
    throw std::invalid_argument("tree is for " + std::to_string(num_vertices) +
                                " vertices, graph has " + std::to_string(n));
  }
  if (static_cast<int>(tree_edges.size()) != n - 1) {
    throw std::invalid_argument("spanning tree needs " + std::to_string(n - 1) +
                                " edges, got " +
                                std::to_string(tree_edges.size()));
  }
  if (static_cast<int>(host_orientation.size()) != g.num_edges()) {
    throw std::invalid_argument("orientation must cover every host edge");
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge e = g.edges()[i];
    const DirectedEdge o = host_orientation[i];
    if (!(o == DirectedEdge{e.u, e.v} || o == DirectedEdge{e.v, e.u})) {
      throw std::invalid_argument("orientation entry " + std::to_string(i) +
                                  " does not match host edge");
    }
  }
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const DirectedEdge& e : tree_edges) {
    const auto idx = g.edge_index(e.tail, e.head);
    if (!idx) {
      throw std::invalid_argument("tree edge " + edge_str(e) +
                                  " is not an edge of the graph");
    }
    if (!(host_orientation[*idx] == e)) {
      throw std::invalid_argument("tree edge " + edge_str(e) +
                                  " disagrees with the host orientation");
    }
    const int ra = find_root(parent, e.tail);
    const int rb = find_root(parent, e.head);
    if (ra == rb) {
      throw std::invalid_argument("tree edges contain a cycle at " +
                                  edge_str(e));
    }
    parent[ra] = rb;
  }
}

OrientedTree OrientedTree::flipped(int i) const {
  OrientedTree out = *this;
  const DirectedEdge old = out.tree_edges.at(i);
  out.tree_edges[i] = old.reversed();
  for (DirectedEdge& o : out.host_orientation) {
    if (o == old) {
      o = old.reversed();
      break;
    }
  }
  return out;
}

OrientedTree oriented_tree_from_edges(const Graph& g,
                                      std::vector<DirectedEdge> edges,
                                      Vertex root) {
  OrientedTree t;
  t.num_vertices = g.num_vertices();
  t.root = root;
  t.host_orientation.reserve(g.num_edges());
  for (const Edge& e : g.edges()) t.host_orientation.push_back({e.u, e.v});
  for (const DirectedEdge& e : edges) {
    const auto idx = g.edge_index(e.tail, e.head);
    if (!idx) {
      throw std::invalid_argument("tree edge " + edge_str(e) +
                                  " is not an edge of the graph");
    }
    t.host_orientation[*idx] = e;
  }
  t.tree_edges = std::move(edges);
  t.validate(g);
  return t;
}

OrientedTree default_orientation_and_tree(const Graph& g) {
  if (auto bad = g.unreachable_pair()) {
    throw DisconnectedGraphError(bad->first, bad->second);
  }
  const int n = g.num_vertices();
  std::vector<int> layer(n, -1);
  std::vector<Vertex> queue{0};
  layer[0] = 0;
  OrientedTree t;
  t.num_vertices = n;
  t.root = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (layer[w] < 0) {
        layer[w] = layer[u] + 1;
        queue.push_back(w);
        t.tree_edges.push_back({u, w});
      }
    }
  }
  for (const Edge& e : g.edges()) {
    // Edges only join equal or adjacent layers; equal layers go low -> high.
    if (layer[e.v] < layer[e.u]) {
      t.host_orientation.push_back({e.v, e.u});
    } else {
      t.host_orientation.push_back({e.u, e.v});
    }
  }
  return t;
}

OrientedTree random_oriented_tree(const Graph& g, std::mt19937_64& rng) {
  if (auto bad = g.unreachable_pair()) {
    throw DisconnectedGraphError(bad->first, bad->second);
  }
  const int n = g.num_vertices();
  std::uniform_int_distribution<int> pick_vertex(0, n - 1);
  const Vertex root = pick_vertex(rng);
  std::vector<char> in_tree(n, 0);
  std::vector<Vertex> next(n, -1);
  in_tree[root] = 1;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::pair<Vertex, Vertex>> undirected;
  for (Vertex start : order) {
    // Loop-erased random walk until the current tree is hit.
    Vertex u = start;
    while (!in_tree[u]) {
      const auto nb = g.neighbors(u);
      std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
      next[u] = nb[pick(rng)];
      u = next[u];
    }
    for (u = start; !in_tree[u]; u = next[u]) {
      in_tree[u] = 1;
      undirected.emplace_back(u, next[u]);
    }
  }

  OrientedTree t;
  t.num_vertices = n;
  t.root = root;
  std::bernoulli_distribution coin(0.5);
  for (const Edge& e : g.edges()) {
    t.host_orientation.push_back(coin(rng) ? DirectedEdge{e.u, e.v}
                                           : DirectedEdge{e.v, e.u});
  }
  for (auto [a, b] : undirected) {
    t.tree_edges.push_back(t.host_orientation[*g.edge_index(a, b)]);
  }
  return t;
}

OrientedTree reorient_randomly(const Graph& g, const OrientedTree& t,
                               std::mt19937_64& rng) {
  OrientedTree out = t;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge e = g.edges()[i];
    out.host_orientation[i] =
        coin(rng) ? DirectedEdge{e.u, e.v} : DirectedEdge{e.v, e.u};
  }
  for (DirectedEdge& te : out.tree_edges) {
    te = out.host_orientation[*g.edge_index(te.tail, te.head)];
  }
  return out;
}

SymMatrix KernelMatrix::to_sym() const {
  std::vector<double> e(twice.size());
  for (std::size_t i = 0; i < twice.size(); ++i) e[i] = 0.5 * twice[i];
  return SymMatrix(m, std::move(e));
}

int twice_edge_inner_product(const DistanceMatrix& d, DirectedEdge e,
                             DirectedEdge f) {
  return d(e.tail, f.head) - d(e.tail, f.tail) - d(e.head, f.head) +
         d(e.head, f.tail);
}

KernelMatrix winkler_kernel(const DistanceMatrix& d, const OrientedTree& t) {
  const int m = static_cast<int>(t.tree_edges.size());
  KernelMatrix k;
  k.m = m;
  k.twice.assign(static_cast<std::size_t>(m) * m, 0);
  const auto& edges = t.tree_edges;
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const int v = twice_edge_inner_product(d, edges[i], edges[j]);
      k.twice[i * m + j] = v;
      k.twice[j * m + i] = v;
    }
  }
  return k;
}

KernelMatrix winkler_kernel(const Graph& g, const OrientedTree& t) {
  t.validate(g);
  return winkler_kernel(distance_matrix(g), t);
}

namespace reference {

KernelMatrix winkler_kernel(const DistanceMatrix& d, const OrientedTree& t) {
  const int m = static_cast<int>(t.tree_edges.size());
  KernelMatrix k;
  k.m = m;
  k.twice.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      k.twice[i * m + j] =
          twice_edge_inner_product(d, t.tree_edges[i], t.tree_edges[j]);
    }
  }
  return k;
}

}  // namespace reference

EdgePairError::EdgePairError(std::vector<int> distances)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "edge pair matches no case; d(a,a')=" << distances[0]
           << " d(b,a')=" << distances[1] << " d(a,b')=" << distances[2]
           << " d(b,b')=" << distances[3] << " d(a,b)=" << distances[4]
           << " d(a',b')=" << distances[5];
        return os.str();
      }()),
      distances_(std::move(distances)) {}

EdgePairValue classify_edge_pair(const DistanceMatrix& d, DirectedEdge e,
                                 DirectedEdge f) {
  const auto [a, b] = e;
  const auto [a2, b2] = f;
  const int p = d(a, a2) - d(b, a2);
  const int q = d(a, b2) - d(b, b2);
  int case_id = 0;
  if (p < 0 && q < 0) {
    case_id = 1;
  } else if (p > 0 && q > 0) {
    case_id = 2;
  } else if (p == 0 && q == 0) {
    case_id = 3;
  } else if (p == 0 && q < 0) {
    case_id = 4;
  } else if (q == 0 && p > 0) {
    case_id = 5;
  } else if (q == 0 && p < 0) {
    case_id = 6;
  } else if (p == 0 && q > 0) {
    case_id = 7;
  } else if (p > 0 && q < 0) {
    case_id = 8;
  } else {
    case_id = 9;
  }
  if (std::abs(p) > 1 || std::abs(q) > 1) {
    throw EdgePairError({d(a, a2), d(b, a2), d(a, b2), d(b, b2), d(a, b),
                         d(a2, b2)});
  }
  static constexpr int kTwiceValue[] = {0, 0, 0, 0, -1, -1, 1, 1, -2, 2};
  EdgePairValue out{kTwiceValue[case_id], case_id};
  if (out.twice_value != q - p) {
    throw EdgePairError({d(a, a2), d(b, a2), d(a, b2), d(b, b2), d(a, b),
                         d(a2, b2)});
  }
  return out;
}

EdgePairValue classify_edge_pair(const Graph& g, DirectedEdge e,
                                 DirectedEdge f) {
  for (DirectedEdge x : {e, f}) {
    if (!g.has_edge(x.tail, x.head)) {
      throw std::invalid_argument(edge_str(x) + " is not an edge of the graph");
    }
  }
  return classify_edge_pair(distance_matrix(g), e, f);
}

KernelMatrix build_theta1_block_kernel(int k, int l, Parity parity) {
  if (k < 2) throw std::invalid_argument("block kernel needs k >= 2");
  if (parity == Parity::kEven && l < k) {
    throw std::invalid_argument("even block kernel needs l >= k");
  }
  if (parity == Parity::kOdd && l < 2) {
    throw std::invalid_argument("odd block kernel needs l >= 2");
  }
  KernelMatrix out;
  out.m = parity == Parity::kEven ? 2 * k + 2 * l - 1 : 2 * k + 2 * l;
  const int m = out.m;
  out.twice.assign(static_cast<std::size_t>(m) * m, 0);
  auto put = [&](int r, int c, int twice_value) {
    out.twice[r * m + c] = twice_value;
    out.twice[c * m + r] = twice_value;
  };
  for (int i = 0; i < m; ++i) put(i, i, 2);

  // A (k x k) couples b_1..b_k with b_{k+1}..b_{2k}; 1-based i, j.
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (j == i || j == i + 1) put(i - 1, k + j - 1, -1);
    }
  }
  if (parity == Parity::kEven) {
    const int c_lo = 2 * k;      // c_1..c_l
    const int c_hi = 2 * k + l;  // c_{l+1}..c_{2l-1}
    // B (l x (l-1))
    for (int i = 1; i <= l; ++i) {
      for (int j = 1; j <= l - 1; ++j) {
        if (j == i || j == i + 1) put(c_lo + i - 1, c_hi + j - 1, -1);
      }
    }
    // C (k x (l-1)): c_{k,1} = 1/2
    put(k - 1, c_hi, 1);
    // D (k x l): d_{1,l} = 1/2
    put(k, c_lo + l - 1, 1);
  } else {
    const int c_lo = 2 * k;
    for (int i = 0; i < l; ++i) put(c_lo + i, c_lo + l + i, -2);
  }
  return out;
}

Theta1BlockFixture theta1_block_fixture(int k, int l, Parity parity) {
  if (k < 2 || l < 2 || (parity == Parity::kEven && l < k)) {
    throw std::invalid_argument("block fixture parameters out of range");
  }
  const ThetaSpec spec{1, 2 * k, parity == Parity::kEven ? 2 * l : 2 * l + 1};
  Graph g = make_theta(spec);
  std::vector<DirectedEdge> edges;
  for (int i = 1; i <= spec.beta; ++i) {
    edges.push_back({theta_vertex(spec, 'y', i - 1), theta_vertex(spec, 'y', i)});
  }
  const int skipped = parity == Parity::kEven ? 2 * l : l + 1;
  for (int j = 1; j <= spec.gamma; ++j) {
    if (j == skipped) continue;
    edges.push_back({theta_vertex(spec, 'z', j - 1), theta_vertex(spec, 'z', j)});
  }
  OrientedTree t = oriented_tree_from_edges(g, edges, 0);
  // Non-tree edges: chord x_0 -> x_1 and the skipped c_j along its path.
  t.host_orientation[*g.edge_index(0, 1)] = {0, 1};
  const DirectedEdge c_skipped{theta_vertex(spec, 'z', skipped - 1),
                               theta_vertex(spec, 'z', skipped)};
  t.host_orientation[*g.edge_index(c_skipped.tail, c_skipped.head)] = c_skipped;
  t.validate(g);
  return {spec, std::move(g), std::move(t)};
}

bool passes_unit_gershgorin(const KernelMatrix& k) {
  for (int i = 0; i < k.m; ++i) {
    if (k.twice_at(i, i) != 2) return false;
    int off = 0;
    for (int j = 0; j < k.m; ++j) {
      if (j != i) off += std::abs(k.twice_at(i, j));
    }
    if (off > 2) return false;
  }
  return true;
}

std::vector<std::pair<DirectedEdge, int>> zeta_path_signs(
    const OrientedTree& t, Vertex x, Vertex y) {
  const int n = t.num_vertices;
  if (x < 0 || x >= n || y < 0 || y >= n) {
    throw std::invalid_argument("vertex out of range");
  }
  if (x == y) return {};
  const auto adj = tree_adjacency(t);
  std::vector<int> via(n, -1);
  std::vector<Vertex> prev(n, -1);
  std::vector<Vertex> queue{x};
  prev[x] = x;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (auto [w, ei] : adj[u]) {
      if (prev[w] < 0) {
        prev[w] = u;
        via[w] = ei;
        queue.push_back(w);
      }
    }
  }
  if (prev[y] < 0) throw std::invalid_argument("tree does not span y");
  std::vector<std::pair<DirectedEdge, int>> path;
  for (Vertex w = y; w != x; w = prev[w]) {
    const DirectedEdge e = t.tree_edges[via[w]];
    // Walking prev[w] -> w from the x side.
    path.emplace_back(e, e.tail == prev[w] ? 1 : -1);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Embedding reconstruct_embedding(const Graph& g, const OrientedTree& t,
                                const KernelMatrix& kernel, double clamp) {
  t.validate(g);
  const int n = g.num_vertices();
  const int m = kernel.m;
  if (m != n - 1) {
    throw std::invalid_argument("kernel dimension does not match tree");
  }
  Embedding emb;
  emb.root = t.root;
  emb.vectors.assign(n, std::vector<double>(m, 0.0));
  if (m > 0) {
    const SpectrumResult spec = eigen_sym(kernel.to_sym());
    if (spec.eigenvalues.back() < -clamp) {
      throw EmbeddingError("kernel is not PSD (lambda_min = " +
                           std::to_string(spec.eigenvalues.back()) + ")");
    }
    // rows[i] = K_{e_i}: L = V sqrt(Lambda).
    std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
    for (int c = 0; c < m; ++c) {
      const double s = std::sqrt(std::max(0.0, spec.eigenvalues[c]));
      if (s == 0.0) continue;
      for (int i = 0; i < m; ++i) rows[i][c] = spec.eigenvectors[c][i] * s;
    }
    const auto adj = tree_adjacency(t);
    std::vector<char> placed(n, 0);
    std::vector<Vertex> queue{t.root};
    placed[t.root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (auto [w, ei] : adj[u]) {
        if (placed[w]) continue;
        // phi(head) - phi(tail) = K_e.
        const double sign = t.tree_edges[ei].head == w ? 1.0 : -1.0;
        for (int c = 0; c < m; ++c) {
          emb.vectors[w][c] = emb.vectors[u][c] + sign * rows[ei][c];
        }
        placed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  const DistanceMatrix d = distance_matrix(g);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      double s = 0.0;
      for (int c = 0; c < m; ++c) {
        const double diff = emb.vectors[x][c] - emb.vectors[y][c];
        s += diff * diff;
      }
      emb.max_error = std::max(emb.max_error, std::abs(s - d(x, y)));
    }
  }
  if (emb.max_error > kEmbeddingTolerance) {
    throw EmbeddingError("embedding misses a distance by " +
                         std::to_string(emb.max_error));
  }
  return emb;
}

}  // namespace qegraph
