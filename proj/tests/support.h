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

// Shared oracles and graph corpus for the test binaries.

#ifndef QEGRAPH_TESTS_SUPPORT_H_
#define QEGRAPH_TESTS_SUPPORT_H_

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qegraph/distance.h"
#include "qegraph/graph.h"

namespace qegraph::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, std::move(e));
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph(a + b, std::move(e));
}

inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(e));
}

// Erdos-Renyi G(n, p), patched into a connected graph by joining each later
// component to a random earlier vertex.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> e;
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return comp[v] == v ? v : comp[v] = find(comp[v]);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        e.emplace_back(i, j);
        comp[find(i)] = find(j);
      }
    }
  }
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) {
      std::uniform_int_distribution<int> pick(0, v - 1);
      int u = pick(rng);
      while (find(u) == find(v)) u = pick(rng);
      e.emplace_back(u, v);
      comp[find(v)] = find(u);
    }
  }
  return Graph(n, std::move(e));
}

// Small graphs (at most 16 vertices) used by the invariant checks.
inline std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= 7; ++n) out.push_back({"path" + std::to_string(n), make_path(n)});
  for (int n = 3; n <= 12; ++n) out.push_back({"cycle" + std::to_string(n), make_cycle(n)});
  for (int n = 2; n <= 6; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  out.push_back({"star4", star_graph(4)});
  out.push_back({"K2,3", complete_bipartite(2, 3)});
  out.push_back({"K3,3", complete_bipartite(3, 3)});
  out.push_back({"petersen", petersen()});
  const ThetaSpec thetas[] = {{1, 2, 2}, {1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {2, 2, 2},
                              {2, 2, 3}, {2, 3, 3}, {2, 3, 4}, {2, 3, 5}, {2, 4, 4},
                              {3, 3, 3}, {3, 3, 4}, {2, 3, 7}, {2, 3, 9}, {3, 2, 5}};
  for (const ThetaSpec& s : thetas) {
    out.push_back({"theta" + std::to_string(s.alpha) + std::to_string(s.beta) +
                       std::to_string(s.gamma),
                   make_theta(s)});
  }
  std::mt19937_64 rng(20261014);
  for (int i = 0; i < 12; ++i) {
    std::uniform_int_distribution<int> size(4, 10);
    out.push_back({"random" + std::to_string(i), random_connected_graph(size(rng), 0.35, rng)});
  }
  return out;
}

// Floyd-Warshall all-pairs distances; -1 for unreachable.
inline std::vector<int> floyd_warshall(const Graph& g) {
  const int n = g.num_vertices();
  const int inf = 1 << 28;
  std::vector<int> d(static_cast<std::size_t>(n) * n, inf);
  for (int i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const Edge& e : g.edges()) d[e.u * n + e.v] = d[e.v * n + e.u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
  }
  for (int& x : d) {
    if (x >= inf) x = -1;
  }
  return d;
}

// Tree on n vertices decoded from a Pruefer sequence of length n - 2.
inline Graph tree_from_prufer(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    e.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        e.emplace_back(u, v);
      }
    }
  }
  return Graph(n, std::move(e));
}

// Calls f on every labeled tree with n vertices (n^(n-2) of them).
inline void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& f) {
  if (n == 1) {
    f(Graph(1, {}));
    return;
  }
  if (n == 2) {
    f(Graph(2, {{0, 1}}));
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    f(tree_from_prufer(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

}  // namespace qegraph::testing

#endif  // QEGRAPH_TESTS_SUPPORT_H_
