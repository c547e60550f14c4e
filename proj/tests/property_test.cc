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

// Seeded randomized properties over Erdos-Renyi graphs and the corpus.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qegraph/qe_analysis.h"
#include "support.h"

namespace qegraph {
namespace {

constexpr int kSeeds = 200;

Graph er_graph(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, 10);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  const int n = size(rng);
  return testing::random_connected_graph(n, density(rng), rng);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (const Edge& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
  return Graph(g.num_vertices(), std::move(e));
}

TEST_CASE("BFS distances match Floyd-Warshall on random graphs") {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const Graph g = er_graph(seed);
    const std::vector<int> fw = testing::floyd_warshall(g);
    const DistanceMatrix d = distance_matrix(g);
    CAPTURE(seed);
    CHECK(std::equal(fw.begin(), fw.end(), d.entries().begin()));
  }
}

TEST_CASE("Schoenberg and Winkler agree on random graphs in both modes") {
  int qe = 0;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const Graph g = er_graph(seed);
    CAPTURE(seed);
    const bool cnd_f = classify_schoenberg(g, Mode::kFloat).is_qe();
    const bool cnd_e = classify_schoenberg(g, Mode::kExact).is_qe();
    const bool psd_f = classify_winkler(g, std::nullopt, Mode::kFloat).is_qe();
    const bool psd_e = classify_winkler(g, std::nullopt, Mode::kExact).is_qe();
    CHECK(cnd_f == cnd_e);
    CHECK(psd_f == psd_e);
    CHECK(cnd_e == psd_e);
    qe += cnd_e;
  }
  CHECK(qe > 0);
  CHECK(qe < kSeeds);
}

TEST_CASE("Winkler verdict is invariant over trees and orientations") {
  std::mt19937_64 rng(2026);
  for (const auto& [name, g] : testing::corpus()) {
    CAPTURE(name);
    const DistanceMatrix d = distance_matrix(g);
    const bool expected = is_cnd(d, Mode::kExact).cnd;
    bool all_same = true;
    for (int tree = 0; tree < 10; ++tree) {
      const OrientedTree t = random_oriented_tree(g, rng);
      for (int orient = 0; orient < 10; ++orient) {
        const OrientedTree o = reorient_randomly(g, t, rng);
        all_same &= is_psd(winkler_kernel(d, o).to_sym(), Mode::kAuto).psd == expected;
      }
    }
    CHECK(all_same);
  }
}

TEST_CASE("embedding reconstruction on QE graphs") {
  std::mt19937_64 rng(8);
  for (const auto& [name, g] : testing::corpus()) {
    if (g.num_vertices() > 16) continue;
    if (!classify_schoenberg(g, Mode::kExact).is_qe()) continue;
    CAPTURE(name);
    const OrientedTree t = random_oriented_tree(g, rng);
    const Embedding e = reconstruct_embedding(g, t, winkler_kernel(g, t));
    CHECK(e.max_error <= 1e-8);
  }
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const Graph g = er_graph(seed);
    if (!classify_schoenberg(g, Mode::kExact).is_qe()) continue;
    CAPTURE(seed);
    const OrientedTree t = default_orientation_and_tree(g);
    CHECK(reconstruct_embedding(g, t, winkler_kernel(g, t)).max_error <= 1e-8);
  }
}

TEST_CASE("verdicts and QE constant are invariant under relabeling") {
  std::mt19937_64 rng(77);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = er_graph(seed);
    std::vector<Vertex> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    CAPTURE(seed);
    CHECK(classify_schoenberg(g, Mode::kExact).decision ==
          classify_schoenberg(h, Mode::kExact).decision);
    CHECK(std::abs(qec(g).value - qec(h).value) <= 1e-9);
  }
}

TEST_CASE("kernel entries are half-integers bounded by one") {
  std::mt19937_64 rng(4);
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const Graph g = er_graph(seed);
    const OrientedTree t = random_oriented_tree(g, rng);
    const KernelMatrix k = winkler_kernel(g, t);
    bool ok = true;
    for (int i = 0; i < k.m; ++i) {
      for (int j = 0; j < k.m; ++j) {
        ok &= std::abs(k.twice_at(i, j)) <= 2 && k.twice_at(i, j) == k.twice_at(j, i);
      }
      ok &= k.twice_at(i, i) == 2;
    }
    CAPTURE(seed);
    CHECK(ok);
  }
}

TEST_CASE("parallel sweep matches the serial reference") {
  const SweepReport a = classification_sweep(14, Mode::kAuto);
  const SweepReport b = reference::classification_sweep(14, Mode::kAuto);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].spec == b.rows[i].spec);
    CHECK(a.rows[i].closed_form == b.rows[i].closed_form);
    CHECK(a.rows[i].winkler == b.rows[i].winkler);
  }
  CHECK(a.disagreements == 0);
}

}  // namespace
}  // namespace qegraph
