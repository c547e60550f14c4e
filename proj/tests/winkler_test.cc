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

#include <doctest.h>

#include <random>

#include "qegraph/io.h"
#include "qegraph/winkler.h"
#include "support.h"

namespace qegraph {
namespace {

using E = DirectedEdge;

Vertex tv(const ThetaSpec& s, char p, int j) { return theta_vertex(s, p, j); }

TEST_CASE("default tree examples") {
  const OrientedTree p = default_orientation_and_tree(make_path(3));
  CHECK(p.tree_edges == std::vector<E>{{0, 1}, {1, 2}});
  CHECK(p.root == 0);

  const Graph c4 = make_cycle(4);
  const OrientedTree c = default_orientation_and_tree(c4);
  CHECK(c.tree_edges == std::vector<E>{{0, 1}, {0, 3}, {1, 2}});
  // Omitted edge {2,3} runs from layer 1 to layer 2.
  CHECK(c.host_orientation[*c4.edge_index(2, 3)] == E{3, 2});
  c.validate(c4);
  const Graph c3 = make_cycle(3);
  // {1,2} joins two layer-1 vertices: lower index first.
  CHECK(default_orientation_and_tree(c3).host_orientation[*c3.edge_index(1, 2)] == E{1, 2});

  const Graph t = make_theta({2, 3, 5});
  const OrientedTree tt = default_orientation_and_tree(t);
  CHECK(tt.tree_edges.size() == 8);
  CHECK(t.num_edges() - static_cast<int>(tt.tree_edges.size()) == 2);
  tt.validate(t);

  CHECK_THROWS_AS(default_orientation_and_tree(Graph(3, {{0, 1}})), DisconnectedGraphError);
}

TEST_CASE("tree validation errors") {
  const Graph c4 = make_cycle(4);
  OrientedTree t = default_orientation_and_tree(c4);
  OrientedTree short_tree = t;
  short_tree.tree_edges.pop_back();
  CHECK_THROWS_AS(short_tree.validate(c4), std::invalid_argument);

  OrientedTree cyc = t;
  cyc.tree_edges = {{0, 1}, {1, 2}, {0, 1}};
  CHECK_THROWS_AS(cyc.validate(c4), std::invalid_argument);

  OrientedTree mismatch = t;
  mismatch.tree_edges[0] = mismatch.tree_edges[0].reversed();
  CHECK_THROWS_AS(mismatch.validate(c4), std::invalid_argument);

  CHECK_THROWS_AS(oriented_tree_from_edges(c4, {{0, 2}, {0, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(oriented_tree_from_edges(c4, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(t.validate(make_cycle(5)), std::invalid_argument);

  const OrientedTree f = t.flipped(1);
  CHECK(f.tree_edges[1] == E{3, 0});
  f.validate(c4);
}

TEST_CASE("random trees are valid spanning trees") {
  std::mt19937_64 rng(3);
  for (const auto& [name, g] : testing::corpus()) {
    CAPTURE(name);
    for (int i = 0; i < 5; ++i) {
      const OrientedTree t = random_oriented_tree(g, rng);
      CHECK_NOTHROW(t.validate(g));
      CHECK_NOTHROW(reorient_randomly(g, t, rng).validate(g));
    }
  }
}

TEST_CASE("random trees on a cycle are uniform over the omitted edge") {
  const Graph c5 = make_cycle(5);
  std::mt19937_64 rng(99);
  std::vector<int> omitted(5, 0);
  const int trials = 5000;
  for (int i = 0; i < trials; ++i) {
    const OrientedTree t = random_oriented_tree(c5, rng);
    std::vector<char> used(5, 0);
    for (const E& e : t.tree_edges) used[*c5.edge_index(e.tail, e.head)] = 1;
    for (int j = 0; j < 5; ++j) omitted[j] += !used[j];
  }
  for (int count : omitted) CHECK(std::abs(count - trials / 5) < 150);
}

TEST_CASE("kernel of Theta(2,3,3) under the shipped tree") {
  const Graph g = make_theta({2, 3, 3});
  const OrientedTree t = read_tree(g, std::string(QEGRAPH_FIXTURE_DIR) + "/theta233.tree");
  const KernelMatrix k = winkler_kernel(g, t);
  const std::vector<int> expected = {2, 0, 0, 1, 0, 1,  0, 2, 1, 0, 1, 0,
                                     0, 1, 2, -1, 0, 1, 1, 0, -1, 2, 1, 0,
                                     0, 1, 0, 1, 2, -1, 1, 0, 1, 0, -1, 2};
  CHECK(k.twice == expected);
  CHECK(k(0, 3) == 0.5);
  CHECK(k.exact(2, 3) == Rational(-1, 2));
  CHECK(k == reference::winkler_kernel(distance_matrix(g), t));
}

TEST_CASE("kernel has unit diagonal on the corpus and matches the reference") {
  for (const auto& [name, g] : testing::corpus()) {
    CAPTURE(name);
    const DistanceMatrix d = distance_matrix(g);
    const OrientedTree t = default_orientation_and_tree(g);
    const KernelMatrix k = winkler_kernel(d, t);
    for (int i = 0; i < k.m; ++i) CHECK(k.twice_at(i, i) == 2);
    CHECK(k == reference::winkler_kernel(d, t));
  }
}

TEST_CASE("kernel of a tree is the identity") {
  for (int n = 1; n <= 7; ++n) {
    testing::for_each_labeled_tree(n, [&](const Graph& tree) {
      const KernelMatrix k = winkler_kernel(tree, default_orientation_and_tree(tree));
      bool identity = true;
      for (int i = 0; i < k.m; ++i) {
        for (int j = 0; j < k.m; ++j) identity &= k.twice_at(i, j) == (i == j ? 2 : 0);
      }
      CHECK(identity);
    });
  }
}

TEST_CASE("orientation flip conjugates the kernel") {
  std::mt19937_64 rng(5);
  for (const auto& [name, g] : testing::corpus()) {
    CAPTURE(name);
    const DistanceMatrix d = distance_matrix(g);
    const OrientedTree t = random_oriented_tree(g, rng);
    const KernelMatrix k = winkler_kernel(d, t);
    for (int i = 0; i < k.m; ++i) {
      const KernelMatrix f = winkler_kernel(d, t.flipped(i));
      bool ok = true;
      for (int a = 0; a < k.m; ++a) {
        for (int b = 0; b < k.m; ++b) {
          const int s = (a == i ? -1 : 1) * (b == i ? -1 : 1);
          ok &= f.twice_at(a, b) == s * k.twice_at(a, b);
        }
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("edge pair examples") {
  const ThetaSpec s144{1, 4, 4};
  const Graph g144 = make_theta(s144);
  const E b1{tv(s144, 'y', 0), tv(s144, 'y', 1)};
  const E b2{tv(s144, 'y', 1), tv(s144, 'y', 2)};
  const E b3{tv(s144, 'y', 2), tv(s144, 'y', 3)};
  const E c3{tv(s144, 'z', 2), tv(s144, 'z', 3)};
  const EdgePairValue v1 = classify_edge_pair(g144, b1, b3);
  CHECK(v1.value() == -0.5);
  CHECK(v1.case_id == 5);
  const EdgePairValue v2 = classify_edge_pair(g144, b2, c3);
  CHECK(v2.value() == 0.5);
  CHECK(v2.case_id == 6);
  CHECK(classify_edge_pair(g144, b1, b1).value() == 1);

  const ThetaSpec s145{1, 4, 5};
  const Graph g145 = make_theta(s145);
  const E c1{tv(s145, 'z', 0), tv(s145, 'z', 1)};
  const E c4{tv(s145, 'z', 3), tv(s145, 'z', 4)};
  const EdgePairValue v3 = classify_edge_pair(g145, c1, c4);
  CHECK(v3.value() == -1);
  CHECK(v3.case_id == 8);
  CHECK(classify_edge_pair(g145, c4, c1).value() == -1);
  CHECK(classify_edge_pair(g145, c1, c4.reversed()).case_id == 9);

  CHECK_THROWS_AS(classify_edge_pair(g144, E{2, 5}, b1), std::invalid_argument);
}

TEST_CASE("edge pair classifier rejects non-edges with the six distances") {
  const Graph p = make_path(5);
  const DistanceMatrix d = distance_matrix(p);
  try {
    classify_edge_pair(d, E{0, 2}, E{3, 4});
    FAIL("expected EdgePairError");
  } catch (const EdgePairError& e) {
    CHECK(e.distances() == std::vector<int>{3, 1, 4, 2, 2, 1});
  }
}

TEST_CASE("edge pair classification matches the kernel formula exhaustively") {
  std::vector<int> seen(10, 0);
  for (const auto& [name, g] : testing::corpus()) {
    if (g.num_vertices() > 12) continue;
    CAPTURE(name);
    const DistanceMatrix d = distance_matrix(g);
    std::vector<E> directed;
    for (const Edge& e : g.edges()) {
      directed.push_back({e.u, e.v});
      directed.push_back({e.v, e.u});
    }
    bool ok = true;
    for (const E& e : directed) {
      for (const E& f : directed) {
        const EdgePairValue v = classify_edge_pair(d, e, f);
        ok &= v.twice_value == twice_edge_inner_product(d, e, f);
        ++seen[v.case_id];
      }
    }
    CHECK(ok);
  }
  for (int c = 1; c <= 9; ++c) {
    CAPTURE(c);
    CHECK(seen[c] > 0);
  }
}

TEST_CASE("block kernel examples") {
  const KernelMatrix e = build_theta1_block_kernel(2, 2, Parity::kEven);
  CHECK(e.m == 7);
  // A occupies rows b_1, b_2 and columns b_3, b_4.
  CHECK(e(0, 2) == -0.5);
  CHECK(e(0, 3) == -0.5);
  CHECK(e(1, 3) == -0.5);
  CHECK(e(1, 2) == 0);
  // C: rows b_1, b_2 against c_3; only c_{2,1} is set.
  CHECK(e(1, 6) == 0.5);
  CHECK(e(0, 6) == 0);

  const KernelMatrix o = build_theta1_block_kernel(2, 2, Parity::kOdd);
  CHECK(o.m == 8);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double want = i == j ? 1 : (std::abs(i - j) == 2 ? -1 : 0);
      CHECK(o(4 + i, 4 + j) == want);
    }
  }
  CHECK_THROWS_AS(build_theta1_block_kernel(1, 2, Parity::kEven), std::invalid_argument);
  CHECK_THROWS_AS(build_theta1_block_kernel(3, 2, Parity::kEven), std::invalid_argument);
  CHECK_THROWS_AS(build_theta1_block_kernel(2, 1, Parity::kOdd), std::invalid_argument);
  CHECK_NOTHROW(build_theta1_block_kernel(4, 2, Parity::kOdd));
  CHECK_THROWS_AS(theta1_block_fixture(3, 2, Parity::kEven), std::invalid_argument);
}

TEST_CASE("block kernels agree with the graph kernel and pass Gershgorin") {
  for (Parity parity : {Parity::kEven, Parity::kOdd}) {
    for (int k = 2; k <= 6; ++k) {
      for (int l = (parity == Parity::kEven ? k : 2); l <= 6; ++l) {
        CAPTURE(k);
        CAPTURE(l);
        const Theta1BlockFixture f = theta1_block_fixture(k, l, parity);
        const KernelMatrix built = build_theta1_block_kernel(k, l, parity);
        CHECK(winkler_kernel(f.graph, f.tree) == built);
        CHECK(passes_unit_gershgorin(built));
        const SpectrumResult s = eigen_sym(built.to_sym());
        CHECK(s.eigenvalues.back() >= -1e-9);
        CHECK(s.eigenvalues.front() <= 2 + 1e-9);
      }
    }
  }
  KernelMatrix heavy = build_theta1_block_kernel(2, 2, Parity::kEven);
  heavy.twice[1] = heavy.twice[heavy.m] = 2;
  CHECK_FALSE(passes_unit_gershgorin(heavy));
}

TEST_CASE("zeta path signs") {
  const OrientedTree p = default_orientation_and_tree(make_path(3));
  CHECK(zeta_path_signs(p, 1, 1).empty());
  const auto back = zeta_path_signs(p, 2, 0);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == std::pair{E{1, 2}, -1});
  CHECK(back[1] == std::pair{E{0, 1}, -1});

  const OrientedTree c = default_orientation_and_tree(make_cycle(4));
  const auto path = zeta_path_signs(c, 2, 3);
  using P = std::pair<E, int>;
  CHECK(path == std::vector<P>{{E{1, 2}, -1}, {E{0, 1}, -1}, {E{0, 3}, 1}});
  CHECK_THROWS_AS(zeta_path_signs(c, 0, 9), std::invalid_argument);
}

TEST_CASE("embedding reconstruction examples") {
  const Graph p3 = make_path(3);
  const OrientedTree tp = default_orientation_and_tree(p3);
  const Embedding ep = reconstruct_embedding(p3, tp, winkler_kernel(p3, tp));
  double d02 = 0.0;
  for (int c = 0; c < 2; ++c) d02 += std::pow(ep.vectors[0][c] - ep.vectors[2][c], 2);
  CHECK(d02 == doctest::Approx(2));
  CHECK(ep.vectors[0] == std::vector<double>{0, 0});

  for (const Graph& g : {make_theta({2, 3, 5}), make_cycle(4)}) {
    const OrientedTree t = default_orientation_and_tree(g);
    const Embedding e = reconstruct_embedding(g, t, winkler_kernel(g, t));
    CHECK(e.max_error <= 1e-8);
  }

  const Graph bad = make_theta({2, 3, 9});
  const OrientedTree tb = default_orientation_and_tree(bad);
  CHECK_THROWS_AS(reconstruct_embedding(bad, tb, winkler_kernel(bad, tb)), EmbeddingError);
  CHECK_THROWS_AS(reconstruct_embedding(p3, tp, KernelMatrix{1, {2}}), std::invalid_argument);
}

TEST_CASE("embedding from a random root and tree") {
  std::mt19937_64 rng(17);
  const Graph g = make_theta({1, 4, 6});
  for (int i = 0; i < 10; ++i) {
    const OrientedTree t = random_oriented_tree(g, rng);
    const Embedding e = reconstruct_embedding(g, t, winkler_kernel(g, t));
    CHECK(e.max_error <= 1e-8);
    for (double x : e.vectors[t.root]) CHECK(x == 0);
  }
}

}  // namespace
}  // namespace qegraph
