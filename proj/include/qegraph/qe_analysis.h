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

#ifndef QEGRAPH_QE_ANALYSIS_H_
#define QEGRAPH_QE_ANALYSIS_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qegraph/distance.h"
#include "qegraph/graph.h"
#include "qegraph/spectra.h"
#include "qegraph/winkler.h"

namespace qegraph {

enum class QeDecision { kQe, kNonQe };
enum class Method { kClosedForm, kSchoenberg, kWinkler };

std::string_view to_string(QeDecision decision);
std::string_view to_string(Method method);
// "closed_form", "schoenberg" or "winkler".
Method parse_method(std::string_view text);

struct QeVerdict {
  QeDecision decision = QeDecision::kNonQe;
  Method method = Method::kSchoenberg;
  // Closed form: which branch of the classification fired.
  std::string rule;
  std::optional<CndVerdict> cnd;
  std::optional<PsdVerdict> psd;
  std::optional<OrientedTree> tree;

  bool is_qe() const { return decision == QeDecision::kQe; }
};

// QE iff alpha = 1, or (alpha, beta) = (2, 3) with gamma in {3, 5, 7}, after
// sorting the three lengths.
QeVerdict classify_theta_closed_form(const ThetaSpec& spec);

// QE iff the distance matrix is conditionally negative definite.
QeVerdict classify_schoenberg(const Graph& g, Mode mode,
                              const Tolerances& tol = Tolerances{});

// QE iff the tree-edge kernel is PSD; `tree` defaults to
// default_orientation_and_tree(g).
QeVerdict classify_winkler(const Graph& g,
                           const std::optional<OrientedTree>& tree, Mode mode,
                           const Tolerances& tol = Tolerances{});

struct QecValue {
  double value = 0.0;
  std::vector<double> maximizer;
};

// QE constant: max <f, D f> over unit f orthogonal to the ones vector.
// Throws std::invalid_argument on a single-vertex graph.
QecValue qec(const Graph& g);
QecValue qec(const DistanceMatrix& d);

// -1 / (4 cos^2(pi / m)): the QE constant of an odd cycle C_m.
double odd_cycle_qec(int m);

// Non-QE witness for Theta(2, 3, 2k+7): an integer vector g on 13 vertices
// whose quadratic form with the distance submatrix is positive.
struct WitnessSpec {
  int k = 1;
  ThetaSpec theta;
  // Vertex labels in row order of the submatrix.
  std::vector<std::string> labels;
  std::vector<Vertex> vertices;
  std::array<long long, 13> g{};
};

inline constexpr std::array<long long, 13> kWitnessVector = {
    236, 243, -546, 243, -206, -206, 236, 119, 234, -353, -353, 234, 119};

// The k-independent part of the witness submatrix; the full submatrix adds k
// to every entry coupling the first seven rows with the last six.
// clang-format off
inline constexpr std::array<int, 169> kWitnessOffset = {
    0, 3, 2, 1, 3, 2, 4, 4, 4, 3, 2, 1, 0,
    3, 0, 1, 2, 1, 2, 1, 1, 2, 3, 4, 4, 3,
    2, 1, 0, 1, 2, 2, 2, 2, 3, 4, 4, 3, 2,
    1, 2, 1, 0, 2, 1, 3, 3, 4, 4, 3, 2, 1,
    3, 1, 2, 2, 0, 1, 2, 2, 3, 4, 5, 4, 3,
    2, 2, 2, 1, 1, 0, 3, 3, 4, 5, 4, 3, 2,
    4, 1, 2, 3, 2, 3, 0, 0, 1, 2, 3, 4, 4,
    4, 1, 2, 3, 2, 3, 0, 0, 1, 2, 3, 4, 5,
    4, 2, 3, 4, 3, 4, 1, 1, 0, 1, 2, 3, 4,
    3, 3, 4, 4, 4, 5, 2, 2, 1, 0, 1, 2, 3,
    2, 4, 4, 3, 5, 4, 3, 3, 2, 1, 0, 1, 2,
    1, 4, 3, 2, 4, 3, 4, 4, 3, 2, 1, 0, 1,
    0, 3, 2, 1, 3, 2, 4, 5, 4, 3, 2, 1, 0};
// clang-format on

inline constexpr long long kWitnessValue = 16272;

// Throws std::invalid_argument for k < 1.
WitnessSpec witness_spec(int k);

// 1 where row and column fall on different sides of the 7/6 split.
std::array<int, 169> witness_block_pattern();

struct WitnessEvaluation {
  int k = 1;
  // 13 x 13 distance submatrix in label order.
  std::vector<int> submatrix;
  long long value = 0;
  // g extended by zeros to every vertex, against the full distance matrix.
  long long full_value = 0;
  // submatrix == offset + k * witness_block_pattern().
  bool matches_offset = false;
};

WitnessEvaluation evaluate_witness(int k, std::span<const int> offset,
                                   std::span<const long long> g);
// Uses kWitnessOffset and kWitnessVector.
long long witness_quadratic_form(int k);

struct SweepRow {
  ThetaSpec spec;
  int n = 0;
  QeDecision closed_form = QeDecision::kNonQe;
  QeDecision schoenberg = QeDecision::kNonQe;
  QeDecision winkler = QeDecision::kNonQe;
  double qec = 0.0;

  bool agree() const { return closed_form == schoenberg && schoenberg == winkler; }
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int disagreements = 0;
  int qe_count = 0;
  int non_qe_count = 0;
};

// Sorted theta specs (alpha <= beta <= gamma, beta >= 2) with at most
// max_vertices vertices, in lexicographic order.
std::vector<ThetaSpec> theta_specs_up_to(int max_vertices);

// Rows are computed with OpenMP; output order matches theta_specs_up_to.
// Throws std::invalid_argument for max_vertices < 5.
SweepReport classification_sweep(int max_vertices, Mode mode,
                                 const Tolerances& tol = Tolerances{});

namespace reference {
SweepReport classification_sweep(int max_vertices, Mode mode,
                                 const Tolerances& tol = Tolerances{});
}  // namespace reference

}  // namespace qegraph

#endif  // QEGRAPH_QE_ANALYSIS_H_
