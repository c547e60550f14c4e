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

#include "qegraph/qe_analysis.h"

#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qegraph {

std::string_view to_string(QeDecision decision) {
  return decision == QeDecision::kQe ? "QE" : "NonQE";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kClosedForm:
      return "closed_form";
    case Method::kSchoenberg:
      return "schoenberg";
    case Method::kWinkler:
      return "winkler";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "closed_form") return Method::kClosedForm;
  if (text == "schoenberg") return Method::kSchoenberg;
  if (text == "winkler") return Method::kWinkler;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

QeVerdict classify_theta_closed_form(const ThetaSpec& spec) {
  spec.validate();
  const auto [a, b, c] = spec.normalized();
  QeVerdict v;
  v.method = Method::kClosedForm;
  v.decision = QeDecision::kNonQe;
  if (a == 1) {
    v.decision = QeDecision::kQe;
    v.rule = "alpha=1";
  } else if (a == 2 && b == 3 && (c == 3 || c == 5 || c == 7)) {
    v.decision = QeDecision::kQe;
    v.rule = "alpha=2,beta=3,gamma in {3,5,7}";
  } else if (a == 2 && b == 2) {
    v.rule = "alpha=beta=2";
  } else if (a == 2 && b >= 4) {
    v.rule = "alpha=2,beta>=4";
  } else if (a >= 3) {
    v.rule = "alpha>=3";
  } else if (c % 2 == 0) {
    v.rule = "alpha=2,beta=3,gamma even";
  } else {
    v.rule = "alpha=2,beta=3,gamma odd >=9";
  }
  return v;
}

QeVerdict classify_schoenberg(const Graph& g, Mode mode,
                              const Tolerances& tol) {
  QeVerdict v;
  v.method = Method::kSchoenberg;
  v.cnd = is_cnd(distance_matrix(g), mode, tol);
  v.decision = v.cnd->cnd ? QeDecision::kQe : QeDecision::kNonQe;
  return v;
}

QeVerdict classify_winkler(const Graph& g,
                           const std::optional<OrientedTree>& tree, Mode mode,
                           const Tolerances& tol) {
  QeVerdict v;
  v.method = Method::kWinkler;
  const DistanceMatrix d = distance_matrix(g);
  if (tree) {
    tree->validate(g);
    v.tree = *tree;
  } else {
    v.tree = default_orientation_and_tree(g);
  }
  v.psd = is_psd(winkler_kernel(d, *v.tree).to_sym(), mode, tol);
  v.decision = v.psd->psd ? QeDecision::kQe : QeDecision::kNonQe;
  return v;
}

QecValue qec(const DistanceMatrix& d) {
  if (d.size() < 2) {
    throw std::invalid_argument("QE constant needs at least two vertices");
  }
  OnesComplementMax m = max_eig_on_ones_complement_with_vector(d);
  return {m.value, std::move(m.maximizer)};
}

QecValue qec(const Graph& g) {
  if (g.num_vertices() < 2) {
    throw std::invalid_argument("QE constant needs at least two vertices");
  }
  return qec(distance_matrix(g));
}

double odd_cycle_qec(int m) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("odd cycle length must be odd and >= 3");
  }
  const double c = std::cos(std::numbers::pi / m);
  return -1.0 / (4.0 * c * c);
}

WitnessSpec witness_spec(int k) {
  if (k < 1) throw std::invalid_argument("witness needs k >= 1");
  WitnessSpec w;
  w.k = k;
  w.theta = {2, 3, 2 * k + 7};
  w.g = kWitnessVector;
  const std::pair<char, int> names[13] = {
      {'z', 2 * k + 6}, {'x', 0},     {'x', 1},     {'x', 2},     {'y', 1},
      {'y', 2},         {'z', 1},     {'z', k + 1}, {'z', k + 2}, {'z', k + 3},
      {'z', k + 4},     {'z', k + 5}, {'z', k + 6}};
  for (auto [path, j] : names) {
    w.labels.push_back(std::string(1, path) + "_" + std::to_string(j));
    w.vertices.push_back(theta_vertex(w.theta, path, j));
  }
  return w;
}

std::array<int, 169> witness_block_pattern() {
  std::array<int, 169> p{};
  for (int i = 0; i < 13; ++i) {
    for (int j = 0; j < 13; ++j) p[i * 13 + j] = (i < 7) != (j < 7) ? 1 : 0;
  }
  return p;
}

WitnessEvaluation evaluate_witness(int k, std::span<const int> offset,
                                   std::span<const long long> g) {
  if (offset.size() != 169 || g.size() != 13) {
    throw std::invalid_argument("witness needs a 13x13 offset and 13 weights");
  }
  const WitnessSpec w = witness_spec(k);
  const Graph graph = make_theta(w.theta);
  const DistanceMatrix d = distance_matrix(graph);
  for (Vertex v : w.vertices) {
    if (v < 0 || v >= graph.num_vertices()) {
      throw std::out_of_range("witness vertex out of range");
    }
  }
  WitnessEvaluation out;
  out.k = k;
  out.submatrix = d.submatrix(w.vertices);
  for (int i = 0; i < 13; ++i) {
    for (int j = 0; j < 13; ++j) {
      out.value += g[i] * g[j] * out.submatrix[i * 13 + j];
    }
  }
  std::vector<long long> f(graph.num_vertices(), 0);
  for (int i = 0; i < 13; ++i) f[w.vertices[i]] += g[i];
  out.full_value = d.quadratic_form(std::span<const long long>(f));
  const auto pattern = witness_block_pattern();
  out.matches_offset = true;
  for (int i = 0; i < 169; ++i) {
    if (out.submatrix[i] != offset[i] + k * pattern[i]) {
      out.matches_offset = false;
      break;
    }
  }
  return out;
}

long long witness_quadratic_form(int k) {
  const WitnessEvaluation e =
      evaluate_witness(k, kWitnessOffset, kWitnessVector);
  if (!e.matches_offset) {
    throw std::logic_error("witness submatrix differs from A + k*pattern at k=" +
                           std::to_string(k));
  }
  return e.value;
}

std::vector<ThetaSpec> theta_specs_up_to(int max_vertices) {
  std::vector<ThetaSpec> specs;
  for (int a = 1; 3 * a - 1 <= max_vertices; ++a) {
    for (int b = std::max(a, 2); a + 2 * b - 1 <= max_vertices; ++b) {
      for (int c = b; a + b + c - 1 <= max_vertices; ++c) {
        specs.push_back({a, b, c});
      }
    }
  }
  return specs;
}

namespace {

SweepRow sweep_row(const ThetaSpec& spec, Mode mode, const Tolerances& tol) {
  const Graph g = make_theta(spec);
  SweepRow row;
  row.spec = spec;
  row.n = g.num_vertices();
  row.closed_form = classify_theta_closed_form(spec).decision;
  row.schoenberg = classify_schoenberg(g, mode, tol).decision;
  row.winkler = classify_winkler(g, std::nullopt, mode, tol).decision;
  row.qec = qec(g).value;
  return row;
}

void summarize(SweepReport& report) {
  for (const SweepRow& r : report.rows) {
    if (!r.agree()) ++report.disagreements;
    if (r.schoenberg == QeDecision::kQe) {
      ++report.qe_count;
    } else {
      ++report.non_qe_count;
    }
  }
}

void check_sweep_size(int max_vertices) {
  if (max_vertices < 5) {
    throw std::invalid_argument("sweep needs max_vertices >= 5 (got " +
                                std::to_string(max_vertices) + ")");
  }
}

}  // namespace

SweepReport classification_sweep(int max_vertices, Mode mode,
                                 const Tolerances& tol) {
  check_sweep_size(max_vertices);
  const std::vector<ThetaSpec> specs = theta_specs_up_to(max_vertices);
  SweepReport report;
  report.rows.resize(specs.size());
  std::exception_ptr failure;
  const int count = static_cast<int>(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      report.rows[i] = sweep_row(specs[i], mode, tol);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  summarize(report);
  return report;
}

namespace reference {

SweepReport classification_sweep(int max_vertices, Mode mode,
                                 const Tolerances& tol) {
  check_sweep_size(max_vertices);
  SweepReport report;
  for (const ThetaSpec& spec : theta_specs_up_to(max_vertices)) {
    report.rows.push_back(sweep_row(spec, mode, tol));
  }
  summarize(report);
  return report;
}

}  // namespace reference

}  // namespace qegraph
