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

#ifndef QEGRAPH_SPECTRA_H_
#define QEGRAPH_SPECTRA_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qegraph/distance.h"
#include "qegraph/rational.h"

namespace qegraph {

// Dense real symmetric matrix, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  // Zero matrix.
  explicit SymMatrix(int n);
  // Throws std::invalid_argument unless entries has n*n elements and
  // entries[i*n+j] == entries[j*n+i] exactly.
  SymMatrix(int n, std::vector<double> entries);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymMatrix identity(int n);
  static SymMatrix from_distances(const DistanceMatrix& d);

  int size() const { return n_; }
  double operator()(int i, int j) const { return a_[i * n_ + j]; }
  // Writes both (i,j) and (j,i).
  void set(int i, int j, double value);
  std::span<const double> entries() const { return a_; }

  double quadratic_form(std::span<const double> v) const;
  std::vector<double> multiply(std::span<const double> v) const;
  double frobenius_norm() const;
  double max_abs() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

// Eigenpairs sorted by eigenvalue, descending.
struct SpectrumResult {
  std::vector<double> eigenvalues;
  // eigenvectors[k] is the unit eigenvector for eigenvalues[k].
  std::vector<std::vector<double>> eigenvectors;
  // max over k of ||M v_k - lambda_k v_k||_inf
  double residual = 0.0;
  int sweeps = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int sweeps, double off_norm);
  double off_norm() const { return off_norm_; }

 private:
  double off_norm_;
};

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiRelativeOffNorm = 1e-12;

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// 1e-12 * ||M||_F. Throws ConvergenceError after kMaxJacobiSweeps sweeps.
SpectrumResult eigen_sym(const SymMatrix& m);

enum class Mode { kFloat, kExact, kAuto };

std::string_view to_string(Mode mode);
// "float", "exact" or "auto"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view text);

struct Tolerances {
  // Float PSD threshold is psd * max(1, lambda_max).
  double psd = 1e-9;
  // Auto mode re-runs exactly when |lambda| < escalation * (psd threshold).
  double escalation = 10.0;
  // Largest acceptable eigen_sym residual, relative to max(1, ||M||_max).
  double residual = 1e-9;
};

struct PsdVerdict {
  bool psd = false;
  // Mode that produced the decision (never kAuto).
  Mode mode = Mode::kFloat;
  bool escalated = false;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  // On psd == false: v with <v, M v> < 0. Exact mode also fills
  // exact_certificate with the rational vector the float one was rounded from.
  std::vector<double> certificate;
  double certificate_value = 0.0;
  std::vector<Rational> exact_certificate;
  // Exact mode: LDL^T pivots in elimination order.
  std::vector<Rational> pivots;
};

PsdVerdict is_psd(const SymMatrix& m, Mode mode,
                  const Tolerances& tol = Tolerances{});

// Rational LDL^T with largest-diagonal symmetric pivoting on the exact values
// of the entries (doubles convert to rationals without rounding).
PsdVerdict is_psd_exact(int n, std::span<const Rational> entries);

struct CndVerdict {
  bool cnd = false;
  Mode mode = Mode::kFloat;
  bool escalated = false;
  // Largest eigenvalue of D restricted to the complement of the ones vector.
  double lambda_max = 0.0;
  // On cnd == false: f with <1, f> = 0 and <f, D f> > 0.
  std::vector<double> certificate;
  double certificate_value = 0.0;
  std::vector<Rational> exact_certificate;
};

CndVerdict is_cnd(const DistanceMatrix& d, Mode mode,
                  const Tolerances& tol = Tolerances{});

// Orthonormal basis of the complement of (1,...,1) in R^n: the first n-1
// columns of the Householder reflector that maps 1/sqrt(n) to e_{n-1}.
// Result[k] is the k-th basis vector (length n).
std::vector<std::vector<double>> ones_complement_basis(int n);

// Q^T D Q for the basis above; (n-1) x (n-1).
SymMatrix reduce_to_ones_complement(const DistanceMatrix& d);

struct OnesComplementMax {
  double value = 0.0;
  // Unit vector in R^n orthogonal to the ones vector attaining value.
  std::vector<double> maximizer;
};

// max { <f,Df> : ||f|| = 1, <1,f> = 0 }. Throws std::invalid_argument if n == 1.
OnesComplementMax max_eig_on_ones_complement_with_vector(
    const DistanceMatrix& d);
double max_eig_on_ones_complement(const DistanceMatrix& d);

}  // namespace qegraph

#endif  // QEGRAPH_SPECTRA_H_
