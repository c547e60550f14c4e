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

#include "qegraph/spectra.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qegraph {

SymMatrix::SymMatrix(int n)
    : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

SymMatrix::SymMatrix(int n, std::vector<double> entries)
    : n_(n), a_(std::move(entries)) {
  if (n < 0 || a_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("matrix needs n*n entries");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a_[i * n + j] != a_[j * n + i]) {
        throw std::invalid_argument("matrix is not symmetric at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
    }
  }
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) {
      throw std::invalid_argument("matrix rows must all have length n");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return SymMatrix(n, std::move(flat));
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
  return m;
}

SymMatrix SymMatrix::from_distances(const DistanceMatrix& d) {
  auto e = d.entries();
  return SymMatrix(d.size(), std::vector<double>(e.begin(), e.end()));
}

void SymMatrix::set(int i, int j, double value) {
  a_[i * n_ + j] = value;
  a_[j * n_ + i] = value;
}

std::vector<double> SymMatrix::multiply(std::span<const double> v) const {
  std::vector<double> out(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += a_[i * n_ + j] * v[j];
    out[i] = s;
  }
  return out;
}

double SymMatrix::quadratic_form(std::span<const double> v) const {
  const auto mv = multiply(v);
  return std::inner_product(v.begin(), v.end(), mv.begin(), 0.0);
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

ConvergenceError::ConvergenceError(int sweeps, double off_norm)
    : std::runtime_error("Jacobi iteration did not converge after " +
                         std::to_string(sweeps) +
                         " sweeps; off-diagonal norm " +
                         std::to_string(off_norm)),
      off_norm_(off_norm) {}

SpectrumResult eigen_sym(const SymMatrix& m) {
  const int n = m.size();
  std::vector<double> a(m.entries().begin(), m.entries().end());
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) s += a[i * n + j] * a[i * n + j];
      }
    }
    return std::sqrt(s);
  };

  const double target = kJacobiRelativeOffNorm * m.frobenius_norm();
  int sweeps = 0;
  double off = off_norm();
  while (off > target) {
    if (sweeps == kMaxJacobiSweeps) throw ConvergenceError(sweeps, off);
    ++sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    off = off_norm();
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a[x * n + x] > a[y * n + y];
  });

  SpectrumResult result;
  result.sweeps = sweeps;
  result.eigenvalues.reserve(n);
  result.eigenvectors.reserve(n);
  for (int idx : order) {
    result.eigenvalues.push_back(a[idx * n + idx]);
    std::vector<double> col(n);
    for (int k = 0; k < n; ++k) col[k] = v[k * n + idx];
    result.eigenvectors.push_back(std::move(col));
  }
  for (int k = 0; k < n; ++k) {
    const auto mv = m.multiply(result.eigenvectors[k]);
    for (int i = 0; i < n; ++i) {
      result.residual =
          std::max(result.residual, std::abs(mv[i] - result.eigenvalues[k] *
                                                         result.eigenvectors[k][i]));
    }
  }
  return result;
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kFloat:
      return "float";
    case Mode::kExact:
      return "exact";
    case Mode::kAuto:
      return "auto";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "float") return Mode::kFloat;
  if (text == "exact") return Mode::kExact;
  if (text == "auto") return Mode::kAuto;
  throw std::invalid_argument("unknown mode '" + std::string(text) +
                              "' (expected float, exact or auto)");
}

namespace {

Rational quadratic_form_exact(int n, std::span<const Rational> m,
                              std::span<const Rational> v) {
  Rational total = 0;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < n; ++j) {
      if (v[j] != 0) row += m[i * n + j] * v[j];
    }
    total += v[i] * row;
  }
  return total;
}

// Solves A x = b for a nonsingular rational A (size k) by Gaussian
// elimination.
std::vector<Rational> solve_exact(int k, std::vector<Rational> a,
                                  std::vector<Rational> b) {
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (piv < k && a[piv * k + col] == 0) ++piv;
    if (piv == k) throw std::logic_error("singular pivot block");
    if (piv != col) {
      for (int j = 0; j < k; ++j) std::swap(a[col * k + j], a[piv * k + j]);
      std::swap(b[col], b[piv]);
    }
    for (int r = col + 1; r < k; ++r) {
      if (a[r * k + col] == 0) continue;
      const Rational f = a[r * k + col] / a[col * k + col];
      for (int j = col; j < k; ++j) a[r * k + j] -= f * a[col * k + j];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(k);
  for (int r = k - 1; r >= 0; --r) {
    Rational s = b[r];
    for (int j = r + 1; j < k; ++j) s -= a[r * k + j] * x[j];
    x[r] = s / a[r * k + r];
  }
  return x;
}

// Extends a direction on the non-pivot block to a full vector whose quadratic
// form equals the Schur complement form: v_P = -M_PP^{-1} M_PR v_R.
std::vector<Rational> lift_certificate(int n, std::span<const Rational> m,
                                       const std::vector<int>& pivots,
                                       std::vector<Rational> v) {
  const int k = static_cast<int>(pivots.size());
  if (k == 0) return v;
  std::vector<Rational> block(static_cast<std::size_t>(k) * k);
  std::vector<Rational> rhs(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) block[i * k + j] = m[pivots[i] * n + pivots[j]];
    for (int c = 0; c < n; ++c) {
      if (v[c] != 0) rhs[i] -= m[pivots[i] * n + c] * v[c];
    }
  }
  const auto x = solve_exact(k, std::move(block), std::move(rhs));
  for (int i = 0; i < k; ++i) v[pivots[i]] = x[i];
  return v;
}

double float_threshold(const Tolerances& tol, double scale) {
  return tol.psd * std::max(1.0, scale);
}

}  // namespace

PsdVerdict is_psd_exact(int n, std::span<const Rational> entries) {
  if (static_cast<int>(entries.size()) != n * n) {
    throw std::invalid_argument("exact PSD test needs n*n entries");
  }
  std::vector<Rational> s(entries.begin(), entries.end());
  std::vector<int> active(n);
  std::iota(active.begin(), active.end(), 0);
  std::vector<int> pivot_order;

  PsdVerdict verdict;
  verdict.mode = Mode::kExact;

  auto fail_with = [&](std::vector<Rational> direction) {
    auto full = lift_certificate(n, entries, pivot_order, std::move(direction));
    const Rational value = quadratic_form_exact(n, entries, full);
    if (value >= 0) {
      throw std::logic_error("exact PSD certificate failed re-validation");
    }
    verdict.psd = false;
    verdict.certificate_value = static_cast<double>(value);
    verdict.certificate.resize(n);
    for (int i = 0; i < n; ++i) verdict.certificate[i] = static_cast<double>(full[i]);
    verdict.exact_certificate = std::move(full);
    return verdict;
  };

  while (!active.empty()) {
    auto best = std::max_element(active.begin(), active.end(), [&](int x, int y) {
      return s[x * n + x] < s[y * n + y];
    });
    const int p = *best;
    const Rational pivot = s[p * n + p];
    if (pivot > 0) {
      active.erase(best);
      for (int i : active) {
        if (s[i * n + p] == 0) continue;
        const Rational f = s[i * n + p] / pivot;
        for (int j : active) s[i * n + j] -= f * s[p * n + j];
      }
      pivot_order.push_back(p);
      verdict.pivots.push_back(pivot);
      continue;
    }
    auto worst = std::min_element(active.begin(), active.end(), [&](int x, int y) {
      return s[x * n + x] < s[y * n + y];
    });
    if (s[*worst * n + *worst] < 0) {
      std::vector<Rational> dir(n, 0);
      dir[*worst] = 1;
      return fail_with(std::move(dir));
    }
    // Remaining diagonal is zero; the block is PSD only if it vanishes.
    for (int i : active) {
      for (int j : active) {
        if (i != j && s[i * n + j] != 0) {
          std::vector<Rational> dir(n, 0);
          dir[i] = 1;
          dir[j] = s[i * n + j] > 0 ? -1 : 1;
          return fail_with(std::move(dir));
        }
      }
    }
    verdict.pivots.insert(verdict.pivots.end(), active.size(), Rational(0));
    break;
  }
  verdict.psd = true;
  return verdict;
}

namespace {

PsdVerdict exact_from_double(const SymMatrix& m) {
  std::vector<Rational> r(m.entries().begin(), m.entries().end());
  return is_psd_exact(m.size(), r);
}

}  // namespace

PsdVerdict is_psd(const SymMatrix& m, Mode mode, const Tolerances& tol) {
  const int n = m.size();
  PsdVerdict verdict;
  if (n == 0) {
    verdict.psd = true;
    verdict.mode = mode == Mode::kAuto ? Mode::kFloat : mode;
    return verdict;
  }
  const SpectrumResult spec = eigen_sym(m);
  const double lmin = spec.eigenvalues.back();
  const double lmax = spec.eigenvalues.front();
  const double threshold = float_threshold(tol, lmax);

  bool use_exact = mode == Mode::kExact;
  if (mode == Mode::kAuto && std::abs(lmin) < tol.escalation * threshold) {
    use_exact = true;
  }
  if (!use_exact) {
    verdict.mode = Mode::kFloat;
    verdict.psd = lmin >= -threshold;
    if (!verdict.psd) {
      verdict.certificate = spec.eigenvectors.back();
      verdict.certificate_value = m.quadratic_form(verdict.certificate);
      if (!(verdict.certificate_value < 0)) use_exact = true;
    }
  }
  if (use_exact) {
    verdict = exact_from_double(m);
    verdict.escalated = mode != Mode::kExact;
  }
  verdict.lambda_min = lmin;
  verdict.lambda_max = lmax;
  return verdict;
}

std::vector<std::vector<double>> ones_complement_basis(int n) {
  if (n < 2) throw std::invalid_argument("ones complement needs n >= 2");
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> u(n, inv_sqrt_n);
  u[n - 1] -= 1.0;
  double uu = 0.0;
  for (double x : u) uu += x * x;
  std::vector<std::vector<double>> basis(n - 1, std::vector<double>(n));
  for (int k = 0; k < n - 1; ++k) {
    const double scale = 2.0 * u[k] / uu;
    for (int i = 0; i < n; ++i) {
      basis[k][i] = (i == k ? 1.0 : 0.0) - scale * u[i];
    }
  }
  return basis;
}

SymMatrix reduce_to_ones_complement(const DistanceMatrix& d) {
  const int n = d.size();
  const auto q = ones_complement_basis(n);
  // dq[k] = D q_k
  std::vector<std::vector<double>> dq(n - 1, std::vector<double>(n, 0.0));
  for (int k = 0; k < n - 1; ++k) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += d(i, j) * q[k][j];
      dq[k][i] = s;
    }
  }
  SymMatrix r(n - 1);
  for (int a = 0; a < n - 1; ++a) {
    for (int b = a; b < n - 1; ++b) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += q[a][i] * dq[b][i];
      r.set(a, b, s);
    }
  }
  return r;
}

namespace {

std::vector<double> lift_from_basis(const std::vector<std::vector<double>>& q,
                                    std::span<const double> coeffs, int n) {
  std::vector<double> f(n, 0.0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    for (int i = 0; i < n; ++i) f[i] += coeffs[k] * q[k][i];
  }
  return f;
}

// Integer matrix P^T D P for the difference basis p_i = e_i - e_{i+1},
// negated so that CND becomes PSD.
std::vector<Rational> negated_difference_reduction(const DistanceMatrix& d) {
  const int n = d.size();
  const int m = n - 1;
  std::vector<Rational> r(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int v = d(i, j) - d(i, j + 1) - d(i + 1, j) + d(i + 1, j + 1);
      r[i * m + j] = -v;
    }
  }
  return r;
}

CndVerdict exact_cnd(const DistanceMatrix& d) {
  const int n = d.size();
  CndVerdict verdict;
  verdict.mode = Mode::kExact;
  const PsdVerdict psd = is_psd_exact(n - 1, negated_difference_reduction(d));
  verdict.cnd = psd.psd;
  if (!psd.psd) {
    std::vector<Rational> f(n, 0);
    for (int i = 0; i < n - 1; ++i) {
      f[i] += psd.exact_certificate[i];
      f[i + 1] -= psd.exact_certificate[i];
    }
    Rational value = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) value += f[x] * d(x, y) * f[y];
    }
    if (value <= 0) {
      throw std::logic_error("exact CND certificate failed re-validation");
    }
    verdict.certificate.resize(n);
    for (int i = 0; i < n; ++i) verdict.certificate[i] = static_cast<double>(f[i]);
    verdict.certificate_value = static_cast<double>(value);
    verdict.exact_certificate = std::move(f);
  }
  return verdict;
}

}  // namespace

CndVerdict is_cnd(const DistanceMatrix& d, Mode mode, const Tolerances& tol) {
  const int n = d.size();
  CndVerdict verdict;
  if (n == 1) {
    verdict.cnd = true;
    verdict.mode = mode == Mode::kAuto ? Mode::kFloat : mode;
    return verdict;
  }
  const SymMatrix reduced = reduce_to_ones_complement(d);
  const SpectrumResult spec = eigen_sym(reduced);
  const double lmax = spec.eigenvalues.front();
  const double lmin = spec.eigenvalues.back();
  const double threshold = float_threshold(tol, -lmin);

  bool use_exact = mode == Mode::kExact;
  if (mode == Mode::kAuto && std::abs(lmax) < tol.escalation * threshold) {
    use_exact = true;
  }
  if (!use_exact) {
    verdict.mode = Mode::kFloat;
    verdict.cnd = lmax <= threshold;
    if (!verdict.cnd) {
      const auto q = ones_complement_basis(n);
      verdict.certificate = lift_from_basis(q, spec.eigenvectors.front(), n);
      verdict.certificate_value = d.quadratic_form(
          std::span<const double>(verdict.certificate));
      if (!(verdict.certificate_value > 0)) use_exact = true;
    }
  }
  if (use_exact) {
    verdict = exact_cnd(d);
    verdict.escalated = mode != Mode::kExact;
  }
  verdict.lambda_max = lmax;
  return verdict;
}

OnesComplementMax max_eig_on_ones_complement_with_vector(
    const DistanceMatrix& d) {
  const int n = d.size();
  if (n < 2) {
    throw std::invalid_argument(
        "QE constant undefined for a single vertex: no unit vector is "
        "orthogonal to the ones vector");
  }
  const SpectrumResult spec = eigen_sym(reduce_to_ones_complement(d));
  OnesComplementMax out;
  out.value = spec.eigenvalues.front();
  out.maximizer =
      lift_from_basis(ones_complement_basis(n), spec.eigenvectors.front(), n);
  return out;
}

double max_eig_on_ones_complement(const DistanceMatrix& d) {
  return max_eig_on_ones_complement_with_vector(d).value;
}

}  // namespace qegraph
