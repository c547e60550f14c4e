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

#include "qegraph/fixtures.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qegraph/io.h"
#include "qegraph/qe_analysis.h"
#include "qegraph/winkler.h"

namespace qegraph {
namespace {

namespace fs = std::filesystem;

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

FixtureCheck run(std::string name, const std::function<std::string()>& body) {
  FixtureCheck c{std::move(name), false, {}};
  try {
    c.detail = body();
    c.pass = c.detail.empty();
    if (c.pass) c.detail = "ok";
  } catch (const std::exception& e) {
    c.detail = e.what();
  }
  return c;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

struct ThetaKernelFixture {
  const char* stem;
  ThetaSpec spec;
  std::vector<double> (*spectrum)();
};

std::string check_kernel(const fs::path& dir, const ThetaKernelFixture& f) {
  const Graph g = make_theta(f.spec);
  const OrientedTree t = read_tree(g, dir / (std::string(f.stem) + ".tree"));
  const KernelMatrix k = winkler_kernel(g, t);
  const RationalMatrix printed =
      read_matrix(dir / (std::string(f.stem) + "_2k.mat"));
  if (printed.n != k.m) {
    return "dimension " + std::to_string(k.m) + " vs printed " +
           std::to_string(printed.n);
  }
  for (int i = 0; i < k.m; ++i) {
    for (int j = 0; j < k.m; ++j) {
      if (printed(i, j) != k.twice_at(i, j)) {
        return "2K(" + std::to_string(i) + "," + std::to_string(j) +
               ") = " + std::to_string(k.twice_at(i, j)) + ", printed " +
               to_string(printed(i, j));
      }
    }
  }
  return {};
}

std::string check_spectrum(const fs::path& dir, const ThetaKernelFixture& f,
                           const FixtureOptions& opt) {
  const Graph g = make_theta(f.spec);
  const OrientedTree t = read_tree(g, dir / (std::string(f.stem) + ".tree"));
  const KernelMatrix k = winkler_kernel(g, t);
  std::vector<double> twice(k.twice.begin(), k.twice.end());
  const SpectrumResult s = eigen_sym(SymMatrix(k.m, std::move(twice)));
  const std::vector<double> expected = f.spectrum();
  if (expected.size() != s.eigenvalues.size()) return "spectrum size mismatch";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(expected[i] - s.eigenvalues[i]) > opt.spectrum_tolerance) {
      return "eigenvalue " + std::to_string(i) + " = " + fmt(s.eigenvalues[i]) +
             ", expected " + fmt(expected[i]);
    }
  }
  const PsdVerdict v = is_psd(k.to_sym(), opt.mode, opt.tol);
  if (!v.psd) return "kernel judged not PSD";
  return {};
}

std::string check_blocks(const fs::path& dir, Parity parity,
                         const FixtureOptions& opt) {
  const bool even = parity == Parity::kEven;
  // The shipped k = l = 2 tree documents the construction.
  {
    Theta1BlockFixture f = theta1_block_fixture(2, 2, parity);
    const OrientedTree shipped = read_tree(
        f.graph, dir / (even ? "theta1_even_k2_l2.tree" : "theta1_odd_k2_l2.tree"));
    if (shipped.tree_edges != f.tree.tree_edges) {
      return "shipped k=l=2 tree differs from the generated tree";
    }
    if (!(winkler_kernel(f.graph, shipped) == build_theta1_block_kernel(2, 2, parity))) {
      return "shipped k=l=2 tree kernel differs from block formula";
    }
  }
  for (int k = 2; k <= opt.block_max; ++k) {
    for (int l = k; l <= opt.block_max; ++l) {
      const std::string at = "(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")";
      Theta1BlockFixture f = theta1_block_fixture(k, l, parity);
      const KernelMatrix built = build_theta1_block_kernel(k, l, parity);
      if (!(winkler_kernel(f.graph, f.tree) == built)) {
        return "kernel differs from block formula at " + at;
      }
      if (!passes_unit_gershgorin(built)) return "Gershgorin row test fails at " + at;
      const SpectrumResult s = eigen_sym(built.to_sym());
      if (s.eigenvalues.back() < -1e-9 || s.eigenvalues.front() > 2 + 1e-9) {
        return "eigenvalues leave [0,2] at " + at;
      }
    }
  }
  return {};
}

std::array<int, 169> load_offset(const fs::path& dir) {
  const RationalMatrix a = read_matrix(dir / "witness_offset.mat");
  if (a.n != 13) throw std::runtime_error("witness offset must be 13x13");
  std::array<int, 169> out{};
  for (int i = 0; i < 169; ++i) {
    if (denominator(a.entries[i]) != 1) {
      throw std::runtime_error("witness offset entries must be integers");
    }
    out[i] = static_cast<int>(numerator(a.entries[i]));
  }
  return out;
}

std::string check_witness_offset(const fs::path& dir, const FixtureOptions& opt) {
  const auto offset = load_offset(dir);
  for (int k = 1; k <= opt.witness_max_k; ++k) {
    if (!evaluate_witness(k, offset, kWitnessVector).matches_offset) {
      return "submatrix differs from A + k*pattern at k=" + std::to_string(k);
    }
  }
  return {};
}

std::string check_witness_value(const fs::path& dir, const FixtureOptions& opt) {
  const std::vector<long long> g = read_integer_vector(dir / "witness_g.txt");
  if (g.size() != 13) return "witness vector needs 13 entries";
  const auto offset = load_offset(dir);
  for (int k = 1; k <= opt.witness_max_k; ++k) {
    const WitnessEvaluation e = evaluate_witness(k, offset, g);
    if (e.value != kWitnessValue || e.full_value != kWitnessValue) {
      return "<g,Dg> = " + std::to_string(e.value) + " (full " +
             std::to_string(e.full_value) + ") at k=" + std::to_string(k);
    }
  }
  return {};
}

std::string check_sweep(const FixtureOptions& opt) {
  const SweepReport r = classification_sweep(opt.sweep_max_vertices, opt.mode, opt.tol);
  for (const SweepRow& row : r.rows) {
    if (!row.agree()) {
      return "methods disagree on theta(" + std::to_string(row.spec.alpha) + "," +
             std::to_string(row.spec.beta) + "," + std::to_string(row.spec.gamma) + ")";
    }
  }
  return {};
}

std::string check_qec_bounds(const FixtureOptions& opt) {
  for (int m = 3; m <= 13; ++m) {
    const double got = qec(make_cycle(m)).value;
    const double want = m % 2 ? odd_cycle_qec(m) : 0.0;
    if (std::abs(got - want) > 1e-9) {
      return "QEC(C_" + std::to_string(m) + ") = " + fmt(got) + ", expected " + fmt(want);
    }
  }
  for (int b = 4; b <= 12; ++b) {
    for (int c = b; c <= 12; ++c) {
      const double got = qec(make_theta({1, b, c})).value;
      const std::string at = "theta(1," + std::to_string(b) + "," + std::to_string(c) + ")";
      if (b % 2 == 0 && c % 2 == 0) {
        const double lo = odd_cycle_qec(c + 1);
        if (got < lo - opt.qec_tolerance || got > opt.qec_tolerance) {
          return "QEC of " + at + " = " + fmt(got) + " outside [" + fmt(lo) + ",0]";
        }
      } else if (std::abs(got) > opt.qec_tolerance) {
        return "QEC of " + at + " = " + fmt(got) + ", expected 0";
      }
    }
  }
  return {};
}

}  // namespace

std::vector<double> theta233_twice_kernel_spectrum() {
  const double r2 = std::numbers::sqrt2;
  return sorted_desc({4, 2 + r2, 2 + r2, 2 - r2, 2 - r2, 0});
}

std::vector<double> theta235_twice_kernel_spectrum() {
  std::vector<double> v{4, 0};
  for (int k : {1, 2, 4, 5, 7, 8}) {
    v.push_back(2 + 2 * std::cos(k * std::numbers::pi / 9));
  }
  return sorted_desc(v);
}

std::vector<double> theta237_twice_kernel_spectrum() {
  const double r5 = std::sqrt(5.0);
  return sorted_desc({4, 4, (5 + r5) / 2, 3, (3 + r5) / 2, (5 - r5) / 2, 1,
                      (3 - r5) / 2, 0, 0});
}

std::vector<FixtureCheck> verify_paper_fixtures(const fs::path& dir,
                                                const FixtureOptions& opt) {
  const ThetaKernelFixture kernels[] = {
      {"theta233", {2, 3, 3}, theta233_twice_kernel_spectrum},
      {"theta235", {2, 3, 5}, theta235_twice_kernel_spectrum},
      {"theta237", {2, 3, 7}, theta237_twice_kernel_spectrum},
  };
  std::vector<FixtureCheck> out;
  for (const ThetaKernelFixture& f : kernels) {
    const std::string tag = std::string("theta(2,3,") + std::to_string(f.spec.gamma) + ")";
    out.push_back(run(tag + " kernel", [&] { return check_kernel(dir, f); }));
    out.push_back(run(tag + " spectrum", [&] { return check_spectrum(dir, f, opt); }));
  }
  out.push_back(run("block kernel (even)",
                    [&] { return check_blocks(dir, Parity::kEven, opt); }));
  out.push_back(run("block kernel (odd)",
                    [&] { return check_blocks(dir, Parity::kOdd, opt); }));
  out.push_back(run("witness submatrix", [&] { return check_witness_offset(dir, opt); }));
  out.push_back(run("witness value", [&] { return check_witness_value(dir, opt); }));
  out.push_back(run("classification sweep", [&] { return check_sweep(opt); }));
  out.push_back(run("QEC bounds", [&] { return check_qec_bounds(opt); }));
  return out;
}

fs::path default_fixture_dir() { return QEGRAPH_FIXTURE_DIR; }

}  // namespace qegraph
