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

// Reference constructions for the theta-graph classification, checked
// against the data files in the fixture directory.
//
// Fixture directory layout:
//   theta233.tree theta235.tree theta237.tree   oriented spanning trees of
//                                               Theta(2,3,gamma)
//   theta233_2k.mat theta235_2k.mat theta237_2k.mat
//                                               2K under those trees
//   theta1_even_k2_l2.tree theta1_odd_k2_l2.tree
//                                               block-kernel trees, k = l = 2
//   witness_offset.mat witness_g.txt            Theta(2,3,2k+7) witness

#ifndef QEGRAPH_FIXTURES_H_
#define QEGRAPH_FIXTURES_H_

#include <filesystem>
#include <string>
#include <vector>

#include "qegraph/spectra.h"

namespace qegraph {

// Expected spectra of 2K, descending.
std::vector<double> theta233_twice_kernel_spectrum();
std::vector<double> theta235_twice_kernel_spectrum();
std::vector<double> theta237_twice_kernel_spectrum();

struct FixtureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FixtureOptions {
  Mode mode = Mode::kAuto;
  Tolerances tol;
  double spectrum_tolerance = 1e-9;
  int block_max = 6;
  int witness_max_k = 50;
  int sweep_max_vertices = 18;
  double qec_tolerance = 1e-8;
};

// Twelve checks; a missing or malformed fixture file fails its check rather
// than throwing.
std::vector<FixtureCheck> verify_paper_fixtures(
    const std::filesystem::path& fixture_dir,
    const FixtureOptions& options = FixtureOptions{});

// Directory baked in at build time.
std::filesystem::path default_fixture_dir();

}  // namespace qegraph

#endif  // QEGRAPH_FIXTURES_H_
