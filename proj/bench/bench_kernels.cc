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

// Serial reference implementations against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qegraph/distance.h"
#include "qegraph/qe_analysis.h"
#include "qegraph/winkler.h"

namespace {

using namespace qegraph;

Graph bench_graph(int gamma) { return make_theta({3, 5, gamma}); }

void BM_DistanceParallel(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(g));
}

void BM_DistanceSerial(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::distance_matrix(g));
}

void BM_KernelParallel(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const DistanceMatrix d = distance_matrix(g);
  const OrientedTree t = default_orientation_and_tree(g);
  for (auto _ : state) benchmark::DoNotOptimize(winkler_kernel(d, t));
}

void BM_KernelSerial(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const DistanceMatrix d = distance_matrix(g);
  const OrientedTree t = default_orientation_and_tree(g);
  for (auto _ : state) benchmark::DoNotOptimize(reference::winkler_kernel(d, t));
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        classification_sweep(static_cast<int>(state.range(0)), Mode::kFloat));
  }
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reference::classification_sweep(static_cast<int>(state.range(0)), Mode::kFloat));
  }
}

BENCHMARK(BM_DistanceParallel)->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(BM_DistanceSerial)->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(BM_KernelParallel)->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(BM_KernelSerial)->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(BM_SweepParallel)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
