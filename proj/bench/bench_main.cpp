// Copyright 2026 The hcp Authors
//
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

// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "hcp/harness.hpp"
#include "hcp/solver.hpp"

namespace {

void BM_FillSerial(benchmark::State& state) {
  const hcp::Graph g = hcp::complete_graph(static_cast<int>(state.range(0)));
  const hcp::Hologram h = hcp::build_hologram(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hcp::fill_path_sets(h, g));
}
BENCHMARK(BM_FillSerial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_FillParallel(benchmark::State& state) {
  const hcp::Graph g = hcp::complete_graph(static_cast<int>(state.range(0)));
  const hcp::Hologram h = hcp::build_hologram(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hcp::fill_path_sets_parallel(h, g));
}
BENCHMARK(BM_FillParallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void run_sweep(benchmark::State& state, bool parallel) {
  hcp::SweepOptions options;
  options.parallel = parallel;
  const int n = static_cast<int>(state.range(0));
  std::uint64_t graphs = 0;
  for (auto _ : state) graphs += hcp::sweep(n, n, options).front().graph_count;
  state.counters["graphs/s"] = benchmark::Counter(static_cast<double>(graphs), benchmark::Counter::kIsRate);
}

void BM_SweepSerial(benchmark::State& state) { run_sweep(state, false); }
BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) { run_sweep(state, true); }
BENCHMARK(BM_SweepParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
