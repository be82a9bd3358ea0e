/*
 * Copyright 2026 The gbfpum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <numeric>

#include "gbfpum/community.hpp"
#include "gbfpum/kernel.hpp"
#include "gbfpum/mincut.hpp"
#include "gbfpum/pum.hpp"
#include "gbfpum/signal.hpp"

namespace {

using namespace gbfpum;

NodeSet samples_for(const Graph& g, std::int64_t per_mille) {
  return uniform_samples(g.node_count(), static_cast<Vertex>(g.node_count() * per_mille / 1000), 1);
}

void BM_DetectCommunitiesGrid(benchmark::State& state) {
  const auto side = static_cast<Vertex>(state.range(0));
  const Graph g = grid_graph(side, side);
  const NodeSet w = samples_for(g, 100);
  for (auto _ : state) benchmark::DoNotOptimize(detect_communities(g, w));
  state.SetComplexityN(g.node_count());
}
BENCHMARK(BM_DetectCommunitiesGrid)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_KatzGrid(benchmark::State& state) {
  const auto side = static_cast<Vertex>(state.range(0));
  const Graph g = grid_graph(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(katz_centrality(g));
}
BENCHMARK(BM_KatzGrid)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_MinCutGrid(benchmark::State& state) {
  const auto side = static_cast<Vertex>(state.range(0));
  const Graph g = grid_graph(side, side);
  const CapacityGraph cg(g);
  const Vertex far = g.node_count() - 1;
  for (auto _ : state) benchmark::DoNotOptimize(min_st_cut(cg, 0, far));
}
BENCHMARK(BM_MinCutGrid)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_FitLocalGrid(benchmark::State& state) {
  const auto side = static_cast<Vertex>(state.range(0));
  const Graph g = grid_graph(side, side);
  const NodeSet w = samples_for(g, 100);
  const SignalVector x = synth_low_pass_signal(g, 1);
  SignalVector xw(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) xw[static_cast<Eigen::Index>(i)] = x[w[i]];
  for (auto _ : state) benchmark::DoNotOptimize(fit_local(g, xw, w));
}
BENCHMARK(BM_FitLocalGrid)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SpectralKernel(benchmark::State& state) {
  const auto side = static_cast<Vertex>(state.range(0));
  const Graph g = grid_graph(side, side);
  const SparseMatrix l = laplacian(g);
  const NodeSet cols{0, g.node_count() / 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_kernel_columns(l, {.s = 2.0}, cols, KernelMethod::Spectral));
  }
}
BENCHMARK(BM_SpectralKernel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PipelineGrid(benchmark::State& state) {
  const auto side = static_cast<Vertex>(state.range(0));
  const Graph g = grid_graph(side, side);
  const NodeSet w = samples_for(g, 100);
  const SignalVector x = synth_low_pass_signal(g, 1);
  SignalVector xw(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) xw[static_cast<Eigen::Index>(i)] = x[w[i]];
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(g, w, xw));
}
BENCHMARK(BM_PipelineGrid)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
