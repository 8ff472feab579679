// Copyright 2026 The Koopman Forge Authors. All Rights Reserved.
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

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "koopman_forge/koopman.h"
#include "koopman_forge/realize.h"
#include "koopman_forge/transforms.h"

namespace koopman_forge {
namespace {

DoublyStochasticMatrix MixedMatrix(int level) {
  const std::size_t size = std::size_t{1} << level;
  std::mt19937_64 rng(static_cast<std::uint64_t>(level));
  std::vector<Permutation> perms(3, Permutation(size));
  for (Permutation& p : perms) {
    for (std::size_t i = 0; i < size; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
  }
  const std::vector<Rat> weights{Rat(1, 2), Rat(1, 3), Rat(1, 6)};
  return BirkhoffCombination(perms, weights);
}

void BM_RealizeIet(benchmark::State& state) {
  const DoublyStochasticMatrix m = MixedMatrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(RealizeIet(m));
  state.counters["pieces"] = static_cast<double>(RealizeIet(m).piece_count());
}
BENCHMARK(BM_RealizeIet)->DenseRange(2, 8, 2);

void BM_KoopmanMatrixOfRealization(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const PiecewiseAffineMap t(RealizeIet(MixedMatrix(level)));
  for (auto _ : state) benchmark::DoNotOptimize(KoopmanMatrix(t, level));
}
BENCHMARK(BM_KoopmanMatrixOfRealization)->DenseRange(2, 8, 2);

void BM_KoopmanMatrixTent(benchmark::State& state) {
  const PiecewiseAffineMap tent = PiecewiseAffineMap::Tent();
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(KoopmanMatrix(tent, level));
}
BENCHMARK(BM_KoopmanMatrixTent)->DenseRange(2, 8, 2);

void BM_OpMetric(benchmark::State& state) {
  const MetricBasis basis = MetricBasis::DyadicIndicators(static_cast<int>(state.range(0)));
  const PiecewiseAffineMap doubling = PiecewiseAffineMap::Doubling();
  const PiecewiseAffineMap t(RealizeIet(KoopmanMatrix(doubling, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(OpMetric(t, doubling, basis));
}
BENCHMARK(BM_OpMetric)->DenseRange(3, 7, 2);

void BM_ApproximationSequence(benchmark::State& state) {
  const MetricBasis basis = MetricBasis::DyadicIndicators();
  const PiecewiseAffineMap tent = PiecewiseAffineMap::Tent();
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ApproximationSequence(tent, n_max, basis));
}
BENCHMARK(BM_ApproximationSequence)->Arg(4)->Arg(6);

}  // namespace
}  // namespace koopman_forge

BENCHMARK_MAIN();
