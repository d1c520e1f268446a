// Copyright 2026 The Spiral Spline Authors
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

#include <random>

#include "spiral/spiral.hpp"

namespace {

using namespace spiral;

InterpolationProblem five_segment() {
  return make_problem({0.0, 0.55, 1.1, 1.7, 2.4, 3.0},
                      {{0.0, 0.0}, {0.5, 0.15}, {1.0, 0.0}, {1.5, -0.1},
                       {2.0, -0.2}, {2.5, -0.5}});
}

void BM_SolveTridiagonal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  TridiagonalSystem s;
  for (std::size_t i = 0; i < n; ++i) {
    s.diag.push_back(4 + u(rng));
    s.rhs.push_back(u(rng));
    if (i + 1 < n) {
      s.sub.push_back(u(rng));
      s.sup.push_back(u(rng));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_tridiagonal(s));
}
BENCHMARK(BM_SolveTridiagonal)->Arg(8)->Arg(64)->Arg(1024);

void BM_EstimateAllBranches(benchmark::State& state) {
  const ChordData chord = validate(five_segment());
  for (auto _ : state) {
    for (std::uint64_t i = 0; i < 32; ++i) {
      benchmark::DoNotOptimize(estimate(chord, SignVector::from_branch_index(i, 5)));
    }
  }
}
BENCHMARK(BM_EstimateAllBranches);

void BM_SegmentDisplacement(benchmark::State& state) {
  const AngleSpline s({0, 1}, {{0.1, 0.5, -0.3, 0.2}});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(segment_displacement(s, 0, {n, n}));
}
BENCHMARK(BM_SegmentDisplacement)->Arg(4)->Arg(64)->Arg(1024);

void BM_RefineBranch(benchmark::State& state) {
  const auto problem = five_segment();
  const AngleSpline est = estimate(validate(problem), SignVector::parse("+-+-+"));
  for (auto _ : state) benchmark::DoNotOptimize(refine(est, problem));
}
BENCHMARK(BM_RefineBranch)->Unit(benchmark::kMillisecond);

void BM_OptimizeBranch(benchmark::State& state) {
  const auto problem = five_segment();
  BranchResult seed(SignVector::parse("--+-+"));
  seed.estimate = estimate(validate(problem), seed.sigma);
  seed.refined = refine(*seed.estimate, problem).spline;
  seed.converged = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        optimize_energy(seed, problem, ExtensionFamily::constant()));
  }
}
BENCHMARK(BM_OptimizeBranch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
