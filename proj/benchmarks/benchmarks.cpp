// Copyright 2026 The Zeroscope Authors.
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

#include "zeroscope/chaos.hpp"
#include "zeroscope/sampler.hpp"
#include "zeroscope/solver.hpp"
#include "zeroscope/statistics.hpp"
#include "zeroscope/wick.hpp"

namespace zeroscope {
namespace {

void BM_AberthElliptic(benchmark::State& state) {
  const Model model(ModelKind::kElliptic, static_cast<int>(state.range(0)));
  std::uint64_t t = 0;
  for (auto _ : state) {
    const SectionSample s = sample_section(model, SeedPath{1, t++, 0});
    benchmark::DoNotOptimize(zeros_of(s));
  }
}
BENCHMARK(BM_AberthElliptic)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_ProductResultant(benchmark::State& state) {
  const Model model(ModelKind::kProductElliptic2, static_cast<int>(state.range(0)));
  std::uint64_t t = 0;
  for (auto _ : state) {
    const SectionSample p = sample_section(model, SeedPath{1, t, 0});
    const SectionSample q = sample_section(model, SeedPath{1, t++, 1});
    benchmark::DoNotOptimize(common_zeros(p, q));
  }
}
BENCHMARK(BM_ProductResultant)->Arg(3)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DiagramEnumeration(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const std::vector<int> alphas{a, a};
  for (auto _ : state) benchmark::DoNotOptimize(wick::enumerate_diagrams(alphas));
}
BENCHMARK(BM_DiagramEnumeration)->DenseRange(1, 4);

void BM_FieldGrid(benchmark::State& state) {
  const Model model(ModelKind::kElliptic, 128);
  const FluctuationGrid grid = make_fluctuation_grid(model, TestFunction::gauss_bump({}, 1.0));
  const SectionSample s = sample_section(model, SeedPath{3, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(s.eval_field_grid(grid.nodes));
  state.counters["nodes"] = static_cast<double>(grid.nodes.size());
}
BENCHMARK(BM_FieldGrid)->Unit(benchmark::kMillisecond);

void BM_VarianceOracle(benchmark::State& state) {
  const Model model(ModelKind::kElliptic, static_cast<int>(state.range(0)));
  const TestFunction phi = TestFunction::gauss_bump({}, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(variance_oracle_smooth(model, phi));
}
BENCHMARK(BM_VarianceOracle)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zeroscope

BENCHMARK_MAIN();
