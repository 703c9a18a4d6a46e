// Copyright 2026 The hexloss Authors
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

#include "hexloss/harness.hpp"
#include "hexloss/pathloss_density.hpp"
#include "hexloss/presets.hpp"
#include "hexloss/sampler.hpp"

namespace {

using namespace hexloss;

DensityModel macro_model() {
  const auto p = load_preset("urban-macro");
  return DensityModel(default_side(p), to_pathloss_params(p));
}

void BM_SamplePoint(benchmark::State& state) {
  const CellGeometry g(static_cast<Shape>(state.range(0)), 1000.0);
  VariateStream stream(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_point(g, stream));
}
BENCHMARK(BM_SamplePoint)->DenseRange(0, 2);

void BM_RunDrop(benchmark::State& state) {
  const CellGeometry g(Shape::hexagon, 1000.0);
  const auto pl = to_pathloss_params(load_preset("urban-macro"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_drop(g, pl, 10000, 0, state.range(0)));
  }
}
BENCHMARK(BM_RunDrop)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto m = macro_model();
  ClosedFormOptions opts;
  opts.method = static_cast<numerics::IntegrationMethod>(state.range(0));
  double l = 120.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_f_lp_closed(m, l, opts));
    l = l < 160.0 ? l + 0.37 : 120.0;
  }
}
BENCHMARK(BM_ClosedForm)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_ConvolutionOracle(benchmark::State& state) {
  const auto m = macro_model();
  double l = 120.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_f_lp_oracle(m, l));
    l = l < 160.0 ? l + 0.37 : 120.0;
  }
}
BENCHMARK(BM_ConvolutionOracle)->Unit(benchmark::kMicrosecond);

void BM_Cdf(benchmark::State& state) {
  const auto m = macro_model();
  double l = 120.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdf_f_lp(m, l));
    l = l < 160.0 ? l + 0.37 : 120.0;
  }
}
BENCHMARK(BM_Cdf)->Unit(benchmark::kMicrosecond);

void BM_CdfTableBuild(benchmark::State& state) {
  const auto m = macro_model();
  for (auto _ : state) benchmark::DoNotOptimize(CdfTable(m).size());
}
BENCHMARK(BM_CdfTableBuild)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
