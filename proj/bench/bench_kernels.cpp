// Copyright 2026 The Amoebavol Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "amoeba/gallery.hpp"
#include "amoeba/limit_sets.hpp"
#include "amoeba/linear_spaces.hpp"
#include "amoeba/measure.hpp"
#include "amoeba/raster.hpp"

namespace {

using namespace amoeba;

const VarietySpec& line_spec() {
  static const VarietySpec spec = to_variety(real_line(), 10.0);
  return spec;
}

VolumeOptions volume_options(benchmark::State& state) {
  VolumeOptions o;
  o.samples = static_cast<std::uint64_t>(state.range(0));
  return o;
}

void BM_VolumeSerial(benchmark::State& state) {
  const VolumeOptions o = volume_options(state);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_pullback_serial(line_spec(), o));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VolumeParallel(benchmark::State& state) {
  const VolumeOptions o = volume_options(state);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_pullback(line_spec(), o));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

RasterConfig raster_config(benchmark::State& state) {
  RasterConfig c;
  c.width = c.height = 512;
  c.samples = static_cast<std::uint64_t>(state.range(0));
  return c;
}

void BM_RasterSerial(benchmark::State& state) {
  const RasterConfig c = raster_config(state);
  for (auto _ : state) benchmark::DoNotOptimize(raster_pushforward_serial(line_spec(), c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RasterParallel(benchmark::State& state) {
  const RasterConfig c = raster_config(state);
  for (auto _ : state) benchmark::DoNotOptimize(raster_pushforward(line_spec(), c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FarSamplesSerial(benchmark::State& state) {
  const VarietySpec spec = circle_curve(40.0);
  for (auto _ : state) benchmark::DoNotOptimize(far_samples_serial(spec, {}));
}

void BM_FarSamplesParallel(benchmark::State& state) {
  const VarietySpec spec = circle_curve(40.0);
  for (auto _ : state) benchmark::DoNotOptimize(far_samples(spec, {}));
}

}  // namespace

BENCHMARK(BM_VolumeSerial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VolumeParallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RasterSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RasterParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FarSamplesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FarSamplesParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
