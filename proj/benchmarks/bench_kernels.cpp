// Copyright 2026 The dicke-lattice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "dicke/distributions.hpp"
#include "dicke/superradiance.hpp"

namespace {

dicke::LatticeSpec lattice(int L) {
  dicke::LatticeSpec spec;
  spec.L = L;
  return spec;
}

void BM_KernelBuild(benchmark::State& state) {
  const auto spec = lattice(static_cast<int>(state.range(0)));
  const auto dist = dicke::bose_einstein(spec, 1.0, spec.num_sites());
  for (auto _ : state) {
    dicke::CoherentKernel kernel(dist, {1, 1}, spec);
    benchmark::DoNotOptimize(kernel.atoms());
  }
}
BENCHMARK(BM_KernelBuild)->Arg(20)->Arg(100)->Arg(200);

void BM_KernelAmplitude(benchmark::State& state) {
  const auto spec = lattice(static_cast<int>(state.range(0)));
  const auto dist = dicke::fermi_dirac(spec, 2.0, spec.num_sites());
  const dicke::CoherentKernel kernel(dist, {1, 1}, spec);
  double dt = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.amplitude(dt));
    dt += 0.1;
  }
}
BENCHMARK(BM_KernelAmplitude)->Arg(20)->Arg(100)->Arg(200);

// A full 500-point emission curve, as the command-line tool draws it.
void BM_EmissionCurve(benchmark::State& state) {
  const auto spec = lattice(100);
  const dicke::Scenario scenario{dicke::Statistics::kBose,
                                 {dicke::StateKind::kPartial, 5000.0, 5000.0, 0.0},
                                 dicke::Transition::kNone};
  const auto grid = dicke::uniform_time_grid(100.0, 500);
  for (auto _ : state) {
    auto curve = dicke::emission_curve(scenario, grid, spec, {{1, 1}, {1, 1}});
    benchmark::DoNotOptimize(curve.values.data());
  }
}
BENCHMARK(BM_EmissionCurve)->Unit(benchmark::kMillisecond);

void BM_PhaseSum(benchmark::State& state) {
  const auto spec = lattice(100);
  double dt = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dicke::phase_sum(spec, {1, 1}, dt));
    dt += 0.2;
  }
}
BENCHMARK(BM_PhaseSum);

}  // namespace
