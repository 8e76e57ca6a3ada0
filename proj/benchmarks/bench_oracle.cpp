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

#include "dicke/fock_basis.hpp"
#include "dicke/oracle.hpp"

namespace {

dicke::LatticeSpec small_lattice() {
  dicke::LatticeSpec spec;
  spec.L = 2;
  spec.interaction = 2.0;
  return spec;
}

// Dense diagonalization dominates every oracle call.
void BM_OracleDiagonalize(benchmark::State& state) {
  const auto spec = small_lattice();
  const auto basis = dicke::FockBasis::enumerate(spec, dicke::Statistics::kBose,
                                                 static_cast<int>(state.range(0)));
  const auto hamiltonian = dicke::build_lattice_hamiltonian(basis, spec);
  state.counters["dimension"] = static_cast<double>(basis.dimension());
  for (auto _ : state) {
    dicke::Propagator propagator(hamiltonian);
    benchmark::DoNotOptimize(propagator.eigenvalues().data());
  }
}
BENCHMARK(BM_OracleDiagonalize)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OracleMottPeak(benchmark::State& state) {
  const auto spec = small_lattice();
  const dicke::EmissionOracle oracle(dicke::FockBasis::enumerate(spec, dicke::Statistics::kBose, 4), spec);
  const auto initial = dicke::mott_state(oracle.basis());
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.normalized_peak(initial, {{1, 1}, {1, 1}}, 1.3));
  }
}
BENCHMARK(BM_OracleMottPeak)->Unit(benchmark::kMillisecond);

}  // namespace
