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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dicke/classical_drive.hpp"
#include "dicke/superradiance.hpp"

using namespace dicke;

namespace {

LatticeSpec lattice(int L, double hopping = 1.0) {
  LatticeSpec spec;
  spec.L = L;
  spec.hopping = hopping;
  return spec;
}

}  // namespace

TEST_CASE("identity rotations leave every atom in the ground level") {
  const LatticeSpec spec = lattice(6);
  for (const auto& d : {superfluid(spec), uniform(spec, Statistics::kFermi), metallic(spec)}) {
    CHECK(expected_sigma_z(d, {0.0, 0.0, {1, 1}, 3.0}, spec) == doctest::Approx(-0.5 * d.total()));
  }
}

TEST_CASE("reversed pulses with no waiting restore the ground state") {
  const LatticeSpec spec = lattice(6);
  for (double a : {0.01, 0.4, 1.3, std::numbers::pi / 2}) {
    for (const auto& d : {superfluid(spec), partial_condensation(spec, 10, 26), bose_einstein(spec, 0.5, 36)}) {
      CHECK(expected_sigma_z(d, {a, -a, {1, 0}, 0.0}, spec) == doctest::Approx(-18.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("quarter-turn pulses on the uniform 2 x 2 state give 2 cos(J dt)") {
  const LatticeSpec spec = lattice(2);
  const auto u = uniform(spec, Statistics::kBose);
  const double h = std::numbers::pi / 2;
  for (double dt : {0.0, 0.6, 2.2}) {
    CHECK(expected_sigma_z(u, {h, h, {1, 0}, dt}, spec) == doctest::Approx(2.0 * std::cos(dt)).epsilon(1e-13));
  }
}

TEST_CASE("sigma_z stays within [-N/2, N/2]") {
  const LatticeSpec spec = lattice(8);
  const auto d = fermi_dirac(spec, 1.0, 64);
  for (double a : {-2.0, 0.3, 1.1, 3.0}) {
    for (double b : {-1.0, 0.5, 2.5}) {
      for (double dt : {0.0, 5.0, 40.0}) {
        const double z = expected_sigma_z(d, {a, b, {1, 1}, dt}, spec);
        CHECK(z >= -32.0 - 1e-12);
        CHECK(z <= 32.0 + 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(expected_sigma_z(d, {std::nan(""), 0.0, {1, 1}, 0.0}, spec), std::invalid_argument);
}

TEST_CASE("mean excitation count of a weak pulse") {
  CHECK(mean_excitations(100.0, 0.2) == doctest::Approx(1.0));
  CHECK(mean_excitations(4.0, 0.0) == 0.0);
}

TEST_CASE("metastable population vanishes without waiting or without tunneling") {
  const double nbar = mean_excitations(16.0, 0.05);
  const auto u = uniform(lattice(4), Statistics::kBose);
  CHECK(metastable_population_small_angle(u, nbar, {1, 1}, 0.0, lattice(4)) == doctest::Approx(0.0).epsilon(1e-15));
  for (double dt : {1.0, 10.0, 100.0}) {
    CHECK(std::abs(metastable_population_small_angle(u, nbar, {1, 1}, dt, lattice(4, 0.0))) < 1e-12);
  }
}

TEST_CASE("metastable population of the uniform 2 x 2 state") {
  const LatticeSpec spec = lattice(2);
  const auto u = uniform(spec, Statistics::kBose);
  for (double dt : {0.3, 1.9}) {
    CHECK(metastable_population_small_angle(u, 0.7, {1, 0}, dt, spec) ==
          doctest::Approx(1.4 * (1.0 - std::cos(dt))).epsilon(1e-13));
  }
}

TEST_CASE("metastable population never exceeds four times the mean excitation") {
  const LatticeSpec spec = lattice(10);
  const auto sf = superfluid(spec);
  for (double dt = 0.0; dt < 50.0; dt += 0.37) {
    const double n = metastable_population_small_angle(sf, 0.5, {5, 5}, dt, spec);
    CHECK(n >= -1e-12);
    CHECK(n <= 2.0 + 1e-12);
  }
  CHECK_THROWS_AS(metastable_population_small_angle(sf, -1.0, {1, 1}, 1.0, spec), std::invalid_argument);
}

TEST_CASE("partial-condensation closed form limits") {
  const LatticeSpec spec = lattice(10);
  CHECK(metastable_partial_condensation(40, 60, 1.0, {1, 1}, 0.0, spec) == doctest::Approx(0.0).epsilon(1e-15));
  for (double dt : {0.7, 12.0}) {
    CHECK(metastable_partial_condensation(100, 0, 1.0, {1, 1}, dt, spec) ==
          doctest::Approx(2.0 * (1.0 - std::cos(condensate_phase({1, 1}, dt, spec)))).epsilon(1e-14));
    CHECK(metastable_partial_condensation(0, 100, 1.0, {1, 1}, dt, spec) ==
          doctest::Approx(2.0 * (1.0 - phase_sum(spec, {1, 1}, dt))).epsilon(1e-14));
  }
  CHECK_THROWS_AS(metastable_partial_condensation(50, 10, 1.0, {1, 1}, 1.0, spec), std::invalid_argument);
  CHECK_THROWS_AS(metastable_partial_condensation(50, 50, -1.0, {1, 1}, 1.0, spec), std::invalid_argument);
}

TEST_CASE("partial-condensation closed form matches the general cosine sum") {
  const LatticeSpec spec = lattice(100);
  const auto d = partial_condensation(spec, 5000, 5000);
  for (double dt : uniform_time_grid(100.0, 51)) {
    CHECK(std::abs(metastable_partial_condensation(5000, 5000, 0.8, {1, 1}, dt, spec) -
                   metastable_population_small_angle(d, 0.8, {1, 1}, dt, spec)) < 1e-12);
  }
}

TEST_CASE("small-angle population agrees with the exact sequence") {
  const LatticeSpec spec = lattice(20);
  const double a = 0.01;
  for (const auto& d : {superfluid(spec), uniform(spec, Statistics::kBose), metallic(spec)}) {
    const double nbar = mean_excitations(d.total(), a);
    for (double dt : {0.5, 3.0, 20.0}) {
      const double exact = expected_sigma_z(d, {a, -a, {1, 1}, dt}, spec) + 0.5 * d.total();
      const double approx = metastable_population_small_angle(d, nbar, {1, 1}, dt, spec);
      CHECK(std::abs(approx - exact) <= 1e-3 * std::abs(exact));
    }
  }
}

TEST_CASE("excited population of the full sequence") {
  const LatticeSpec spec = lattice(10);
  const auto d = partial_condensation(spec, 50, 50);
  for (double a : {0.01, 0.8}) {
    CHECK(metastable_population(d, {a, -a, {1, 1}, 0.0}, spec) == 0.0);
    CHECK(metastable_population(d, {a, -a, {1, 1}, 25.0}, lattice(10, 0.0)) == 0.0);
    for (double b : {-0.3, 1.2}) {
      for (double dt : {0.0, 4.0}) {
        const DriveParameters p{a, b, {1, 1}, dt};
        CHECK(metastable_population(d, p, spec) == doctest::Approx(expected_sigma_z(d, p, spec) + 50.0).epsilon(1e-12));
        const double direct = -50.0 * std::cos(a) * std::cos(b) +
                              0.5 * std::sin(a) * std::sin(b) * CoherentKernel(d, {1, 1}, spec).cosine_sum(dt);
        CHECK(expected_sigma_z(d, p, spec) == doctest::Approx(direct).epsilon(1e-12));
      }
    }
  }
}
