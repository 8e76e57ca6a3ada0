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
#include <vector>

#include "dicke/superradiance.hpp"

using namespace dicke;

namespace {

LatticeSpec lattice(int L, double hopping = 1.0) {
  LatticeSpec spec;
  spec.L = L;
  spec.hopping = hopping;
  return spec;
}

constexpr double kBesselZero = 2.404825557695773;

// Metallic diamond translated by (pi, pi).
MomentumDistribution shifted_diamond(const LatticeSpec& spec) {
  const auto metal = metallic(spec);
  std::vector<std::vector<double>> channels(2, std::vector<double>(spec.num_sites()));
  for (Mode k : mode_grid(spec)) {
    for (int c = 0; c < 2; ++c) {
      channels[c][mode_index(add(k, {spec.L / 2, spec.L / 2}, spec.L), spec.L)] = metal.occupation(k, c);
    }
  }
  return MomentumDistribution(Statistics::kFermi, spec.L, channels, metal.total(), "shifted");
}

}  // namespace

TEST_CASE("phase sum is one at zero time and zero transfer") {
  const LatticeSpec spec = lattice(10);
  CHECK(phase_sum(spec, {3, 2}, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (double dt : {0.5, 7.0, 99.0}) CHECK(phase_sum(spec, {0, 0}, dt) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("phase sum on the 2 x 2 lattice at kappa = (pi, 0) is cos(J dt)") {
  for (double J : {1.0, 0.3}) {
    const LatticeSpec spec = lattice(2, J);
    for (double dt : {0.0, 0.4, 1.7, 12.5}) {
      CHECK(phase_sum(spec, {1, 0}, dt) == doctest::Approx(std::cos(J * dt)).epsilon(1e-14));
      CHECK(quench_peak(spec, {1, 0}, dt) == doctest::Approx(std::pow(std::cos(J * dt), 2)).epsilon(1e-13));
    }
  }
}

TEST_CASE("phase sum is real") {
  for (int L : {2, 4, 10, 100}) {
    const LatticeSpec spec = lattice(L);
    for (Mode k : {Mode{1, 1}, Mode{1, 0}, Mode{L / 2, 1 - L / 2}}) {
      for (double dt : {0.3, 5.0, 80.0}) CHECK(std::abs(phase_sum_complex(spec, k, dt).imag()) < 1e-12);
    }
  }
}

TEST_CASE("Bessel approximation basics") {
  const LatticeSpec spec = lattice(100);
  CHECK(bessel_approx({1, 1}, 0.0, spec) == 1.0);
  const double zero = kBesselZero * 100.0 / std::numbers::pi;
  CHECK(zero == doctest::Approx(76.548).epsilon(1e-4));
  CHECK(std::abs(bessel_approx({1, 1}, zero, spec)) < 1e-12);
  CHECK(bessel_approx({1, 0}, 30.0, spec) == doctest::Approx(std::cyl_bessel_j(0.0, 0.3 * std::numbers::pi)));
  CHECK(bessel_approx({-1, 1}, 30.0, spec) == bessel_approx({1, 1}, 30.0, spec));
}

TEST_CASE("Bessel approximation tracks the phase sum for small kappa") {
  const LatticeSpec spec = lattice(100);
  const auto grid = uniform_time_grid(100.0, 500);
  double worst = 0.0;
  for (double dt : grid) worst = std::max(worst, std::abs(phase_sum(spec, {1, 1}, dt) - bessel_approx({1, 1}, dt, spec)));
  CHECK(worst < 1e-2);
  double coarse = 0.0;
  for (double dt : grid) coarse = std::max(coarse, std::abs(phase_sum(spec, {10, 10}, dt) - bessel_approx({10, 10}, dt, spec)));
  CHECK(coarse > worst);
}

TEST_CASE("coherent amplitude of the superfluid is a pure phase") {
  const LatticeSpec spec = lattice(10);
  const auto sf = superfluid(spec);
  for (double dt : {0.0, 1.0, 33.0}) {
    const auto c = coherent_amplitude(sf, {1, 2}, dt, spec);
    CHECK(std::abs(c) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::arg(c) == doctest::Approx(std::remainder(condensate_phase({1, 2}, dt, spec), 2 * std::numbers::pi)).epsilon(1e-12));
    CHECK(normalized_peak(sf, {{1, 2}, {1, 2}}, dt, spec) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("coherent amplitude of the uniform state equals the phase sum") {
  const LatticeSpec spec = lattice(12);
  const auto u = uniform(spec, Statistics::kBose);
  const auto uf = uniform(spec, Statistics::kFermi);
  for (double dt : {0.5, 4.0, 40.0}) {
    const auto j = phase_sum_complex(spec, {1, 1}, dt);
    CHECK(std::abs(coherent_amplitude(u, {1, 1}, dt, spec) - j) < 1e-13);
    CHECK(std::abs(coherent_amplitude(uf, {1, 1}, dt, spec) - j) < 1e-13);
  }
}

TEST_CASE("coherent amplitude of partial condensation mixes condensate and phase sum") {
  const LatticeSpec spec = lattice(10);
  const auto d = partial_condensation(spec, 30, 70);
  for (double dt : {0.0, 2.0, 17.0}) {
    const std::complex<double> expected =
        (30.0 * std::polar(1.0, condensate_phase({1, 1}, dt, spec)) + 70.0 * phase_sum(spec, {1, 1}, dt)) / 100.0;
    CHECK(std::abs(coherent_amplitude(d, {1, 1}, dt, spec) - expected) < 1e-13);
  }
}

TEST_CASE("half-condensed peak settles near one quarter where the phase sum vanishes") {
  const LatticeSpec spec = lattice(100);
  const auto d = partial_condensation(spec, 5000, 5000);
  const double zero = kBesselZero * 100.0 / std::numbers::pi;
  CHECK(normalized_peak(d, {{1, 1}, {1, 1}}, zero, spec) == doctest::Approx(0.25).epsilon(0.04));
}

TEST_CASE("peak vanishes off the coherent direction") {
  const LatticeSpec spec = lattice(4);
  CHECK(normalized_peak(superfluid(spec), {{1, 1}, {1, 0}}, 2.0, spec) == 0.0);
}

TEST_CASE("kernel rejects mismatched lattices") {
  CHECK_THROWS_AS(coherent_amplitude(superfluid(lattice(4)), {1, 1}, 1.0, lattice(6)), std::invalid_argument);
}

TEST_CASE("metallic and Fermi-Dirac peaks follow the uniform bosonic curve") {
  const LatticeSpec spec = lattice(100);
  const auto grid = uniform_time_grid(100.0, 500);
  const CoherentKernel metal(metallic(spec), {1, 1}, spec);
  double worst = 0.0;
  for (double dt : grid) worst = std::max(worst, std::abs(std::norm(metal.amplitude(dt)) - quench_peak(spec, {1, 1}, dt)));
  CHECK(worst < 1e-2);
  for (double beta : {0.01, 1.0, 100.0}) {
    const CoherentKernel fd(fermi_dirac(spec, beta, spec.num_sites()), {1, 1}, spec);
    double dev = 0.0;
    for (double dt : grid) dev = std::max(dev, std::abs(std::norm(fd.amplitude(dt)) - std::norm(metal.amplitude(dt))));
    CHECK(dev < 1e-2);
  }
}

TEST_CASE("shifting the diamond by (pi, pi) leaves the peak unchanged") {
  for (int L : {4, 10, 100}) {
    const LatticeSpec spec = lattice(L);
    const CoherentKernel a(metallic(spec), {1, 1}, spec);
    const CoherentKernel b(shifted_diamond(spec), {1, 1}, spec);
    for (double dt : {0.0, 3.0, 41.0, 90.0}) {
      CHECK(std::abs(std::norm(a.amplitude(dt)) - std::norm(b.amplitude(dt))) < 1e-12);
      CHECK(std::abs(a.amplitude(dt) - std::conj(b.amplitude(dt))) < 1e-12);
    }
  }
}

TEST_CASE("separable peak of unit filling and of the checkerboard") {
  const LatticeSpec spec = lattice(4);
  const std::vector<double> ones(16, 1.0);
  CHECK(separable_peak(ones, {{1, 1}, {1, 1}}, spec) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(separable_peak(ones, {{1, 1}, {0, 1}}, spec) < 1e-30);
  std::vector<double> checker(16);
  for (int mu = 0; mu < 16; ++mu) checker[mu] = ((mu / 4 + mu % 4) % 2 == 0) ? 2.0 : 0.0;
  CHECK(separable_peak(checker, {{0, 1}, {2, -1}}, spec) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(separable_peak(checker, {{0, 1}, {0, 1}}, spec) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(separable_peak(checker, {{0, 1}, {1, 1}}, spec) < 1e-30);
  CHECK_THROWS_AS(separable_peak(std::vector<double>(15, 1.0), {}, spec), std::invalid_argument);
  CHECK_THROWS_AS(separable_peak(std::vector<double>(16, 0.0), {}, spec), std::invalid_argument);
}

TEST_CASE("quench and adiabatic peaks") {
  const LatticeSpec spec = lattice(100);
  const double zero = kBesselZero * 100.0 / std::numbers::pi;
  CHECK(quench_peak(spec, {1, 1}, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(quench_peak(spec, {0, 0}, 55.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(adiabatic_peak(Statistics::kBose, spec, {1, 1}, zero) == 1.0);
  CHECK(adiabatic_peak(Statistics::kFermi, spec, {1, 1}, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(adiabatic_peak(Statistics::kFermi, spec, {1, 1}, zero) < 1e-3);
  CHECK(adiabatic_peak(Statistics::kBose, spec, {1, 1}, zero) - quench_peak(spec, {1, 1}, zero) > 0.5);
}

TEST_CASE("time grid validation") {
  const auto g = uniform_time_grid(100.0, 500);
  CHECK(g.size() == 500);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 100.0);
  CHECK_THROWS_AS(uniform_time_grid(100.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(uniform_time_grid(0.0, 10), std::invalid_argument);
  const LatticeSpec spec = lattice(4);
  const std::vector<double> bad{0.0, 2.0, 1.0};
  CHECK_THROWS_AS(emission_curve({}, bad, spec, {{1, 1}, {1, 1}}), std::invalid_argument);
  const std::vector<double> negative{-1.0, 2.0};
  CHECK_THROWS_AS(emission_curve({}, negative, spec, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("emission curves per scenario") {
  const LatticeSpec spec = lattice(100);
  const auto grid = uniform_time_grid(100.0, 500);
  const ProbeGeometry geometry{{1, 1}, {1, 1}};

  Scenario sf{Statistics::kBose, {StateKind::kSuperfluid}, Transition::kNone};
  for (double v : emission_curve(sf, grid, spec, geometry).values) CHECK(std::abs(v - 1.0) < 1e-12);

  Scenario uni{Statistics::kBose, {StateKind::kUniform}, Transition::kNone};
  const auto u = emission_curve(uni, grid, spec, geometry);
  REQUIRE(u.values.size() == 500);
  CHECK(u.values.front() == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(u.values[i] - std::pow(bessel_approx({1, 1}, grid[i], spec), 2)) < 1e-2);
    CHECK(u.values[i] >= 0.0);
    CHECK(u.values[i] <= 1.0 + 1e-9);
  }

  StateSelector hot{StateKind::kThermal};
  hot.inverse_temperature = 0.01;
  const auto t = emission_curve({Statistics::kBose, hot, Transition::kNone}, grid, spec, geometry);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(std::abs(t.values[i] - u.values[i]) < 1e-2);

  const auto mott = emission_curve({Statistics::kBose, {StateKind::kMott}, Transition::kNone}, grid, spec, geometry);
  for (double v : mott.values) CHECK(v == 1.0);
  const auto neel_off = emission_curve({Statistics::kFermi, {StateKind::kNeel}, Transition::kNone}, grid, spec,
                                       {{1, 1}, {1, 0}});
  for (double v : neel_off.values) CHECK(v < 1e-30);

  const auto bq = emission_curve({Statistics::kBose, {StateKind::kMott}, Transition::kQuench}, grid, spec, geometry);
  const auto ba = emission_curve({Statistics::kBose, {StateKind::kMott}, Transition::kAdiabatic}, grid, spec, geometry);
  const auto fq = emission_curve({Statistics::kFermi, {StateKind::kNeel}, Transition::kQuench}, grid, spec, geometry);
  const auto fa = emission_curve({Statistics::kFermi, {StateKind::kNeel}, Transition::kAdiabatic}, grid, spec, geometry);
  CHECK_FALSE(ba.approximate);
  CHECK(fa.approximate);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(ba.values[i] == 1.0);
    CHECK(bq.values[i] == doctest::Approx(u.values[i]).epsilon(1e-12));
    CHECK(fq.values[i] == fa.values[i]);
  }
}

TEST_CASE("scenario validation") {
  const LatticeSpec spec = lattice(4);
  const std::vector<double> grid{0.0, 1.0};
  const ProbeGeometry g{{1, 1}, {1, 1}};
  CHECK_THROWS_AS(emission_curve({Statistics::kBose, {StateKind::kUniform}, Transition::kQuench}, grid, spec, g),
                  std::invalid_argument);
  CHECK_THROWS_AS(emission_curve({Statistics::kFermi, {StateKind::kMott}, Transition::kQuench}, grid, spec, g),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_distribution({StateKind::kSuperfluid}, Statistics::kFermi, spec), std::invalid_argument);
  CHECK_THROWS_AS(make_distribution({StateKind::kMetallic}, Statistics::kBose, spec), std::invalid_argument);
  CHECK_THROWS_AS(make_distribution({StateKind::kNeel}, Statistics::kFermi, spec), std::invalid_argument);
  CHECK(describe({Statistics::kFermi, {StateKind::kNeel}, Transition::kAdiabatic}) == "fermi neel adiabatic");
}
