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

#include "dicke/superradiance.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

void check_compatible(const MomentumDistribution& dist, const LatticeSpec& spec) {
  spec.validate();
  if (dist.L() != spec.L) throw std::invalid_argument("distribution and lattice sizes differ");
  if (!(dist.total() > 0.0)) throw std::invalid_argument("distribution holds no atoms");
  if (std::abs(dist.total() - dist.total_target()) > 1e-9 * dist.total_target()) {
    throw std::invalid_argument("distribution total does not match its atom count");
  }
}

}  // namespace

CoherentKernel::CoherentKernel(const MomentumDistribution& dist, Mode kappa,
                               const LatticeSpec& spec) {
  check_compatible(dist, spec);
  const int L = spec.L;
  const Mode k = canonical(kappa, L);
  const std::vector<double> T = adjacency_ft_table(spec);
  const double rate = spec.hopping / LatticeSpec::kCoordination;
  for (int c = 0; c < dist.num_channels(); ++c) {
    const auto occ = dist.channel(c);
    for (int i = 0; i < spec.num_sites(); ++i) {
      const Mode p = mode_at(i, L);
      const int shifted = mode_index(subtract(p, k, L), L);
      const double w = occ[static_cast<std::size_t>(shifted)];
      if (w == 0.0) continue;
      weights_.push_back(w);
      frequencies_.push_back(rate * (T[static_cast<std::size_t>(i)] - T[static_cast<std::size_t>(shifted)]));
    }
  }
  atoms_ = dist.total();
}

std::complex<double> CoherentKernel::amplitude(double dt) const {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double angle = frequencies_[i] * dt;
    re += weights_[i] * std::cos(angle);
    im += weights_[i] * std::sin(angle);
  }
  return {re / atoms_, im / atoms_};
}

double CoherentKernel::cosine_sum(double dt) const {
  double s = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) s += weights_[i] * std::cos(frequencies_[i] * dt);
  return s;
}

std::complex<double> coherent_amplitude(const MomentumDistribution& dist, Mode kappa, double dt,
                                        const LatticeSpec& spec) {
  return CoherentKernel(dist, kappa, spec).amplitude(dt);
}

std::complex<double> phase_sum_complex(const LatticeSpec& spec, Mode kappa, double dt) {
  spec.validate();
  const int L = spec.L;
  const Mode k = canonical(kappa, L);
  const std::vector<double> T = adjacency_ft_table(spec);
  const double rate = spec.hopping / LatticeSpec::kCoordination;
  double re = 0.0;
  double im = 0.0;
  for (int i = 0; i < spec.num_sites(); ++i) {
    const int shifted = mode_index(subtract(mode_at(i, L), k, L), L);
    const double angle =
        rate * (T[static_cast<std::size_t>(i)] - T[static_cast<std::size_t>(shifted)]) * dt;
    re += std::cos(angle);
    im += std::sin(angle);
  }
  const double N = spec.num_sites();
  return {re / N, im / N};
}

double phase_sum(const LatticeSpec& spec, Mode kappa, double dt) {
  return phase_sum_complex(spec, kappa, dt).real();
}

double bessel_approx(Mode kappa, double dt, const LatticeSpec& spec) {
  const auto kv = wave_vector(canonical(kappa, spec.L), spec);
  const double scale = 2.0 * spec.hopping * dt / LatticeSpec::kCoordination * spec.spacing;
  // J0 is even; libstdc++ rejects negative arguments.
  return std::cyl_bessel_j(0.0, std::abs(scale * kv[0])) *
         std::cyl_bessel_j(0.0, std::abs(scale * kv[1]));
}

double normalized_peak(const MomentumDistribution& dist, const ProbeGeometry& geometry, double dt,
                       const LatticeSpec& spec) {
  if (canonical(geometry.kappa_in, spec.L) != canonical(geometry.kappa_out, spec.L)) {
    check_compatible(dist, spec);
    return 0.0;
  }
  return std::norm(coherent_amplitude(dist, geometry.kappa_in, dt, spec));
}

double separable_peak(std::span<const double> site_occupations, const ProbeGeometry& geometry,
                      const LatticeSpec& spec) {
  spec.validate();
  if (site_occupations.size() != static_cast<std::size_t>(spec.num_sites())) {
    throw std::invalid_argument("separable_peak expects one occupation per lattice site");
  }
  const Mode transfer = subtract(geometry.kappa_out, geometry.kappa_in, spec.L);
  double re = 0.0;
  double im = 0.0;
  double atoms = 0.0;
  for (int mu = 0; mu < spec.num_sites(); ++mu) {
    const double n = site_occupations[static_cast<std::size_t>(mu)];
    if (n < 0.0) throw std::invalid_argument("site occupations must be non-negative");
    const double angle = -site_phase_angle(transfer, mu, spec.L);
    re += n * std::cos(angle);
    im += n * std::sin(angle);
    atoms += n;
  }
  if (!(atoms > 0.0)) throw std::invalid_argument("separable state holds no atoms");
  return (re * re + im * im) / (atoms * atoms);
}

double quench_peak(const LatticeSpec& spec, Mode kappa, double dt) {
  return std::norm(phase_sum_complex(spec, kappa, dt));
}

double adiabatic_peak(Statistics statistics, const LatticeSpec& spec, Mode kappa, double dt) {
  spec.validate();
  if (statistics == Statistics::kBose) return 1.0;
  return quench_peak(spec, kappa, dt);
}

std::string describe(const Scenario& scenario) {
  std::string s = to_string(scenario.statistics);
  s += ' ';
  switch (scenario.state.kind) {
    case StateKind::kSuperfluid: s += "superfluid"; break;
    case StateKind::kPartial:
      s += "partial:" + std::to_string(scenario.state.condensed) + "," +
           std::to_string(scenario.state.distributed);
      break;
    case StateKind::kThermal:
      s += "thermal:" + std::to_string(scenario.state.inverse_temperature);
      break;
    case StateKind::kMetallic: s += "metallic"; break;
    case StateKind::kUniform: s += "uniform"; break;
    case StateKind::kMott: s += "mott"; break;
    case StateKind::kNeel: s += "neel"; break;
  }
  switch (scenario.transition) {
    case Transition::kNone: break;
    case Transition::kQuench: s += " quench"; break;
    case Transition::kAdiabatic: s += " adiabatic"; break;
  }
  return s;
}

MomentumDistribution make_distribution(const StateSelector& state, Statistics statistics,
                                       const LatticeSpec& spec) {
  const bool bose = statistics == Statistics::kBose;
  switch (state.kind) {
    case StateKind::kSuperfluid:
      if (!bose) throw std::invalid_argument("the superfluid state is bosonic");
      return superfluid(spec);
    case StateKind::kPartial:
      if (!bose) throw std::invalid_argument("the partial condensation state is bosonic");
      return partial_condensation(spec, state.condensed, state.distributed);
    case StateKind::kThermal:
      return bose ? bose_einstein(spec, state.inverse_temperature, spec.num_sites())
                  : fermi_dirac(spec, state.inverse_temperature, spec.num_sites());
    case StateKind::kMetallic:
      if (bose) throw std::invalid_argument("the metallic state is fermionic");
      return metallic(spec);
    case StateKind::kUniform:
      return uniform(spec, statistics);
    case StateKind::kMott:
    case StateKind::kNeel:
      break;
  }
  throw std::invalid_argument("Mott and Neel states have no k-space occupation table");
}

std::vector<double> uniform_time_grid(double tmax, int steps) {
  if (steps < 2) throw std::invalid_argument("time grid needs at least 2 samples");
  if (!(tmax > 0.0) || !std::isfinite(tmax)) throw std::invalid_argument("tmax must be positive");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = tmax * i / (steps - 1);
  return grid;
}

namespace {

void check_grid(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i])) {
      throw std::invalid_argument("time samples must be finite and non-negative");
    }
    if (i > 0 && grid[i] < grid[i - 1]) throw std::invalid_argument("time grid must be monotone");
  }
}

void check_real_space_state(const Scenario& scenario) {
  const StateKind expected =
      scenario.statistics == Statistics::kBose ? StateKind::kMott : StateKind::kNeel;
  if (scenario.state.kind != expected) {
    throw std::invalid_argument(std::string("transitions start from the ") +
                                (expected == StateKind::kMott ? "mott" : "neel") + " state");
  }
}

}  // namespace

EmissionCurve emission_curve(const Scenario& scenario, std::span<const double> dt_grid,
                             const LatticeSpec& spec, const ProbeGeometry& geometry) {
  spec.validate();
  check_grid(dt_grid);
  EmissionCurve curve;
  curve.scenario = scenario;
  curve.description = describe(scenario);
  curve.delta_t.assign(dt_grid.begin(), dt_grid.end());
  curve.values.reserve(dt_grid.size());

  const bool coherent =
      canonical(geometry.kappa_in, spec.L) == canonical(geometry.kappa_out, spec.L);
  const Mode kappa = canonical(geometry.kappa_in, spec.L);

  switch (scenario.transition) {
    case Transition::kQuench:
      check_real_space_state(scenario);
      for (double dt : dt_grid) curve.values.push_back(coherent ? quench_peak(spec, kappa, dt) : 0.0);
      return curve;
    case Transition::kAdiabatic:
      check_real_space_state(scenario);
      curve.approximate = scenario.statistics == Statistics::kFermi;
      for (double dt : dt_grid) {
        curve.values.push_back(coherent ? adiabatic_peak(scenario.statistics, spec, kappa, dt) : 0.0);
      }
      return curve;
    case Transition::kNone:
      break;
  }

  if (scenario.state.kind == StateKind::kMott || scenario.state.kind == StateKind::kNeel) {
    check_real_space_state(scenario);
    const std::vector<double> ones(static_cast<std::size_t>(spec.num_sites()), 1.0);
    const double value = separable_peak(ones, geometry, spec);
    curve.values.assign(dt_grid.size(), value);
    return curve;
  }

  const MomentumDistribution dist = make_distribution(scenario.state, scenario.statistics, spec);
  if (!coherent) {
    curve.values.assign(dt_grid.size(), 0.0);
    return curve;
  }
  const CoherentKernel kernel(dist, kappa, spec);
  for (double dt : dt_grid) curve.values.push_back(std::norm(kernel.amplitude(dt)));
  return curve;
}

}  // namespace dicke
