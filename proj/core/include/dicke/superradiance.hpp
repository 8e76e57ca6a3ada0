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

#ifndef DICKE_SUPERRADIANCE_HPP
#define DICKE_SUPERRADIANCE_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "dicke/distributions.hpp"
#include "dicke/lattice.hpp"

namespace dicke {

// Wave vectors of the absorbed and emitted photon, restricted to lattice
// vectors.
struct ProbeGeometry {
  Mode kappa_in;
  Mode kappa_out;
};

/// Occupation-weighted dephasing sum for one distribution and wave vector.
///
/// Stores, for every occupied (p, s), the weight n_s(p - kappa) and the
/// frequency (J/Z)(T_p - T_{p-kappa}), so each time sample is a single O(N)
/// pass in a fixed order. The result is bit-identical however samples are
/// scheduled.
class CoherentKernel {
 public:
  CoherentKernel(const MomentumDistribution& dist, Mode kappa, const LatticeSpec& spec);

  // C(dt) = (1/N_atoms) sum_{p,s} n_s(p - kappa) exp{i (J/Z)(T_p - T_{p-kappa}) dt}.
  std::complex<double> amplitude(double dt) const;

  // sum_{p,s} n_s(p - kappa) cos phi_p^kappa(dt), not normalized.
  double cosine_sum(double dt) const;

  double atoms() const { return atoms_; }

 private:
  std::vector<double> weights_;
  std::vector<double> frequencies_;
  double atoms_ = 0.0;
};

// Normalized coherent amplitude C(dt). The normalization uses the atom count
// of the distribution itself, so C(0) = 1 for every state.
std::complex<double> coherent_amplitude(const MomentumDistribution& dist, Mode kappa, double dt,
                                        const LatticeSpec& spec);

// Uniform-weight phase sum J(dt) = (1/N) sum_p exp{i (J/Z)(T_p - T_{p-kappa}) dt}.
std::complex<double> phase_sum_complex(const LatticeSpec& spec, Mode kappa, double dt);

// Real part of phase_sum_complex(); the imaginary part vanishes by the
// p -> kappa - p symmetry.
double phase_sum(const LatticeSpec& spec, Mode kappa, double dt);

// Small-kappa approximation J0(2 (J dt / Z) kappa_x l) J0(2 (J dt / Z) kappa_y l).
double bessel_approx(Mode kappa, double dt, const LatticeSpec& spec);

// Normalized superradiance peak P / (N^2 P_single) = |C(dt)|^2 at
// kappa_in = kappa_out. Returns 0 otherwise: only O(N) incoherent emission is
// left there.
double normalized_peak(const MomentumDistribution& dist, const ProbeGeometry& geometry, double dt,
                       const LatticeSpec& spec);

// Separable (J = 0) peak |sum_mu exp{-i (kout - kin).r_mu} n_mu|^2 / N_atoms^2
// for real-space site occupations indexed like site_position().
double separable_peak(std::span<const double> site_occupations, const ProbeGeometry& geometry,
                      const LatticeSpec& spec);

// Peak after a sudden Mott (or Mott-Neel) -> U = 0 quench: |J(dt)|^2.
double quench_peak(const LatticeSpec& spec, Mode kappa, double dt);

// Peak after an adiabatic transition: 1 for bosons; |J(dt)|^2 for fermions,
// valid for small |kappa| l.
double adiabatic_peak(Statistics statistics, const LatticeSpec& spec, Mode kappa, double dt);

enum class StateKind { kSuperfluid, kPartial, kThermal, kMetallic, kUniform, kMott, kNeel };
enum class Transition { kNone, kQuench, kAdiabatic };

struct StateSelector {
  StateKind kind = StateKind::kUniform;
  double condensed = 0.0;    // partial: N1
  double distributed = 0.0;  // partial: N2
  double inverse_temperature = 0.0;  // thermal
};

struct Scenario {
  Statistics statistics = Statistics::kBose;
  StateSelector state;
  Transition transition = Transition::kNone;
};

std::string describe(const Scenario& scenario);

// Momentum distribution for k-space states; throws std::invalid_argument for
// Mott/Neel (real-space states) and for states that do not exist for the
// requested statistics.
MomentumDistribution make_distribution(const StateSelector& state, Statistics statistics,
                                       const LatticeSpec& spec);

struct EmissionCurve {
  Scenario scenario;
  std::string description;
  // Set for the fermionic adiabatic branch, which relies on a small-kappa
  // commutator approximation.
  bool approximate = false;
  std::vector<double> delta_t;
  std::vector<double> values;
};

// `steps` equally spaced samples on [0, tmax].
std::vector<double> uniform_time_grid(double tmax, int steps);

EmissionCurve emission_curve(const Scenario& scenario, std::span<const double> dt_grid,
                             const LatticeSpec& spec, const ProbeGeometry& geometry);

}  // namespace dicke

#endif  // DICKE_SUPERRADIANCE_HPP
