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

#ifndef DICKE_CLASSICAL_DRIVE_HPP
#define DICKE_CLASSICAL_DRIVE_HPP

#include "dicke/distributions.hpp"
#include "dicke/lattice.hpp"

namespace dicke {

// Rotate - wait - rotate sequence driven by a classical two-photon field.
// The angles are the pulse areas 2 g int A_eff dt of the two laser periods.
// Thermal inverse temperatures are never called beta here; rotation_out is
// the second pulse angle.
struct DriveParameters {
  double rotation_in = 0.0;
  double rotation_out = 0.0;
  Mode kappa;
  double dt = 0.0;
};

// Quasispin <Sigma^z> after the full sequence:
//   -(N/2) cos(a) cos(b) + (1/2) sin(a) sin(b) sum_{p,s} n_s(p-kappa) cos phi_p^kappa(dt).
double expected_sigma_z(const MomentumDistribution& dist, const DriveParameters& params,
                        const LatticeSpec& spec);

// Excited-level population <Sigma^z> + N/2 after the same sequence, written
// with half-angle sines so that perfect reversal gives an exact zero:
//   (N/2)(s+ + s-) + (1/2)(s+ - s-) sum_{p,s} n_s(p-kappa) cos phi_p^kappa(dt),
// s+- = sin^2((a +- b)/2).
double metastable_population(const MomentumDistribution& dist, const DriveParameters& params,
                             const LatticeSpec& spec);

// Mean number of atoms excited by a first pulse of angle alpha << 1: N alpha^2 / 4.
double mean_excitations(double atoms, double rotation_in);

// Metastable population left after a weak pulse pair with rotation_out = -rotation_in:
//   2 nbar (1 - (1/N) sum_{p,s} n_s(p-kappa) cos phi_p^kappa(dt)).
double metastable_population_small_angle(const MomentumDistribution& dist, double nbar,
                                         Mode kappa, double dt, const LatticeSpec& spec);

// Closed form of the above for the partial condensation state:
//   2 nbar (1 - (N1/N) cos varphi(dt) - (N2/N) J(dt)).
double metastable_partial_condensation(double condensed, double distributed, double nbar,
                                       Mode kappa, double dt, const LatticeSpec& spec);

}  // namespace dicke

#endif  // DICKE_CLASSICAL_DRIVE_HPP
