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

#include "dicke/classical_drive.hpp"

#include <cmath>
#include <stdexcept>

#include "dicke/superradiance.hpp"

namespace dicke {

double expected_sigma_z(const MomentumDistribution& dist, const DriveParameters& params,
                        const LatticeSpec& spec) {
  return metastable_population(dist, params, spec) - 0.5 * dist.total();
}

double metastable_population(const MomentumDistribution& dist, const DriveParameters& params,
                             const LatticeSpec& spec) {
  if (!std::isfinite(params.rotation_in) || !std::isfinite(params.rotation_out)) {
    throw std::invalid_argument("rotation angles must be finite");
  }
  const CoherentKernel kernel(dist, params.kappa, spec);
  const double plus = std::pow(std::sin(0.5 * (params.rotation_in + params.rotation_out)), 2);
  const double minus = std::pow(std::sin(0.5 * (params.rotation_in - params.rotation_out)), 2);
  const double atoms = kernel.atoms();
  return 0.5 * (plus + minus) * atoms + 0.5 * (plus - minus) * kernel.cosine_sum(params.dt);
}

double mean_excitations(double atoms, double rotation_in) {
  return atoms * rotation_in * rotation_in / 4.0;
}

double metastable_population_small_angle(const MomentumDistribution& dist, double nbar,
                                         Mode kappa, double dt, const LatticeSpec& spec) {
  if (nbar < 0.0) throw std::invalid_argument("mean excitation count must be non-negative");
  const CoherentKernel kernel(dist, kappa, spec);
  return 2.0 * nbar * (1.0 - kernel.cosine_sum(dt) / kernel.atoms());
}

double metastable_partial_condensation(double condensed, double distributed, double nbar,
                                       Mode kappa, double dt, const LatticeSpec& spec) {
  spec.validate();
  const double N = spec.num_sites();
  if (condensed < 0.0 || distributed < 0.0 || std::abs(condensed + distributed - N) > 1e-9 * N) {
    throw std::invalid_argument("partial condensation requires N1, N2 >= 0 and N1 + N2 = N");
  }
  if (nbar < 0.0) throw std::invalid_argument("mean excitation count must be non-negative");
  const double precession = std::cos(condensate_phase(kappa, dt, spec));
  return 2.0 * nbar *
         (1.0 - condensed / N * precession - distributed / N * phase_sum(spec, kappa, dt));
}

}  // namespace dicke
