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

#ifndef DICKE_CORRELATORS_HPP
#define DICKE_CORRELATORS_HPP

#include "dicke/distributions.hpp"
#include "dicke/lattice.hpp"

namespace dicke {

// Index set of the ground-level four-point function
//   < a+_{q-kin,s2} a_{q-kout,s2} a+_{k-kout,s1} a_{k-kin,s1} >.
// Spins are ignored for bosons.
struct CorrelatorQuery {
  Mode k;
  Mode q;
  Mode kappa_in;
  Mode kappa_out;
  Spin s1 = Spin::kUp;
  Spin s2 = Spin::kUp;
};

// kDiagonalState is exact for states diagonal in the k basis. kGaussian drops
// the term where all four operators act on one mode, as Wick's theorem gives.
enum class CorrelatorForm { kDiagonalState, kGaussian };

double bosonic_four_point(const MomentumDistribution& dist, const CorrelatorQuery& query,
                          CorrelatorForm form = CorrelatorForm::kDiagonalState);

double fermionic_four_point(const MomentumDistribution& dist, const CorrelatorQuery& query);

// Bosonic four-point function in the unit-filling Mott state:
// delta_{kin,kout} + 2 delta_{kq} - 2/N.
double mott_correlator(const CorrelatorQuery& query, int L);

// Spin-summed fermionic four-point function in the checkerboard Neel state:
// delta_{kin,kout} + delta_{kq} / 2. The exact value carries an additional
// -1/2 when k - q = (pi, pi); that term is O(1/N) in the emission peak and is
// not part of this closed form.
double neel_correlator_spin_summed(const CorrelatorQuery& query, int L);

enum class Ladder { kRaise, kLower };

// Matrix element of the collective exciton operators between Dicke states
// with n and n +- 1 excitations among N atoms.
double dicke_ladder_factor(int atoms, int excitations, Ladder direction);

}  // namespace dicke

#endif  // DICKE_CORRELATORS_HPP
