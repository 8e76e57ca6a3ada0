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

#ifndef DICKE_DISTRIBUTIONS_HPP
#define DICKE_DISTRIBUTIONS_HPP

#include <span>
#include <string>
#include <vector>

#include "dicke/lattice.hpp"

namespace dicke {

enum class Spin { kUp = 0, kDown = 1 };

/// Ground-level momentum occupation n_s(k) of a lattice state.
///
/// Bosons carry a single channel, fermions one channel per spin. Occupations
/// are stored per channel in mode_index() order and are immutable once built.
class MomentumDistribution {
 public:
  /// Validates non-negativity (and n <= 1 for fermions) and that the
  /// occupations sum to `total_target` within 1e-9 relative.
  MomentumDistribution(Statistics statistics, int L, std::vector<std::vector<double>> channels,
                       double total_target, std::string label = {},
                       double chemical_potential = 0.0);

  Statistics statistics() const { return statistics_; }
  int L() const { return L_; }
  int num_modes() const { return L_ * L_; }
  int num_channels() const { return static_cast<int>(channels_.size()); }
  const std::string& label() const { return label_; }

  double occupation(Mode k, int channel = 0) const;
  std::span<const double> channel(int c) const { return channels_.at(static_cast<std::size_t>(c)); }

  /// Sum over every mode and channel.
  double total() const { return total_; }
  double total_target() const { return total_target_; }

  /// Chemical potential for the thermal constructors (0 otherwise).
  double chemical_potential() const { return chemical_potential_; }

 private:
  Statistics statistics_;
  int L_;
  std::vector<std::vector<double>> channels_;
  double total_target_;
  double total_;
  std::string label_;
  double chemical_potential_ = 0.0;
};

// All N bosons condensed at k = 0.
MomentumDistribution superfluid(const LatticeSpec& spec);

// n(k) = N1 delta_{k0} + N2 / N. Requires N1 + N2 = N.
MomentumDistribution partial_condensation(const LatticeSpec& spec, double condensed,
                                          double distributed);

// Every mode equally populated ("totally distributed"): n = 1 for bosons,
// n_s = 1/2 per spin for fermions, N atoms in total.
MomentumDistribution uniform(const LatticeSpec& spec, Statistics statistics);

// n(k) = 1 / (exp(beta (E_k - mu)) - 1) with mu fixed by the total. If the
// total cannot be reached below the band bottom, mu is pinned 1e-12 J below it
// and the remainder is placed in k = 0.
MomentumDistribution bose_einstein(const LatticeSpec& spec, double inverse_temperature,
                                   double total);

// n_s(k) = 1 / (exp(beta (E_k - mu)) + 1) in both spin channels; total <= 2N.
MomentumDistribution fermi_dirac(const LatticeSpec& spec, double inverse_temperature,
                                 double total);

// Half-filled Fermi sea: n_s(k) = 1 iff |k_x| + |k_y| < pi / l. The degenerate
// diamond edge is left empty, so the total is N - 2(L - 1).
MomentumDistribution metallic(const LatticeSpec& spec);

}  // namespace dicke

#endif  // DICKE_DISTRIBUTIONS_HPP
