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

#ifndef DICKE_LATTICE_HPP
#define DICKE_LATTICE_HPP

#include <array>
#include <compare>
#include <vector>

#include <Eigen/Dense>

namespace dicke {

enum class Statistics { kBose, kFermi };

const char* to_string(Statistics s);

// Periodic L x L square lattice. Units: hbar = 1, so times are measured in
// 1/hopping when hopping = 1.
struct LatticeSpec {
  static constexpr int kCoordination = 4;

  int L = 2;
  double spacing = 1.0;
  double hopping = 1.0;
  double interaction = 0.0;

  int num_sites() const { return L * L; }

  // Throws std::invalid_argument for odd or non-positive L, negative hopping
  // or negative interaction. hopping = 0 is the frozen-lattice limit.
  void validate() const;
};

// Reciprocal-lattice vector k = 2*pi/(L*spacing) * (n, m), stored as integer
// indices in the canonical range (-L/2, L/2].
struct Mode {
  int n = 0;
  int m = 0;

  friend auto operator<=>(const Mode&, const Mode&) = default;
};

// Reduces an index pair into the canonical Brillouin-zone range.
Mode canonical(Mode k, int L);
Mode add(Mode a, Mode b, int L);
Mode subtract(Mode a, Mode b, int L);
Mode negate(Mode a, int L);
bool on_grid(Mode k, int L);

// Row-major position of a canonical mode (by n, then m) in mode_grid().
int mode_index(Mode k, int L);
Mode mode_at(int index, int L);

// All L^2 canonical modes, row-major by n then m.
std::vector<Mode> mode_grid(const LatticeSpec& spec);

// Cartesian wave vector (k_x, k_y).
std::array<double, 2> wave_vector(Mode k, const LatticeSpec& spec);

// Fourier transform of the adjacency matrix, 2[cos(k_x l) + cos(k_y l)].
double adjacency_ft(Mode k, const LatticeSpec& spec);

// Single-particle energy E_k = -(J/Z) T_k of the U = 0 lattice.
double dispersion(Mode k, const LatticeSpec& spec);

// T_k for every mode, indexed by mode_index().
std::vector<double> adjacency_ft_table(const LatticeSpec& spec);

// Interaction-picture phase -(J/Z)(T_p - T_{p-k}) t picked up by the exciton
// operator component that moves an atom from p-k into p.
double hopping_phase(Mode p, Mode k, double t, const LatticeSpec& spec);

// Global phase of the condensate, -hopping_phase(kappa, kappa, t).
double condensate_phase(Mode kappa, double t, const LatticeSpec& spec);

// Real-space sites, index mu = x * L + y at position spacing * (x, y).
std::array<double, 2> site_position(int site, const LatticeSpec& spec);

// Phase exp(i k.r_mu) evaluated from integer indices, so that it is exact on
// the lattice grid.
double site_phase_angle(Mode k, int site, int L);

// Nearest-neighbour adjacency with periodic boundaries. For L = 2 the two
// neighbours along each axis coincide and the entry carries multiplicity 2, so
// every row still sums to Z = 4.
Eigen::MatrixXd adjacency_matrix(const LatticeSpec& spec);

}  // namespace dicke

#endif  // DICKE_LATTICE_HPP
