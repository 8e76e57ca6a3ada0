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

#ifndef DICKE_FOCK_BASIS_HPP
#define DICKE_FOCK_BASIS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "dicke/distributions.hpp"
#include "dicke/lattice.hpp"

namespace dicke {

enum class Level { kGround = 0, kExcited = 1 };

using StateVector = Eigen::VectorXcd;
using SparseOperator = Eigen::SparseMatrix<std::complex<double>>;

struct BasisOptions {
  // Upper bound on the number of excited-level atoms (-1: unrestricted).
  int max_excited = -1;
  std::size_t dimension_cap = 1'000'000;
};

/// Occupation-number basis over single-particle orbitals (site, spin, level).
///
/// Orbitals are ordered globally by site, then spin, then level; the
/// canonical Fock state is prod_o (a+_o)^{n_o} |0> with o increasing, which
/// fixes the fermionic sign convention. Basis states are listed in the
/// lexicographic order of their occupation strings.
class FockBasis {
 public:
  using Occupation = std::vector<std::uint8_t>;

  // Every state with exactly `particles` atoms.
  static FockBasis enumerate(const LatticeSpec& spec, Statistics statistics, int particles,
                             BasisOptions options = {});

  // Every particle number, with per-orbital caps on ground and excited
  // occupations (fermions are capped at 1 regardless). Used for product
  // states without a definite atom number.
  static FockBasis truncated(const LatticeSpec& spec, Statistics statistics, int ground_cap,
                             int excited_cap, std::size_t dimension_cap = 1'000'000);

  const LatticeSpec& lattice() const { return spec_; }
  Statistics statistics() const { return statistics_; }
  int num_spins() const { return statistics_ == Statistics::kBose ? 1 : 2; }
  int num_orbitals() const { return spec_.num_sites() * num_spins() * 2; }
  int orbital(int site, Level level, Spin spin = Spin::kUp) const {
    return (site * num_spins() + (num_spins() == 1 ? 0 : static_cast<int>(spin))) * 2 +
           static_cast<int>(level);
  }
  int site_of(int orbital) const { return orbital / (2 * num_spins()); }
  Level level_of(int orbital) const { return static_cast<Level>(orbital % 2); }

  std::size_t dimension() const { return states_.size(); }
  const Occupation& state(std::size_t i) const { return states_[i]; }
  std::optional<std::size_t> index_of(const Occupation& occupation) const;

  // -1 when the basis mixes particle numbers.
  int particles() const { return particles_; }

 private:
  FockBasis(LatticeSpec spec, Statistics statistics, int particles)
      : spec_(spec), statistics_(statistics), particles_(particles) {}
  void add(Occupation occupation);

  LatticeSpec spec_;
  Statistics statistics_;
  int particles_;
  std::vector<Occupation> states_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

// Coefficient times a+_create a_annihilate.
struct OneBodyTerm {
  int create;
  int annihilate;
  std::complex<double> coefficient;
};

// Matrix of sum_terms c a+_i a_j on the basis. Throws std::out_of_range if
// an image state falls outside the basis.
SparseOperator one_body_operator(const FockBasis& basis, std::span<const OneBodyTerm> terms);

// Matrix of sum c_o a+_o mapping states of `from` into `to`.
SparseOperator creation_operator(const FockBasis& from, const FockBasis& to,
                                 std::span<const std::pair<int, std::complex<double>>> terms);

// Terms of the k-space bilinear a+_{create_mode} a_{annihilate_mode} at the
// given levels and spin, written in site orbitals.
std::vector<OneBodyTerm> mode_bilinear_terms(const FockBasis& basis, Mode create_mode,
                                             Level create_level, Mode annihilate_mode,
                                             Level annihilate_level, Spin spin = Spin::kUp);

// Normalized Fock state in the k basis, built by applying k-mode creation
// operators to the vacuum. `occupations[c][mode_index]` counts ground-level
// atoms in channel c (one channel for bosons, two spins for fermions).
struct PreparedState {
  FockBasis basis;
  StateVector state;
};
PreparedState k_space_fock_state(const LatticeSpec& spec, Statistics statistics,
                                 const std::vector<std::vector<int>>& occupations,
                                 BasisOptions options = {});

}  // namespace dicke

#endif  // DICKE_FOCK_BASIS_HPP
