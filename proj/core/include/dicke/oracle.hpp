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

#ifndef DICKE_ORACLE_HPP
#define DICKE_ORACLE_HPP

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dicke/classical_drive.hpp"
#include "dicke/fock_basis.hpp"
#include "dicke/superradiance.hpp"

namespace dicke {

// Brute-force reference for the analytic emission formulas on tiny lattices.
// Everything is computed in the real-space Fock basis, independently of the
// k-space closed forms.

enum class ExcitonDirection { kCreate, kAnnihilate };

// Two-level lattice Hamiltonian
//   -(J/Z) sum T_{mu nu} a+_{mu s l} a_{nu s l} + (U/2) sum_mu n_mu (n_mu - 1),
// with n_mu the total atom count on site mu.
SparseOperator build_lattice_hamiltonian(const FockBasis& basis, const LatticeSpec& spec);

// Sigma^+(kappa) = sum_{mu,s} a+^{ex}_{mu s} a^{gr}_{mu s} exp(i kappa.r_mu), or its adjoint.
SparseOperator exciton_operator(const FockBasis& basis, Mode kappa, ExcitonDirection direction);

StateVector apply_exciton(const StateVector& state, Mode kappa, ExcitonDirection direction,
                          const FockBasis& basis);

// (1/2) sum (n^ex - n^gr), diagonal.
SparseOperator sigma_z_operator(const FockBasis& basis);

// Total excited-level atom count, diagonal.
SparseOperator excitation_number_operator(const FockBasis& basis);

/// Exact propagator exp(-i H t) of a Hermitian operator.
///
/// Diagonal operators are exponentiated entrywise; anything else goes through
/// a full dense eigendecomposition, which is fine for the few-thousand-state
/// bases the oracle uses.
class Propagator {
 public:
  explicit Propagator(const SparseOperator& hamiltonian);

  StateVector evolve(const StateVector& state, double t) const;
  std::span<const double> eigenvalues() const { return {eigenvalues_.data(), eigenvalues_.size()}; }

 private:
  bool diagonal_ = false;
  std::vector<double> eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

// Throws std::invalid_argument for a non-Hermitian operator.
StateVector evolve(const StateVector& state, const SparseOperator& hamiltonian, double t);

// Initial states. All atoms sit in the ground level.
StateVector mott_state(const FockBasis& basis);   // bosons: one atom per site
StateVector neel_state(const FockBasis& basis);   // fermions: up on (x+y) even, down otherwise
// Site-product Fock state: ground_counts[site][channel] atoms.
StateVector site_product_state(const FockBasis& basis,
                               const std::vector<std::vector<int>>& ground_counts);
// Gutzwiller product prod_mu (sum_c psi_mu(c) |c>_mu) on a truncated basis;
// `local` returns the amplitude of the ground-level configuration of one
// site (one count per channel). Excited-level amplitudes are zero.
StateVector gutzwiller_state(const FockBasis& basis,
                             const std::function<std::complex<double>(int site, std::span<const int> counts)>& local);

/// First-order emission amplitude
///   A(dt) = < U(dt) psi | Sigma^-(kappa_out) U(dt) Sigma^+(kappa_in) | psi >
/// under the lattice Hamiltonian, and the normalized peak |A|^2 / N^2.
class EmissionOracle {
 public:
  EmissionOracle(FockBasis basis, const LatticeSpec& spec);

  const FockBasis& basis() const { return basis_; }
  std::complex<double> amplitude(const StateVector& initial, const ProbeGeometry& geometry,
                                 double dt) const;
  double normalized_peak(const StateVector& initial, const ProbeGeometry& geometry,
                         double dt) const;

 private:
  FockBasis basis_;
  LatticeSpec spec_;
  Propagator propagator_;
};

// Deviation between the exact peak of a site-product Fock state (evolved
// under J and U of `spec`) and the separable closed form.
double oracle_separable_check(const std::vector<std::vector<int>>& ground_counts,
                              const ProbeGeometry& geometry, double dt, const LatticeSpec& spec);

// <Sigma^z> after exp(-i a Sigma^x), evolution by dt, exp(-i b Sigma^x).
double oracle_classical_sequence(const FockBasis& basis, const StateVector& initial,
                                 const DriveParameters& params, const LatticeSpec& spec);

// Site correlator with Heisenberg operators at absorption time t and emission
// time t_prime:
//   < a+gr_{eta s4} aex_{eta s4}(t) a+ex_{rho s3} agr_{rho s3}(t')
//     a+gr_{mu s1} aex_{mu s1}(t') a+ex_{nu s2} agr_{nu s2}(t) >.
// sites = {mu, nu, rho, eta}, spins = {s1, s2, s3, s4}.
std::complex<double> site_correlator(const FockBasis& basis, const Propagator& propagator,
                                     const StateVector& state, const std::array<int, 4>& sites,
                                     const std::array<Spin, 4>& spins, double t, double t_prime);

// < a+_{q-kin,s2} a_{q-kout,s2} a+_{k-kout,s1} a_{k-kin,s1} > evaluated in the
// Fock basis.
std::complex<double> oracle_four_point(const FockBasis& basis, const StateVector& state,
                                       const Mode& k, const Mode& q, const Mode& kappa_in,
                                       const Mode& kappa_out, Spin s1 = Spin::kUp,
                                       Spin s2 = Spin::kUp);

}  // namespace dicke

#endif  // DICKE_ORACLE_HPP
