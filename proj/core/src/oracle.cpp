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

#include "dicke/oracle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "dicke/error.hpp"

namespace dicke {

namespace {

using Complex = std::complex<double>;

bool is_fermi(const FockBasis& basis) { return basis.statistics() == Statistics::kFermi; }

// Same operator ordering rules as one_body_operator(), applied directly to a
// vector. Only components with nonzero amplitude are mapped, so a restricted
// basis is fine as long as the state never leaves it.
StateVector apply_terms(const StateVector& state, std::span<const OneBodyTerm> terms,
                        const FockBasis& basis) {
  if (static_cast<std::size_t>(state.size()) != basis.dimension()) {
    throw std::invalid_argument("state vector does not match the basis");
  }
  const bool fermi = is_fermi(basis);
  StateVector out = StateVector::Zero(state.size());
  for (Eigen::Index j = 0; j < state.size(); ++j) {
    const Complex amplitude = state[j];
    if (amplitude == 0.0) continue;
    const auto& source = basis.state(static_cast<std::size_t>(j));
    for (const OneBodyTerm& term : terms) {
      auto& n_a = source[static_cast<std::size_t>(term.annihilate)];
      if (n_a == 0) continue;
      FockBasis::Occupation image = source;
      double element = 0.0;
      auto parity = [&](int orbital) {
        int count = 0;
        for (int o = 0; o < orbital; ++o) count += image[static_cast<std::size_t>(o)];
        return (count % 2 == 0) ? 1.0 : -1.0;
      };
      element = fermi ? parity(term.annihilate) : std::sqrt(static_cast<double>(n_a));
      --image[static_cast<std::size_t>(term.annihilate)];
      auto& n_c = image[static_cast<std::size_t>(term.create)];
      if (fermi) {
        if (n_c != 0) continue;
        element *= parity(term.create);
      } else {
        element *= std::sqrt(static_cast<double>(n_c) + 1.0);
      }
      ++n_c;
      const auto i = basis.index_of(image);
      if (!i) throw std::out_of_range("operator maps the state outside the Fock basis");
      out[static_cast<Eigen::Index>(*i)] += term.coefficient * element * amplitude;
    }
  }
  return out;
}

std::vector<OneBodyTerm> exciton_terms(const FockBasis& basis, Mode kappa,
                                       ExcitonDirection direction) {
  const int sites = basis.lattice().num_sites();
  const int L = basis.lattice().L;
  std::vector<OneBodyTerm> terms;
  for (int mu = 0; mu < sites; ++mu) {
    const double angle = site_phase_angle(kappa, mu, L);
    for (int s = 0; s < basis.num_spins(); ++s) {
      const auto spin = static_cast<Spin>(s);
      const int ground = basis.orbital(mu, Level::kGround, spin);
      const int excited = basis.orbital(mu, Level::kExcited, spin);
      if (direction == ExcitonDirection::kCreate) {
        terms.push_back({excited, ground, std::polar(1.0, angle)});
      } else {
        terms.push_back({ground, excited, std::polar(1.0, -angle)});
      }
    }
  }
  return terms;
}

// Terms of a+^{to}_{site,spin} a^{from}_{site,spin}.
OneBodyTerm local_flip(const FockBasis& basis, int site, Spin spin, Level to, Level from) {
  return {basis.orbital(site, to, spin), basis.orbital(site, from, spin), 1.0};
}

SparseOperator diagonal_operator(const FockBasis& basis,
                                 const std::function<double(const FockBasis::Occupation&)>& value) {
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double v = value(basis.state(static_cast<std::size_t>(i)));
    if (v != 0.0) triplets.emplace_back(static_cast<int>(i), static_cast<int>(i), v);
  }
  SparseOperator op(dim, dim);
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

double expected_atoms(const FockBasis& basis, const StateVector& state) {
  double atoms = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    const auto& occ = basis.state(static_cast<std::size_t>(i));
    atoms += std::norm(state[i]) * std::accumulate(occ.begin(), occ.end(), 0.0);
  }
  return atoms / state.squaredNorm();
}

StateVector basis_vector(const FockBasis& basis, const FockBasis::Occupation& occupation) {
  const auto i = basis.index_of(occupation);
  if (!i) throw std::invalid_argument("occupation is not part of the basis");
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  v[static_cast<Eigen::Index>(*i)] = 1.0;
  return v;
}

}  // namespace

SparseOperator build_lattice_hamiltonian(const FockBasis& basis, const LatticeSpec& spec) {
  spec.validate();
  if (spec.L != basis.lattice().L) throw std::invalid_argument("lattice does not match the basis");
  const int sites = spec.num_sites();
  const Eigen::MatrixXd adjacency = adjacency_matrix(spec);
  const double scale = spec.hopping / LatticeSpec::kCoordination;

  std::vector<OneBodyTerm> hops;
  if (scale != 0.0) {
    for (int mu = 0; mu < sites; ++mu) {
      for (int nu = 0; nu < sites; ++nu) {
        if (adjacency(mu, nu) == 0.0) continue;
        for (int s = 0; s < basis.num_spins(); ++s) {
          for (Level level : {Level::kGround, Level::kExcited}) {
            hops.push_back({basis.orbital(mu, level, static_cast<Spin>(s)),
                            basis.orbital(nu, level, static_cast<Spin>(s)),
                            -scale * adjacency(mu, nu)});
          }
        }
      }
    }
  }
  SparseOperator h = one_body_operator(basis, hops);
  if (spec.interaction != 0.0) {
    const int per_site = 2 * basis.num_spins();
    h += diagonal_operator(basis, [&](const FockBasis::Occupation& occ) {
      double energy = 0.0;
      for (int mu = 0; mu < sites; ++mu) {
        int n = 0;
        for (int o = 0; o < per_site; ++o) n += occ[static_cast<std::size_t>(mu * per_site + o)];
        energy += 0.5 * spec.interaction * n * (n - 1);
      }
      return energy;
    });
  }
  h.makeCompressed();
  return h;
}

SparseOperator exciton_operator(const FockBasis& basis, Mode kappa, ExcitonDirection direction) {
  const auto terms = exciton_terms(basis, kappa, direction);
  return one_body_operator(basis, terms);
}

StateVector apply_exciton(const StateVector& state, Mode kappa, ExcitonDirection direction,
                          const FockBasis& basis) {
  const auto terms = exciton_terms(basis, kappa, direction);
  return apply_terms(state, terms, basis);
}

SparseOperator sigma_z_operator(const FockBasis& basis) {
  return diagonal_operator(basis, [&](const FockBasis::Occupation& occ) {
    double z = 0.0;
    for (std::size_t o = 0; o < occ.size(); ++o) {
      z += basis.level_of(static_cast<int>(o)) == Level::kExcited ? occ[o] : -double(occ[o]);
    }
    return 0.5 * z;
  });
}

SparseOperator excitation_number_operator(const FockBasis& basis) {
  return diagonal_operator(basis, [&](const FockBasis::Occupation& occ) {
    double n = 0.0;
    for (std::size_t o = 0; o < occ.size(); ++o) {
      if (basis.level_of(static_cast<int>(o)) == Level::kExcited) n += occ[o];
    }
    return n;
  });
}

Propagator::Propagator(const SparseOperator& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw std::invalid_argument("Hamiltonian must be square");
  }
  const SparseOperator adjoint = hamiltonian.adjoint();
  const double scale = std::max(1.0, hamiltonian.norm());
  if ((hamiltonian - adjoint).norm() > 1e-12 * scale) {
    throw std::invalid_argument("Hamiltonian is not Hermitian");
  }
  const Eigen::Index dim = hamiltonian.rows();
  diagonal_ = true;
  for (Eigen::Index k = 0; k < hamiltonian.outerSize() && diagonal_; ++k) {
    for (SparseOperator::InnerIterator it(hamiltonian, k); it; ++it) {
      if (it.row() != it.col() && it.value() != 0.0) {
        diagonal_ = false;
        break;
      }
    }
  }
  if (diagonal_) {
    const Eigen::VectorXcd d = hamiltonian.diagonal();
    eigenvalues_.resize(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) eigenvalues_[static_cast<std::size_t>(i)] = d[i].real();
    return;
  }
  const Eigen::MatrixXcd dense(hamiltonian);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hamiltonian eigendecomposition did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  eigenvalues_.assign(values.data(), values.data() + values.size());
  eigenvectors_ = solver.eigenvectors();
}

StateVector Propagator::evolve(const StateVector& state, double t) const {
  const auto dim = static_cast<Eigen::Index>(eigenvalues_.size());
  if (state.size() != dim) throw std::invalid_argument("state vector does not match the operator");
  Eigen::VectorXcd phases(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    phases[i] = std::polar(1.0, -eigenvalues_[static_cast<std::size_t>(i)] * t);
  }
  if (diagonal_) return phases.cwiseProduct(state);
  const Eigen::VectorXcd coefficients = eigenvectors_.adjoint() * state;
  return eigenvectors_ * phases.cwiseProduct(coefficients);
}

StateVector evolve(const StateVector& state, const SparseOperator& hamiltonian, double t) {
  return Propagator(hamiltonian).evolve(state, t);
}

StateVector site_product_state(const FockBasis& basis,
                               const std::vector<std::vector<int>>& ground_counts) {
  const int sites = basis.lattice().num_sites();
  if (ground_counts.size() != static_cast<std::size_t>(sites)) {
    throw std::invalid_argument("one occupation entry per site expected");
  }
  FockBasis::Occupation occ(static_cast<std::size_t>(basis.num_orbitals()), 0);
  for (int mu = 0; mu < sites; ++mu) {
    const auto& counts = ground_counts[static_cast<std::size_t>(mu)];
    if (counts.size() != static_cast<std::size_t>(basis.num_spins())) {
      throw std::invalid_argument("one count per channel expected");
    }
    for (int s = 0; s < basis.num_spins(); ++s) {
      const int n = counts[static_cast<std::size_t>(s)];
      if (n < 0) throw std::invalid_argument("occupation counts must be non-negative");
      occ[static_cast<std::size_t>(basis.orbital(mu, Level::kGround, static_cast<Spin>(s)))] =
          static_cast<std::uint8_t>(n);
    }
  }
  return basis_vector(basis, occ);
}

StateVector mott_state(const FockBasis& basis) {
  if (basis.statistics() != Statistics::kBose) {
    throw std::invalid_argument("the Mott state is bosonic; use neel_state for fermions");
  }
  return site_product_state(
      basis, std::vector<std::vector<int>>(static_cast<std::size_t>(basis.lattice().num_sites()), {1}));
}

StateVector neel_state(const FockBasis& basis) {
  if (basis.statistics() != Statistics::kFermi) {
    throw std::invalid_argument("the Neel state is fermionic");
  }
  const int L = basis.lattice().L;
  std::vector<std::vector<int>> counts;
  for (int mu = 0; mu < basis.lattice().num_sites(); ++mu) {
    const bool up = ((mu / L) + (mu % L)) % 2 == 0;
    counts.push_back(up ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
  }
  return site_product_state(basis, counts);
}

StateVector gutzwiller_state(
    const FockBasis& basis,
    const std::function<std::complex<double>(int site, std::span<const int> counts)>& local) {
  const int sites = basis.lattice().num_sites();
  const int spins = basis.num_spins();
  StateVector state = StateVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  std::vector<int> counts(static_cast<std::size_t>(spins));
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const auto& occ = basis.state(i);
    bool excited = false;
    for (std::size_t o = 0; o < occ.size(); ++o) {
      if (occ[o] != 0 && basis.level_of(static_cast<int>(o)) == Level::kExcited) excited = true;
    }
    if (excited) continue;
    Complex amplitude = 1.0;
    for (int mu = 0; mu < sites && amplitude != 0.0; ++mu) {
      for (int s = 0; s < spins; ++s) {
        counts[static_cast<std::size_t>(s)] =
            occ[static_cast<std::size_t>(basis.orbital(mu, Level::kGround, static_cast<Spin>(s)))];
      }
      amplitude *= local(mu, counts);
    }
    state[static_cast<Eigen::Index>(i)] = amplitude;
  }
  const double norm = state.norm();
  if (norm == 0.0) throw std::invalid_argument("Gutzwiller amplitudes vanish on the basis");
  return state / norm;
}

EmissionOracle::EmissionOracle(FockBasis basis, const LatticeSpec& spec)
    : basis_(std::move(basis)), spec_(spec), propagator_(build_lattice_hamiltonian(basis_, spec)) {}

std::complex<double> EmissionOracle::amplitude(const StateVector& initial,
                                               const ProbeGeometry& geometry, double dt) const {
  const StateVector excited = apply_exciton(initial, geometry.kappa_in, ExcitonDirection::kCreate, basis_);
  const StateVector emitted = apply_exciton(propagator_.evolve(excited, dt), geometry.kappa_out,
                                            ExcitonDirection::kAnnihilate, basis_);
  return propagator_.evolve(initial, dt).dot(emitted);
}

double EmissionOracle::normalized_peak(const StateVector& initial, const ProbeGeometry& geometry,
                                       double dt) const {
  const double atoms = expected_atoms(basis_, initial);
  if (atoms <= 0.0) throw std::invalid_argument("the initial state holds no atoms");
  return std::norm(amplitude(initial, geometry, dt)) / (atoms * atoms);
}

double oracle_separable_check(const std::vector<std::vector<int>>& ground_counts,
                              const ProbeGeometry& geometry, double dt, const LatticeSpec& spec) {
  spec.validate();
  if (ground_counts.empty()) throw std::invalid_argument("site occupations are empty");
  const std::size_t channels = ground_counts.front().size();
  if (channels != 1 && channels != 2) throw std::invalid_argument("one or two channels expected");
  const Statistics statistics = channels == 1 ? Statistics::kBose : Statistics::kFermi;
  int particles = 0;
  std::vector<double> site_totals;
  for (const auto& counts : ground_counts) {
    const int n = std::accumulate(counts.begin(), counts.end(), 0);
    site_totals.push_back(n);
    particles += n;
  }
  BasisOptions options;
  options.max_excited = 1;
  EmissionOracle oracle(FockBasis::enumerate(spec, statistics, particles, options), spec);
  const StateVector initial = site_product_state(oracle.basis(), ground_counts);
  return std::abs(oracle.normalized_peak(initial, geometry, dt) -
                  separable_peak(site_totals, geometry, spec));
}

double oracle_classical_sequence(const FockBasis& basis, const StateVector& initial,
                                 const DriveParameters& params, const LatticeSpec& spec) {
  const SparseOperator raise = exciton_operator(basis, params.kappa, ExcitonDirection::kCreate);
  const SparseOperator sigma_x = 0.5 * (raise + SparseOperator(raise.adjoint()));
  const Propagator rotation(sigma_x);
  const Propagator lattice(build_lattice_hamiltonian(basis, spec));
  StateVector psi = rotation.evolve(initial, params.rotation_in);
  psi = lattice.evolve(psi, params.dt);
  psi = rotation.evolve(psi, params.rotation_out);
  return psi.dot(sigma_z_operator(basis) * psi).real() / psi.squaredNorm();
}

std::complex<double> site_correlator(const FockBasis& basis, const Propagator& propagator,
                                     const StateVector& state, const std::array<int, 4>& sites,
                                     const std::array<Spin, 4>& spins, double t, double t_prime) {
  const auto [mu, nu, rho, eta] = sites;
  const OneBodyTerm d = local_flip(basis, nu, spins[1], Level::kExcited, Level::kGround);
  const OneBodyTerm c = local_flip(basis, mu, spins[0], Level::kGround, Level::kExcited);
  const OneBodyTerm b = local_flip(basis, rho, spins[2], Level::kExcited, Level::kGround);
  const OneBodyTerm a = local_flip(basis, eta, spins[3], Level::kGround, Level::kExcited);
  auto apply = [&](const OneBodyTerm& term, const StateVector& v) {
    return apply_terms(v, std::span<const OneBodyTerm>(&term, 1), basis);
  };
  // A(t) B(t') C(t') D(t) = U+(t) A U(t - t') B C U(t' - t) D U(t).
  const StateVector left = propagator.evolve(state, t);
  StateVector w = apply(d, left);
  w = propagator.evolve(w, t_prime - t);
  w = apply(b, apply(c, w));
  w = propagator.evolve(w, t - t_prime);
  w = apply(a, w);
  return left.dot(w);
}

std::complex<double> oracle_four_point(const FockBasis& basis, const StateVector& state,
                                       const Mode& k, const Mode& q, const Mode& kappa_in,
                                       const Mode& kappa_out, Spin s1, Spin s2) {
  const int L = basis.lattice().L;
  const auto inner = mode_bilinear_terms(basis, subtract(k, kappa_out, L), Level::kGround,
                                         subtract(k, kappa_in, L), Level::kGround, s1);
  const auto outer = mode_bilinear_terms(basis, subtract(q, kappa_in, L), Level::kGround,
                                         subtract(q, kappa_out, L), Level::kGround, s2);
  const StateVector v = apply_terms(apply_terms(state, inner, basis), outer, basis);
  return state.dot(v);
}

}  // namespace dicke
