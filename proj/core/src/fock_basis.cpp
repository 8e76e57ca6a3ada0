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

#include "dicke/fock_basis.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace dicke {

namespace {

std::string key(const FockBasis::Occupation& occupation) {
  return {occupation.begin(), occupation.end()};
}

// Sign of moving an operator past the occupied orbitals before `orbital`.
double fermion_sign(const FockBasis::Occupation& occupation, int orbital) {
  int count = 0;
  for (int o = 0; o < orbital; ++o) count += occupation[static_cast<std::size_t>(o)];
  return (count % 2 == 0) ? 1.0 : -1.0;
}

// Applies a+_create a_annihilate to `occupation` in place; returns the matrix
// element, or 0 if the state is annihilated.
double apply_hop(FockBasis::Occupation& occupation, int create, int annihilate, bool fermi) {
  auto& n_a = occupation[static_cast<std::size_t>(annihilate)];
  if (n_a == 0) return 0.0;
  double amplitude = fermi ? fermion_sign(occupation, annihilate) : std::sqrt(static_cast<double>(n_a));
  --n_a;
  auto& n_c = occupation[static_cast<std::size_t>(create)];
  if (fermi) {
    if (n_c != 0) return 0.0;
    amplitude *= fermion_sign(occupation, create);
  } else {
    amplitude *= std::sqrt(static_cast<double>(n_c) + 1.0);
  }
  ++n_c;
  return amplitude;
}

}  // namespace

void FockBasis::add(Occupation occupation) {
  lookup_.emplace(key(occupation), states_.size());
  states_.push_back(std::move(occupation));
}

std::optional<std::size_t> FockBasis::index_of(const Occupation& occupation) const {
  const auto it = lookup_.find(key(occupation));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

FockBasis FockBasis::enumerate(const LatticeSpec& spec, Statistics statistics, int particles,
                               BasisOptions options) {
  spec.validate();
  if (particles < 0) throw std::invalid_argument("particle count must be non-negative");
  FockBasis basis(spec, statistics, particles);
  const int orbitals = basis.num_orbitals();
  const bool fermi = statistics == Statistics::kFermi;
  if (fermi && particles > orbitals) {
    throw std::invalid_argument("more fermions than single-particle orbitals");
  }

  Occupation current(static_cast<std::size_t>(orbitals), 0);
  std::function<void(int, int, int)> fill = [&](int orbital, int remaining, int excited) {
    if (orbital == orbitals) {
      if (remaining != 0) return;
      if (basis.states_.size() >= options.dimension_cap) {
        throw std::length_error("Fock basis exceeds the dimension cap");
      }
      basis.add(current);
      return;
    }
    const bool is_excited = basis.level_of(orbital) == Level::kExcited;
    int cap = fermi ? 1 : remaining;
    if (is_excited && options.max_excited >= 0) cap = std::min(cap, options.max_excited - excited);
    cap = std::min(cap, remaining);
    for (int c = 0; c <= cap; ++c) {
      current[static_cast<std::size_t>(orbital)] = static_cast<std::uint8_t>(c);
      fill(orbital + 1, remaining - c, excited + (is_excited ? c : 0));
    }
    current[static_cast<std::size_t>(orbital)] = 0;
  };
  fill(0, particles, 0);
  return basis;
}

FockBasis FockBasis::truncated(const LatticeSpec& spec, Statistics statistics, int ground_cap,
                               int excited_cap, std::size_t dimension_cap) {
  spec.validate();
  if (ground_cap < 0 || excited_cap < 0) throw std::invalid_argument("caps must be non-negative");
  FockBasis basis(spec, statistics, -1);
  const int orbitals = basis.num_orbitals();
  const bool fermi = statistics == Statistics::kFermi;
  Occupation current(static_cast<std::size_t>(orbitals), 0);
  std::function<void(int)> fill = [&](int orbital) {
    if (orbital == orbitals) {
      if (basis.states_.size() >= dimension_cap) {
        throw std::length_error("Fock basis exceeds the dimension cap");
      }
      basis.add(current);
      return;
    }
    int cap = basis.level_of(orbital) == Level::kExcited ? excited_cap : ground_cap;
    if (fermi) cap = std::min(cap, 1);
    for (int c = 0; c <= cap; ++c) {
      current[static_cast<std::size_t>(orbital)] = static_cast<std::uint8_t>(c);
      fill(orbital + 1);
    }
    current[static_cast<std::size_t>(orbital)] = 0;
  };
  fill(0);
  return basis;
}

SparseOperator one_body_operator(const FockBasis& basis, std::span<const OneBodyTerm> terms) {
  const bool fermi = basis.statistics() == Statistics::kFermi;
  std::vector<Eigen::Triplet<std::complex<double>>> triplets;
  for (std::size_t j = 0; j < basis.dimension(); ++j) {
    for (const OneBodyTerm& term : terms) {
      if (term.coefficient == 0.0) continue;
      FockBasis::Occupation image = basis.state(j);
      const double element = apply_hop(image, term.create, term.annihilate, fermi);
      if (element == 0.0) continue;
      const auto i = basis.index_of(image);
      if (!i) throw std::out_of_range("one-body operator leaves the Fock basis");
      triplets.emplace_back(static_cast<int>(*i), static_cast<int>(j), term.coefficient * element);
    }
  }
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  SparseOperator op(dim, dim);
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

SparseOperator creation_operator(const FockBasis& from, const FockBasis& to,
                                 std::span<const std::pair<int, std::complex<double>>> terms) {
  const bool fermi = from.statistics() == Statistics::kFermi;
  std::vector<Eigen::Triplet<std::complex<double>>> triplets;
  for (std::size_t j = 0; j < from.dimension(); ++j) {
    for (const auto& [orbital, coefficient] : terms) {
      FockBasis::Occupation image = from.state(j);
      auto& n = image[static_cast<std::size_t>(orbital)];
      double element = 0.0;
      if (fermi) {
        if (n != 0) continue;
        element = fermion_sign(image, orbital);
      } else {
        element = std::sqrt(static_cast<double>(n) + 1.0);
      }
      ++n;
      const auto i = to.index_of(image);
      if (!i) throw std::out_of_range("creation operator leaves the target basis");
      triplets.emplace_back(static_cast<int>(*i), static_cast<int>(j), coefficient * element);
    }
  }
  SparseOperator op(static_cast<Eigen::Index>(to.dimension()),
                    static_cast<Eigen::Index>(from.dimension()));
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

std::vector<OneBodyTerm> mode_bilinear_terms(const FockBasis& basis, Mode create_mode,
                                             Level create_level, Mode annihilate_mode,
                                             Level annihilate_level, Spin spin) {
  const LatticeSpec& spec = basis.lattice();
  const int N = spec.num_sites();
  std::vector<OneBodyTerm> terms;
  terms.reserve(static_cast<std::size_t>(N) * N);
  // a+_k = N^{-1/2} sum_mu e^{+i k.r_mu} a+_mu and a_k = N^{-1/2} sum_mu e^{-i k.r_mu} a_mu.
  for (int mu = 0; mu < N; ++mu) {
    for (int nu = 0; nu < N; ++nu) {
      const double angle = site_phase_angle(create_mode, mu, spec.L) -
                           site_phase_angle(annihilate_mode, nu, spec.L);
      terms.push_back({basis.orbital(mu, create_level, spin), basis.orbital(nu, annihilate_level, spin),
                       std::polar(1.0 / N, angle)});
    }
  }
  return terms;
}

PreparedState k_space_fock_state(const LatticeSpec& spec, Statistics statistics,
                                 const std::vector<std::vector<int>>& occupations,
                                 BasisOptions options) {
  spec.validate();
  const std::size_t channels = statistics == Statistics::kBose ? 1 : 2;
  if (occupations.size() != channels) {
    throw std::invalid_argument("one occupation table per channel expected");
  }
  const int N = spec.num_sites();
  FockBasis basis = FockBasis::enumerate(spec, statistics, 0, options);
  StateVector state = StateVector::Ones(1);
  int particles = 0;
  for (std::size_t c = 0; c < channels; ++c) {
    if (occupations[c].size() != static_cast<std::size_t>(N)) {
      throw std::invalid_argument("occupation table does not match L^2 modes");
    }
    for (int i = 0; i < N; ++i) {
      const Mode k = mode_at(i, spec.L);
      std::vector<std::pair<int, std::complex<double>>> terms;
      for (int mu = 0; mu < N; ++mu) {
        terms.emplace_back(basis.orbital(mu, Level::kGround, static_cast<Spin>(c)),
                           std::polar(1.0 / std::sqrt(static_cast<double>(N)),
                                      site_phase_angle(k, mu, spec.L)));
      }
      for (int repeat = 0; repeat < occupations[c][static_cast<std::size_t>(i)]; ++repeat) {
        FockBasis next = FockBasis::enumerate(spec, statistics, ++particles, options);
        state = creation_operator(basis, next, terms) * state;
        basis = std::move(next);
      }
    }
  }
  const double norm = state.norm();
  if (norm == 0.0) throw std::invalid_argument("k-space occupation violates the Pauli principle");
  state /= norm;
  return {std::move(basis), std::move(state)};
}

}  // namespace dicke
