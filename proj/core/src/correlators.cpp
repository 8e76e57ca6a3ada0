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

#include "dicke/correlators.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

double delta(Mode a, Mode b, int L) { return canonical(a, L) == canonical(b, L) ? 1.0 : 0.0; }

void require(const MomentumDistribution& dist, Statistics statistics) {
  if (dist.statistics() != statistics) {
    throw std::invalid_argument(std::string("correlator expects a ") + to_string(statistics) +
                                " distribution");
  }
}

}  // namespace

double bosonic_four_point(const MomentumDistribution& dist, const CorrelatorQuery& query,
                          CorrelatorForm form) {
  require(dist, Statistics::kBose);
  const int L = dist.L();
  const double n_k = dist.occupation(subtract(query.k, query.kappa_in, L));
  const double n_q = dist.occupation(subtract(query.q, query.kappa_out, L));
  const double d_kappa = delta(query.kappa_in, query.kappa_out, L);
  const double d_kq = delta(query.k, query.q, L);

  double value = n_k * n_q * (d_kappa + d_kq) + n_k * d_kq;
  if (form == CorrelatorForm::kDiagonalState) value -= n_k * (n_q + 1.0) * d_kq * d_kappa;
  return value;
}

double fermionic_four_point(const MomentumDistribution& dist, const CorrelatorQuery& query) {
  require(dist, Statistics::kFermi);
  const int L = dist.L();
  const int c1 = static_cast<int>(query.s1);
  const int c2 = static_cast<int>(query.s2);
  const double n_k = dist.occupation(subtract(query.k, query.kappa_in, L), c1);
  const double n_q = dist.occupation(subtract(query.q, query.kappa_out, L), c2);
  const double d_kappa = delta(query.kappa_in, query.kappa_out, L);
  const double pauli = delta(query.k, query.q, L) * (query.s1 == query.s2 ? 1.0 : 0.0);
  return n_k * n_q * (d_kappa - pauli) + n_k * pauli;
}

double mott_correlator(const CorrelatorQuery& query, int L) {
  const int N = L * L;
  if (N <= 0) throw std::invalid_argument("mott_correlator requires a non-empty lattice");
  return delta(query.kappa_in, query.kappa_out, L) + 2.0 * delta(query.k, query.q, L) - 2.0 / N;
}

double neel_correlator_spin_summed(const CorrelatorQuery& query, int L) {
  return delta(query.kappa_in, query.kappa_out, L) + 0.5 * delta(query.k, query.q, L);
}

double dicke_ladder_factor(int atoms, int excitations, Ladder direction) {
  const int N = atoms;
  const int n = excitations;
  if (N < 0 || n < 0 || n > N) throw std::invalid_argument("excitation count outside [0, N]");
  if (direction == Ladder::kRaise) {
    if (n >= N) throw std::invalid_argument("cannot raise a fully excited Dicke state");
    return std::sqrt(static_cast<double>(N - n) * (n + 1));
  }
  if (n < 1) throw std::invalid_argument("cannot lower the Dicke ground state");
  return std::sqrt(static_cast<double>(N - n + 1) * n);
}

}  // namespace dicke
