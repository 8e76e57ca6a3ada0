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

#include "dicke/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dicke {

const char* to_string(Statistics s) {
  return s == Statistics::kBose ? "bose" : "fermi";
}

void LatticeSpec::validate() const {
  if (L < 2 || L % 2 != 0) {
    throw std::invalid_argument("lattice size L must be a positive even integer, got " +
                                std::to_string(L));
  }
  if (!(spacing > 0.0)) throw std::invalid_argument("lattice spacing must be positive");
  if (!(hopping >= 0.0)) throw std::invalid_argument("hopping J must be non-negative");
  if (!(interaction >= 0.0)) throw std::invalid_argument("interaction U must be non-negative");
}

namespace {

int reduce_index(int i, int L) {
  // Map into (-L/2, L/2].
  int r = ((i % L) + L) % L;  // [0, L)
  if (r > L / 2) r -= L;
  return r;
}

}  // namespace

Mode canonical(Mode k, int L) { return {reduce_index(k.n, L), reduce_index(k.m, L)}; }

Mode add(Mode a, Mode b, int L) { return canonical({a.n + b.n, a.m + b.m}, L); }

Mode subtract(Mode a, Mode b, int L) { return canonical({a.n - b.n, a.m - b.m}, L); }

Mode negate(Mode a, int L) { return canonical({-a.n, -a.m}, L); }

bool on_grid(Mode k, int L) {
  const int lo = -L / 2 + 1;
  const int hi = L / 2;
  return k.n >= lo && k.n <= hi && k.m >= lo && k.m <= hi;
}

int mode_index(Mode k, int L) {
  const int lo = -L / 2 + 1;
  return (k.n - lo) * L + (k.m - lo);
}

Mode mode_at(int index, int L) {
  const int lo = -L / 2 + 1;
  return {index / L + lo, index % L + lo};
}

std::vector<Mode> mode_grid(const LatticeSpec& spec) {
  spec.validate();
  const int L = spec.L;
  std::vector<Mode> modes;
  modes.reserve(static_cast<std::size_t>(L) * L);
  for (int n = -L / 2 + 1; n <= L / 2; ++n) {
    for (int m = -L / 2 + 1; m <= L / 2; ++m) modes.push_back({n, m});
  }
  return modes;
}

std::array<double, 2> wave_vector(Mode k, const LatticeSpec& spec) {
  const double unit = 2.0 * std::numbers::pi / (spec.L * spec.spacing);
  return {unit * k.n, unit * k.m};
}

double adjacency_ft(Mode k, const LatticeSpec& spec) {
  // k_x l = 2 pi n / L, independent of the spacing.
  const double unit = 2.0 * std::numbers::pi / spec.L;
  return 2.0 * (std::cos(unit * k.n) + std::cos(unit * k.m));
}

double dispersion(Mode k, const LatticeSpec& spec) {
  return -spec.hopping / LatticeSpec::kCoordination * adjacency_ft(k, spec);
}

std::vector<double> adjacency_ft_table(const LatticeSpec& spec) {
  std::vector<double> table;
  table.reserve(static_cast<std::size_t>(spec.num_sites()));
  for (const Mode& k : mode_grid(spec)) table.push_back(adjacency_ft(k, spec));
  return table;
}

double hopping_phase(Mode p, Mode k, double t, const LatticeSpec& spec) {
  const Mode shifted = subtract(p, k, spec.L);
  return -spec.hopping / LatticeSpec::kCoordination *
         (adjacency_ft(p, spec) - adjacency_ft(shifted, spec)) * t;
}

double condensate_phase(Mode kappa, double t, const LatticeSpec& spec) {
  return -hopping_phase(kappa, kappa, t, spec);
}

std::array<double, 2> site_position(int site, const LatticeSpec& spec) {
  return {spec.spacing * (site / spec.L), spec.spacing * (site % spec.L)};
}

double site_phase_angle(Mode k, int site, int L) {
  // k.r = 2 pi (n x + m y) / L; reduce the integer numerator first.
  const int x = site / L;
  const int y = site % L;
  const long long num = ((static_cast<long long>(k.n) * x + static_cast<long long>(k.m) * y) % L + L) % L;
  return 2.0 * std::numbers::pi * static_cast<double>(num) / L;
}

Eigen::MatrixXd adjacency_matrix(const LatticeSpec& spec) {
  spec.validate();
  const int L = spec.L;
  const int N = spec.num_sites();
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(N, N);
  for (int x = 0; x < L; ++x) {
    for (int y = 0; y < L; ++y) {
      const int mu = x * L + y;
      T(mu, ((x + 1) % L) * L + y) += 1.0;
      T(mu, ((x + L - 1) % L) * L + y) += 1.0;
      T(mu, x * L + (y + 1) % L) += 1.0;
      T(mu, x * L + (y + L - 1) % L) += 1.0;
    }
  }
  return T;
}

}  // namespace dicke
