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

#include "dicke/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "dicke/error.hpp"

namespace dicke {

namespace {

constexpr double kTotalTolerance = 1e-9;
constexpr double kSolverTolerance = 1e-12;
constexpr int kSolverIterations = 200;

double sum_all(const std::vector<std::vector<double>>& channels) {
  double s = 0.0;
  for (const auto& c : channels) {
    for (double v : c) s += v;
  }
  return s;
}

void check_positive_inverse_temperature(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("inverse temperature must be positive and finite");
  }
}

std::vector<double> energies(const LatticeSpec& spec) {
  std::vector<double> e;
  e.reserve(static_cast<std::size_t>(spec.num_sites()));
  for (const Mode& k : mode_grid(spec)) e.push_back(dispersion(k, spec));
  return e;
}

}  // namespace

MomentumDistribution::MomentumDistribution(Statistics statistics, int L,
                                           std::vector<std::vector<double>> channels,
                                           double total_target, std::string label,
                                           double chemical_potential)
    : statistics_(statistics),
      L_(L),
      channels_(std::move(channels)),
      total_target_(total_target),
      total_(0.0),
      label_(std::move(label)),
      chemical_potential_(chemical_potential) {
  const std::size_t expected_channels = statistics == Statistics::kBose ? 1 : 2;
  if (channels_.size() != expected_channels) {
    throw std::invalid_argument("bosons carry one occupation channel, fermions two");
  }
  const auto modes = static_cast<std::size_t>(L) * static_cast<std::size_t>(L);
  for (const auto& c : channels_) {
    if (c.size() != modes) throw std::invalid_argument("occupation table does not match L^2 modes");
    for (double v : c) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("occupations must be finite and non-negative");
      }
      if (statistics == Statistics::kFermi && v > 1.0 + 1e-12) {
        throw std::invalid_argument("fermionic occupations cannot exceed 1");
      }
    }
  }
  total_ = sum_all(channels_);
  if (std::abs(total_ - total_target_) > kTotalTolerance * std::max(1.0, std::abs(total_target_))) {
    throw std::invalid_argument("occupations do not sum to the target atom count");
  }
}

double MomentumDistribution::occupation(Mode k, int channel) const {
  return channels_.at(static_cast<std::size_t>(channel))
      .at(static_cast<std::size_t>(mode_index(canonical(k, L_), L_)));
}

MomentumDistribution superfluid(const LatticeSpec& spec) {
  spec.validate();
  const int N = spec.num_sites();
  std::vector<double> n(static_cast<std::size_t>(N), 0.0);
  n[static_cast<std::size_t>(mode_index({0, 0}, spec.L))] = N;
  return MomentumDistribution(Statistics::kBose, spec.L, {std::move(n)}, N, "superfluid");
}

MomentumDistribution partial_condensation(const LatticeSpec& spec, double condensed,
                                          double distributed) {
  spec.validate();
  const int N = spec.num_sites();
  if (condensed < 0.0 || distributed < 0.0) {
    throw std::invalid_argument("partial condensation requires N1, N2 >= 0");
  }
  if (std::abs(condensed + distributed - N) > 1e-9 * N) {
    throw std::invalid_argument("partial condensation requires N1 + N2 = N");
  }
  std::vector<double> n(static_cast<std::size_t>(N), distributed / N);
  n[static_cast<std::size_t>(mode_index({0, 0}, spec.L))] += condensed;
  return MomentumDistribution(Statistics::kBose, spec.L, {std::move(n)}, N, "partial");
}

MomentumDistribution uniform(const LatticeSpec& spec, Statistics statistics) {
  spec.validate();
  const int N = spec.num_sites();
  const auto size = static_cast<std::size_t>(N);
  if (statistics == Statistics::kBose) {
    return MomentumDistribution(statistics, spec.L, {std::vector<double>(size, 1.0)}, N, "uniform");
  }
  return MomentumDistribution(statistics, spec.L,
                              {std::vector<double>(size, 0.5), std::vector<double>(size, 0.5)}, N,
                              "uniform");
}

MomentumDistribution bose_einstein(const LatticeSpec& spec, double inverse_temperature,
                                   double total) {
  spec.validate();
  check_positive_inverse_temperature(inverse_temperature);
  if (!(total > 0.0)) throw std::invalid_argument("atom count must be positive");

  const std::vector<double> e = energies(spec);
  const double e_min = *std::min_element(e.begin(), e.end());
  const double beta = inverse_temperature;

  // Occupations as a function of the gap x = e_min - mu > 0.
  auto occupations = [&](double gap) {
    std::vector<double> n(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) n[i] = 1.0 / std::expm1(beta * (e[i] - e_min + gap));
    return n;
  };
  auto count = [&](double gap) {
    double s = 0.0;
    for (double v : occupations(gap)) s += v;
    return s;
  };

  const double pinned_gap = kSolverTolerance * spec.hopping;
  const std::size_t origin = static_cast<std::size_t>(mode_index({0, 0}, spec.L));

  if (count(pinned_gap) < total) {
    std::vector<double> n = occupations(pinned_gap);
    double s = 0.0;
    for (double v : n) s += v;
    n[origin] += total - s;
    return MomentumDistribution(Statistics::kBose, spec.L, {std::move(n)}, total, "bose-einstein",
                                e_min - pinned_gap);
  }

  // Bracket in log(gap); count() decreases monotonically with the gap.
  double lo = std::log(pinned_gap);
  double hi = std::log(spec.hopping);
  for (int i = 0; count(std::exp(hi)) > total; ++i) {
    if (i > 200) throw NumericalError("bose-einstein: cannot bracket the chemical potential");
    hi += 2.0;
  }
  double gap = std::exp(hi);
  bool converged = false;
  for (int it = 0; it < kSolverIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    gap = std::exp(mid);
    const double c = count(gap);
    if (std::abs(c - total) <= 1e-14 * total) {
      converged = true;
      break;
    }
    if (c > total) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < kSolverTolerance * 1e-3) {
      converged = true;
      break;
    }
  }
  std::vector<double> n = occupations(gap);
  double s = 0.0;
  for (double v : n) s += v;
  if (!converged || std::abs(s - total) > kTotalTolerance * total) {
    throw NumericalError("bose-einstein: chemical potential solver did not converge");
  }
  return MomentumDistribution(Statistics::kBose, spec.L, {std::move(n)}, total, "bose-einstein",
                              e_min - gap);
}

MomentumDistribution fermi_dirac(const LatticeSpec& spec, double inverse_temperature,
                                 double total) {
  spec.validate();
  check_positive_inverse_temperature(inverse_temperature);
  const int N = spec.num_sites();
  if (total < 0.0 || total > 2.0 * N) {
    throw std::invalid_argument("fermi-dirac: total must lie in [0, 2N]");
  }
  const std::vector<double> e = energies(spec);
  const double beta = inverse_temperature;

  auto occupations = [&](double mu) {
    std::vector<double> n(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) n[i] = 1.0 / (1.0 + std::exp(beta * (e[i] - mu)));
    return n;
  };
  auto count = [&](double mu) {
    double s = 0.0;
    for (double v : occupations(mu)) s += 2.0 * v;
    return s;
  };
  auto build = [&](std::vector<double> n, double mu) {
    std::vector<double> down = n;
    return MomentumDistribution(Statistics::kFermi, spec.L, {std::move(n), std::move(down)}, total,
                                "fermi-dirac", mu);
  };

  if (total == 0.0) return build(std::vector<double>(e.size(), 0.0), -INFINITY);
  if (total == 2.0 * N) return build(std::vector<double>(e.size(), 1.0), INFINITY);

  // Symmetric bracket: its first midpoint is mu = 0, the exact half-filling
  // solution by particle-hole symmetry of the band.
  double bound = 2.0 * spec.hopping + 40.0 / beta;
  for (int i = 0; count(-bound) > total || count(bound) < total; ++i) {
    if (i > 200) throw NumericalError("fermi-dirac: cannot bracket the chemical potential");
    bound *= 2.0;
  }
  double lo = -bound;
  double hi = bound;
  double mu = 0.0;
  bool converged = false;
  for (int it = 0; it < kSolverIterations; ++it) {
    mu = 0.5 * (lo + hi);
    const double c = count(mu);
    if (std::abs(c - total) <= kSolverTolerance * total) {
      converged = true;
      break;
    }
    if (c < total) {
      lo = mu;
    } else {
      hi = mu;
    }
    if (hi - lo <= kSolverTolerance * std::max(1.0, std::abs(mu)) * 1e-3) {
      converged = true;
      break;
    }
  }
  std::vector<double> n = occupations(mu);
  double s = 0.0;
  for (double v : n) s += 2.0 * v;
  if (!converged || std::abs(s - total) > kTotalTolerance * total) {
    throw NumericalError("fermi-dirac: chemical potential solver did not converge");
  }
  return build(std::move(n), mu);
}

MomentumDistribution metallic(const LatticeSpec& spec) {
  spec.validate();
  const int L = spec.L;
  std::vector<double> n(static_cast<std::size_t>(spec.num_sites()), 0.0);
  double count = 0.0;
  for (const Mode& k : mode_grid(spec)) {
    // |k_x| + |k_y| < pi / l  <=>  |n| + |m| < L / 2 on the integer grid.
    if (std::abs(k.n) + std::abs(k.m) < L / 2) {
      n[static_cast<std::size_t>(mode_index(k, L))] = 1.0;
      count += 2.0;
    }
  }
  std::vector<double> down = n;
  return MomentumDistribution(Statistics::kFermi, L, {std::move(n), std::move(down)}, count,
                              "metallic");
}

}  // namespace dicke
