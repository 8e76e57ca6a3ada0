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

#include "oracle_suite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "dicke/correlators.hpp"
#include "dicke/oracle.hpp"

namespace dicke::tools {

namespace {

constexpr int kL = 2;

LatticeSpec small_lattice(double hopping, double interaction) {
  LatticeSpec spec;
  spec.L = kL;
  spec.hopping = hopping;
  spec.interaction = interaction;
  return spec;
}

BasisOptions single_excitation() {
  BasisOptions options;
  options.max_excited = 1;
  return options;
}

BasisOptions ground_only() {
  BasisOptions options;
  options.max_excited = 0;
  return options;
}

std::vector<double> to_doubles(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Every (k, q, kappa_in, kappa_out) on the 2 x 2 grid.
template <typename F>
void for_each_query(F&& f) {
  const LatticeSpec spec = small_lattice(1.0, 0.0);
  const auto modes = mode_grid(spec);
  for (Mode k : modes)
    for (Mode q : modes)
      for (Mode kin : modes)
        for (Mode kout : modes) f(CorrelatorQuery{k, q, kin, kout});
}

std::vector<std::vector<int>> mott_counts() {
  return std::vector<std::vector<int>>(kL * kL, std::vector<int>{1});
}

std::vector<std::vector<int>> neel_counts() {
  std::vector<std::vector<int>> counts;
  for (int mu = 0; mu < kL * kL; ++mu) {
    const bool up = ((mu / kL) + (mu % kL)) % 2 == 0;
    counts.push_back(up ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
  }
  return counts;
}

OracleCheck quench_check(const char* name, Statistics statistics,
                         const OracleSuiteOptions& options) {
  const LatticeSpec spec = small_lattice(options.hopping, 0.0);
  const Mode kappa = canonical(options.kappa, kL);
  EmissionOracle oracle(FockBasis::enumerate(spec, statistics, kL * kL, single_excitation()), spec);
  const StateVector initial = statistics == Statistics::kBose ? mott_state(oracle.basis())
                                                              : neel_state(oracle.basis());
  OracleCheck check{name, 0.0, 1e-8};
  for (double dt : options.delta_t) {
    const double exact = oracle.normalized_peak(initial, {kappa, kappa}, dt);
    check.max_deviation = std::max(check.max_deviation, std::abs(exact - quench_peak(spec, kappa, dt)));
  }
  return check;
}

// Largest |C^{mu nu rho eta}| over index sets outside the mu = nu, rho = eta
// family, which is the only one that survives on product states.
double max_zero_correlator(const FockBasis& basis, const StateVector& state,
                           const std::vector<Spin>& site_spin) {
  const Propagator propagator(build_lattice_hamiltonian(basis, basis.lattice()));
  const int sites = basis.lattice().num_sites();
  double worst = 0.0;
  const std::array<std::pair<double, double>, 2> times{{{0.8, 1.7}, {2.5, 0.4}}};
  for (int mu = 0; mu < sites; ++mu)
    for (int nu = 0; nu < sites; ++nu)
      for (int rho = 0; rho < sites; ++rho)
        for (int eta = 0; eta < sites; ++eta) {
          if (mu == nu && rho == eta) continue;
          const std::array<int, 4> idx{mu, nu, rho, eta};
          const std::array<Spin, 4> spins{site_spin[mu], site_spin[nu], site_spin[rho],
                                          site_spin[eta]};
          for (const auto& [t, tp] : times) {
            worst = std::max(worst,
                             std::abs(site_correlator(basis, propagator, state, idx, spins, t, tp)));
          }
        }
  return worst;
}

}  // namespace

OracleCheck check_dicke_ladder() {
  const LatticeSpec spec = small_lattice(1.0, 0.0);
  const FockBasis basis = FockBasis::enumerate(spec, Statistics::kBose, kL * kL);
  const int atoms = kL * kL;
  StateVector v = mott_state(basis);
  double expected = 1.0;
  OracleCheck check{"dicke_ladder", 0.0, 1e-10};
  for (int n = 0; n <= 3; ++n) {
    check.max_deviation = std::max(check.max_deviation, std::abs(v.norm() - expected));
    v = apply_exciton(v, {1, 0}, ExcitonDirection::kCreate, basis);
    expected *= dicke_ladder_factor(atoms, n, Ladder::kRaise);
  }
  return check;
}

OracleCheck check_commutator(std::uint64_t seed) {
  OracleCheck check{"quasispin_commutator", 0.0, 1e-12};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const LatticeSpec spec = small_lattice(1.0, 0.0);
  for (auto [statistics, particles] : {std::pair{Statistics::kBose, 3}, std::pair{Statistics::kFermi, 3}}) {
    const FockBasis basis = FockBasis::enumerate(spec, statistics, particles);
    const SparseOperator z = sigma_z_operator(basis);
    for (Mode kappa : {Mode{0, 0}, Mode{1, 0}, Mode{1, 1}}) {
      const SparseOperator up = exciton_operator(basis, kappa, ExcitonDirection::kCreate);
      const SparseOperator down = exciton_operator(basis, kappa, ExcitonDirection::kAnnihilate);
      StateVector v(static_cast<Eigen::Index>(basis.dimension()));
      for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {gauss(rng), gauss(rng)};
      v.normalize();
      const StateVector lhs = 0.5 * (up * (down * v) - down * (up * v));
      check.max_deviation = std::max(check.max_deviation, (lhs - z * v).norm());
    }
  }
  return check;
}

OracleCheck check_bose_four_point() {
  const LatticeSpec spec = small_lattice(1.0, 0.0);
  const std::vector<int> occupation{2, 1, 1, 0};
  const auto prepared = k_space_fock_state(spec, Statistics::kBose, {occupation}, ground_only());
  const MomentumDistribution dist(Statistics::kBose, kL, {to_doubles(occupation)}, 4.0, "fock");
  OracleCheck check{"bose_four_point", 0.0, 1e-10};
  for_each_query([&](const CorrelatorQuery& q) {
    const auto exact = oracle_four_point(prepared.basis, prepared.state, q.k, q.q, q.kappa_in, q.kappa_out);
    check.max_deviation = std::max(check.max_deviation, std::abs(exact - bosonic_four_point(dist, q)));
  });
  return check;
}

OracleCheck check_fermi_four_point() {
  const LatticeSpec spec = small_lattice(1.0, 0.0);
  const std::vector<int> up{1, 1, 0, 0};
  const std::vector<int> down{1, 0, 1, 0};
  const auto prepared = k_space_fock_state(spec, Statistics::kFermi, {up, down}, ground_only());
  const MomentumDistribution dist(Statistics::kFermi, kL, {to_doubles(up), to_doubles(down)}, 4.0,
                                  "fock");
  OracleCheck check{"fermi_four_point", 0.0, 1e-10};
  for_each_query([&](CorrelatorQuery q) {
    for (Spin s1 : {Spin::kUp, Spin::kDown}) {
      for (Spin s2 : {Spin::kUp, Spin::kDown}) {
        q.s1 = s1;
        q.s2 = s2;
        const auto exact =
            oracle_four_point(prepared.basis, prepared.state, q.k, q.q, q.kappa_in, q.kappa_out, s1, s2);
        check.max_deviation =
            std::max(check.max_deviation, std::abs(exact - fermionic_four_point(dist, q)));
      }
    }
  });
  return check;
}

OracleCheck check_mott_four_point() {
  const LatticeSpec spec = small_lattice(1.0, 0.0);
  const FockBasis basis = FockBasis::enumerate(spec, Statistics::kBose, kL * kL, ground_only());
  const StateVector state = mott_state(basis);
  OracleCheck check{"mott_four_point", 0.0, 1e-10};
  for_each_query([&](const CorrelatorQuery& q) {
    const auto exact = oracle_four_point(basis, state, q.k, q.q, q.kappa_in, q.kappa_out);
    check.max_deviation = std::max(check.max_deviation, std::abs(exact - mott_correlator(q, kL)));
  });
  return check;
}

OracleCheck check_neel_four_point() {
  const LatticeSpec spec = small_lattice(1.0, 0.0);
  const FockBasis basis = FockBasis::enumerate(spec, Statistics::kFermi, kL * kL, ground_only());
  const StateVector state = neel_state(basis);
  const Mode nesting{kL / 2, kL / 2};
  OracleCheck check{"neel_four_point", 0.0, 1e-10};
  for_each_query([&](const CorrelatorQuery& q) {
    std::complex<double> exact = 0.0;
    for (Spin s1 : {Spin::kUp, Spin::kDown}) {
      for (Spin s2 : {Spin::kUp, Spin::kDown}) {
        exact += oracle_four_point(basis, state, q.k, q.q, q.kappa_in, q.kappa_out, s1, s2);
      }
    }
    // The closed form omits the nesting term at k - q = (pi, pi).
    const double nested = subtract(q.k, q.q, kL) == nesting ? 0.5 : 0.0;
    const double formula = neel_correlator_spin_summed(q, kL) - nested;
    check.max_deviation = std::max(check.max_deviation, std::abs(exact - formula));
  });
  return check;
}

OracleCheck check_superfluid_peak(const OracleSuiteOptions& options) {
  const LatticeSpec spec = small_lattice(options.hopping, 0.0);
  std::vector<int> occupation(kL * kL, 0);
  occupation[static_cast<std::size_t>(mode_index({0, 0}, kL))] = kL * kL;
  const auto prepared = k_space_fock_state(spec, Statistics::kBose, {occupation}, single_excitation());
  const EmissionOracle oracle(prepared.basis, spec);
  OracleCheck check{"superfluid_peak", 0.0, 1e-8};
  for (Mode kappa : {Mode{1, 0}, canonical(options.kappa, kL)}) {
    for (double dt : options.delta_t) {
      const double peak = oracle.normalized_peak(prepared.state, {kappa, kappa}, dt);
      check.max_deviation = std::max(check.max_deviation, std::abs(peak - 1.0));
    }
  }
  return check;
}

OracleCheck check_mott_quench(const OracleSuiteOptions& options) {
  return quench_check("mott_quench", Statistics::kBose, options);
}

OracleCheck check_neel_quench(const OracleSuiteOptions& options) {
  return quench_check("neel_quench", Statistics::kFermi, options);
}

OracleCheck check_separable_frozen(const OracleSuiteOptions& options) {
  const LatticeSpec spec = small_lattice(0.0, 1.0);
  const Mode kappa = canonical(options.kappa, kL);
  OracleCheck check{"separable_frozen", 0.0, 1e-12};
  for (const ProbeGeometry& geometry : {ProbeGeometry{kappa, kappa}, ProbeGeometry{kappa, Mode{0, 0}}}) {
    for (double dt : options.delta_t) {
      check.max_deviation =
          std::max(check.max_deviation, oracle_separable_check(mott_counts(), geometry, dt, spec));
    }
  }
  return check;
}

OracleCheck check_separable_strong_coupling(const OracleSuiteOptions& options) {
  const LatticeSpec spec = small_lattice(options.hopping, 100.0 * options.hopping);
  const Mode kappa = canonical(options.kappa, kL);
  OracleCheck check{"separable_strong_coupling", 0.0, 0.1};
  for (double dt : {1.0}) {
    check.max_deviation =
        std::max(check.max_deviation, oracle_separable_check(mott_counts(), {kappa, kappa}, dt, spec));
  }
  return check;
}

OracleCheck check_neel_separable(const OracleSuiteOptions& options) {
  const LatticeSpec spec = small_lattice(0.0, 1.0);
  const Mode kappa = canonical(options.kappa, kL);
  OracleCheck check{"neel_separable", 0.0, 1e-12};
  for (double dt : options.delta_t) {
    check.max_deviation =
        std::max(check.max_deviation, oracle_separable_check(neel_counts(), {kappa, kappa}, dt, spec));
  }
  return check;
}

OracleCheck check_zero_correlators_bose(std::uint64_t seed) {
  const LatticeSpec spec = small_lattice(0.0, 1.0);
  const FockBasis basis = FockBasis::truncated(spec, Statistics::kBose, 4, 2);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<std::array<std::complex<double>, 5>> local(kL * kL);
  for (auto& site : local) {
    for (auto& c : site) c = {gauss(rng), gauss(rng)};
  }
  const StateVector state = gutzwiller_state(basis, [&](int site, std::span<const int> counts) {
    return local[static_cast<std::size_t>(site)][static_cast<std::size_t>(counts[0])];
  });
  return {"zero_correlators_bose",
          max_zero_correlator(basis, state, std::vector<Spin>(kL * kL, Spin::kUp)), 1e-12};
}

OracleCheck check_zero_correlators_fermi(std::uint64_t seed) {
  const LatticeSpec spec = small_lattice(0.0, 1.0);
  const FockBasis basis = FockBasis::truncated(spec, Statistics::kFermi, 1, 1);
  std::mt19937_64 rng(seed);
  std::vector<Spin> spins;
  std::vector<std::vector<int>> counts;
  for (int mu = 0; mu < kL * kL; ++mu) {
    const bool up = (rng() & 1U) == 0;
    spins.push_back(up ? Spin::kUp : Spin::kDown);
    counts.push_back(up ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
  }
  const StateVector state = site_product_state(basis, counts);
  return {"zero_correlators_fermi", max_zero_correlator(basis, state, spins), 1e-12};
}

OracleCheck check_classical_sequence(const OracleSuiteOptions& options) {
  const LatticeSpec spec = small_lattice(options.hopping, 0.0);
  const Mode kappa = canonical(options.kappa, kL);
  OracleCheck check{"classical_sequence", 0.0, 1e-8};

  std::vector<int> condensate(kL * kL, 0);
  condensate[static_cast<std::size_t>(mode_index({0, 0}, kL))] = kL * kL;
  const auto bose = k_space_fock_state(spec, Statistics::kBose, {condensate});
  const MomentumDistribution bose_dist = superfluid(spec);

  const auto metal = metallic(spec);
  std::vector<std::vector<int>> fermi_occ(2, std::vector<int>(kL * kL, 0));
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < kL * kL; ++i) {
      fermi_occ[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] =
          static_cast<int>(std::lround(metal.channel(c)[static_cast<std::size_t>(i)]));
    }
  }
  const auto fermi = k_space_fock_state(spec, Statistics::kFermi, fermi_occ);

  for (auto [a, b] : {std::pair{0.2, -0.2}, std::pair{0.7, 1.1}, std::pair{1.5707963267948966, 0.4}}) {
    for (double dt : options.delta_t) {
      const DriveParameters params{a, b, kappa, dt};
      check.max_deviation = std::max(
          check.max_deviation, std::abs(oracle_classical_sequence(bose.basis, bose.state, params, spec) -
                                        expected_sigma_z(bose_dist, params, spec)));
      check.max_deviation = std::max(
          check.max_deviation, std::abs(oracle_classical_sequence(fermi.basis, fermi.state, params, spec) -
                                        expected_sigma_z(metal, params, spec)));
    }
  }
  return check;
}

std::vector<OracleCheck> run_oracle_suite(const OracleSuiteOptions& options) {
  return {check_dicke_ladder(),
          check_commutator(options.seed),
          check_bose_four_point(),
          check_fermi_four_point(),
          check_mott_four_point(),
          check_neel_four_point(),
          check_superfluid_peak(options),
          check_mott_quench(options),
          check_neel_quench(options),
          check_separable_frozen(options),
          check_separable_strong_coupling(options),
          check_neel_separable(options),
          check_zero_correlators_bose(options.seed),
          check_zero_correlators_fermi(options.seed),
          check_classical_sequence(options)};
}

}  // namespace dicke::tools
