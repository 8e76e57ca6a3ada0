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

#ifndef DICKE_TOOLS_ORACLE_SUITE_HPP
#define DICKE_TOOLS_ORACLE_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dicke/lattice.hpp"

namespace dicke::tools {

// Outcome of one oracle-versus-formula comparison.
struct OracleCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_deviation <= tolerance; }
};

struct OracleSuiteOptions {
  double hopping = 1.0;
  Mode kappa{1, 1};
  std::vector<double> delta_t{0.0, 0.3, 0.7, 1.0, 1.9, 3.1};
  std::uint64_t seed = 20260;
};

// Each check compares a closed-form result against brute-force evolution in
// the Fock space of a 2 x 2 lattice.
OracleCheck check_dicke_ladder();
OracleCheck check_commutator(std::uint64_t seed);
OracleCheck check_bose_four_point();
OracleCheck check_fermi_four_point();
OracleCheck check_mott_four_point();
OracleCheck check_neel_four_point();
OracleCheck check_superfluid_peak(const OracleSuiteOptions& options);
OracleCheck check_mott_quench(const OracleSuiteOptions& options);
OracleCheck check_neel_quench(const OracleSuiteOptions& options);
OracleCheck check_separable_frozen(const OracleSuiteOptions& options);
OracleCheck check_separable_strong_coupling(const OracleSuiteOptions& options);
OracleCheck check_neel_separable(const OracleSuiteOptions& options);
OracleCheck check_zero_correlators_bose(std::uint64_t seed);
OracleCheck check_zero_correlators_fermi(std::uint64_t seed);
OracleCheck check_classical_sequence(const OracleSuiteOptions& options);

std::vector<OracleCheck> run_oracle_suite(const OracleSuiteOptions& options);

}  // namespace dicke::tools

#endif  // DICKE_TOOLS_ORACLE_SUITE_HPP
