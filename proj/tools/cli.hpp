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

#ifndef DICKE_TOOLS_CLI_HPP
#define DICKE_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "dicke/lattice.hpp"
#include "dicke/superradiance.hpp"

namespace dicke::tools {

enum class Subcommand { kCurve, kQuench, kAdiabatic, kClassical, kOracle };

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kNumericalFailure = 2 };

struct RunConfig {
  Subcommand subcommand = Subcommand::kCurve;
  Statistics statistics = Statistics::kBose;
  // Unset: uniform for curve/classical, Mott (bosons) or Neel (fermions) for
  // quench and adiabatic.
  std::optional<StateSelector> state;
  // Unset: 100 for curves, 2 for the oracle.
  std::optional<int> L;
  // Grid indices (n, m) of kappa = 2 pi / (L l) (n, m).
  Mode kappa{1, 1};
  double hopping = 1.0;
  double interaction = 0.0;
  // Unset: 100 and 500 for curves, 3 and 7 for the oracle.
  std::optional<double> tmax;
  std::optional<int> steps;
  // Empty: standard output.
  std::string output;
  std::string format = "csv";
  double rotation_in = 0.01;
  // Unset: -rotation_in, the reversal sequence.
  std::optional<double> rotation_out;
};

// "superfluid", "partial:N1,N2", "thermal:inverse_temperature", "metallic",
// "uniform", "mott" or "neel". Throws std::invalid_argument.
StateSelector parse_state(const std::string& text);

// "n,m". Throws std::invalid_argument.
Mode parse_mode(const std::string& text);

// Executes a parsed configuration. Data goes to `out` (or the configured
// file), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dicke::tools

#endif  // DICKE_TOOLS_CLI_HPP
