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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "dicke/classical_drive.hpp"
#include "dicke/error.hpp"
#include "oracle_suite.hpp"

namespace dicke::tools {

namespace {

constexpr int kDefaultCurveL = 100;
constexpr double kDefaultCurveTmax = 100.0;
constexpr int kDefaultCurveSteps = 500;
constexpr int kOracleL = 2;
constexpr double kOracleTmax = 3.0;
constexpr int kOracleSteps = 7;

std::vector<double> time_grid(const RunConfig& config) {
  const bool oracle = config.subcommand == Subcommand::kOracle;
  return uniform_time_grid(config.tmax.value_or(oracle ? kOracleTmax : kDefaultCurveTmax),
                           config.steps.value_or(oracle ? kOracleSteps : kDefaultCurveSteps));
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " from '" + std::string(text) + "'");
  }
  return value;
}

std::pair<std::string_view, std::string_view> split_pair(std::string_view text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument(std::string(what) + " expects two comma-separated values");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

std::string fixed(double value) {
  char buffer[64];
  // Avoid printing a negative zero for values that round to zero.
  std::snprintf(buffer, sizeof buffer, "%.12f", value == 0.0 ? 0.0 : value);
  std::string s(buffer);
  if (s == "-0.000000000000") s.erase(0, 1);
  return s;
}

std::string scientific(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3e", value);
  return buffer;
}

StateSelector default_state(const RunConfig& config) {
  StateSelector state;
  const bool transition =
      config.subcommand == Subcommand::kQuench || config.subcommand == Subcommand::kAdiabatic;
  if (!transition) {
    state.kind = StateKind::kUniform;
  } else {
    state.kind = config.statistics == Statistics::kBose ? StateKind::kMott : StateKind::kNeel;
  }
  return state;
}

LatticeSpec lattice_from(const RunConfig& config) {
  LatticeSpec spec;
  spec.L = config.L.value_or(config.subcommand == Subcommand::kOracle ? kOracleL : kDefaultCurveL);
  spec.hopping = config.hopping;
  spec.interaction = config.interaction;
  spec.validate();
  if (!on_grid(config.kappa, spec.L)) {
    throw std::invalid_argument("kappa indices must lie in (-L/2, L/2]");
  }
  return spec;
}

void write_curve(const EmissionCurve& curve, std::ostream& out) {
  out << "delta_t,normalized_peak\n";
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    out << fixed(curve.delta_t[i]) << ',' << fixed(curve.values[i]) << '\n';
  }
}

int run_curve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const LatticeSpec spec = lattice_from(config);
  Scenario scenario;
  scenario.statistics = config.statistics;
  scenario.state = config.state.value_or(default_state(config));
  switch (config.subcommand) {
    case Subcommand::kQuench: scenario.transition = Transition::kQuench; break;
    case Subcommand::kAdiabatic: scenario.transition = Transition::kAdiabatic; break;
    default: scenario.transition = Transition::kNone; break;
  }
  const auto grid = time_grid(config);
  const EmissionCurve curve = emission_curve(scenario, grid, spec, {config.kappa, config.kappa});
  if (curve.approximate) {
    err << "note: " << curve.description
        << " uses the small-kappa approximation and is not exact at large kappa\n";
  }
  write_curve(curve, out);
  return kSuccess;
}

int run_classical(const RunConfig& config, std::ostream& out) {
  const LatticeSpec spec = lattice_from(config);
  const MomentumDistribution dist =
      make_distribution(config.state.value_or(default_state(config)), config.statistics, spec);
  const double rotation_out = config.rotation_out.value_or(-config.rotation_in);
  out << "delta_t,sigma_z,n_meta\n";
  for (double dt : time_grid(config)) {
    const DriveParameters params{config.rotation_in, rotation_out, config.kappa, dt};
    out << fixed(dt) << ',' << fixed(expected_sigma_z(dist, params, spec)) << ','
        << fixed(metastable_population(dist, params, spec)) << '\n';
  }
  return kSuccess;
}

int run_oracle(const RunConfig& config, std::ostream& out) {
  const LatticeSpec spec = lattice_from(config);
  if (spec.L != kOracleL) throw std::invalid_argument("the oracle runs on L = 2 only");
  OracleSuiteOptions options;
  options.hopping = config.hopping;
  options.kappa = config.kappa;
  options.delta_t = time_grid(config);
  const auto checks = run_oracle_suite(options);
  int passed = 0;
  out << "check,max_deviation,tolerance,status\n";
  for (const OracleCheck& check : checks) {
    out << check.name << ',' << scientific(check.max_deviation) << ',' << scientific(check.tolerance)
        << ',' << (check.passed() ? "PASS" : "FAIL") << '\n';
    passed += check.passed() ? 1 : 0;
  }
  return passed == static_cast<int>(checks.size()) ? kSuccess : kNumericalFailure;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format != "csv") throw std::invalid_argument("unsupported format '" + config.format + "'");
  switch (config.subcommand) {
    case Subcommand::kCurve:
    case Subcommand::kQuench:
    case Subcommand::kAdiabatic: return run_curve(config, out, err);
    case Subcommand::kClassical: return run_classical(config, out);
    case Subcommand::kOracle: return run_oracle(config, out);
  }
  return kUsageError;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status = kSuccess;
  try {
    status = dispatch(config, buffer, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::length_error& e) {
    err << "dimension cap: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  if (config.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
    if (!file || !(file << buffer.str()) || !file.flush()) {
      err << "error: cannot write " << config.output << '\n';
      return kUsageError;
    }
  }
  return status;
}

StateSelector parse_state(const std::string& text) {
  const std::string_view view(text);
  const auto colon = view.find(':');
  const std::string_view name = view.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : view.substr(colon + 1);
  auto no_args = [&](StateKind kind) {
    if (colon != std::string_view::npos) {
      throw std::invalid_argument("state '" + std::string(name) + "' takes no parameters");
    }
    StateSelector s;
    s.kind = kind;
    return s;
  };
  if (name == "superfluid") return no_args(StateKind::kSuperfluid);
  if (name == "metallic") return no_args(StateKind::kMetallic);
  if (name == "uniform") return no_args(StateKind::kUniform);
  if (name == "mott") return no_args(StateKind::kMott);
  if (name == "neel") return no_args(StateKind::kNeel);
  if (name == "partial") {
    const auto [n1, n2] = split_pair(args, "partial");
    StateSelector s;
    s.kind = StateKind::kPartial;
    s.condensed = parse_number<double>(n1, "N1");
    s.distributed = parse_number<double>(n2, "N2");
    return s;
  }
  if (name == "thermal") {
    StateSelector s;
    s.kind = StateKind::kThermal;
    s.inverse_temperature = parse_number<double>(args, "inverse temperature");
    return s;
  }
  throw std::invalid_argument("unknown state '" + text + "'");
}

Mode parse_mode(const std::string& text) {
  const auto [n, m] = split_pair(text, "kappa");
  return {parse_number<int>(n, "kappa index"), parse_number<int>(m, "kappa index")};
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superradiance of lattice-trapped atoms: emission curves and oracle checks", "dicke"};
  app.require_subcommand(1);

  RunConfig config;
  std::string statistics = "bose";
  std::string state;
  std::string kappa = "1,1";
  int L = 0;
  double tmax = 0.0;
  int steps = 0;
  double rotation_out = 0.0;

  struct Entry {
    const char* name;
    const char* help;
    Subcommand id;
  };
  const std::vector<Entry> entries{
      {"curve", "Normalized superradiance peak versus waiting time", Subcommand::kCurve},
      {"quench", "Peak after a sudden switch to the non-interacting lattice", Subcommand::kQuench},
      {"adiabatic", "Peak after an adiabatic transition to the non-interacting lattice",
       Subcommand::kAdiabatic},
      {"classical", "Rotate-wait-rotate sequence with classical drive pulses", Subcommand::kClassical},
      {"oracle", "Exact-diagonalization cross-checks on a 2 x 2 lattice", Subcommand::kOracle},
  };
  std::vector<CLI::App*> subs;
  for (const Entry& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    subs.push_back(sub);
    sub->add_option("--statistics", statistics, "bose or fermi")
        ->check(CLI::IsMember({"bose", "fermi"}))
        ->capture_default_str();
    sub->add_option("--state", state,
                    "superfluid | partial:N1,N2 | thermal:inverse_temperature | metallic | uniform | "
                    "mott | neel");
    sub->add_option("--L", L, "Sites per dimension, even (default 100; oracle 2)");
    sub->add_option("--kappa", kappa, "Grid indices n,m of kappa = 2 pi/(L l) (n,m)")
        ->capture_default_str();
    sub->add_option("--J", config.hopping, "Tunneling J; times are in units of 1/J")
        ->capture_default_str();
    sub->add_option("--U", config.interaction, "On-site interaction U")->capture_default_str();
    sub->add_option("--tmax", tmax, "Largest waiting time (default 100; oracle 3)");
    sub->add_option("--steps", steps, "Number of time samples (default 500; oracle 7)");
    sub->add_option("--output,-o", config.output, "Output file (default: standard output)");
    sub->add_option("--format", config.format, "Output format")->capture_default_str();
    if (entry.id == Subcommand::kClassical) {
      sub->add_option("--alpha", config.rotation_in, "First pulse angle in radians")
          ->capture_default_str();
      sub->add_option("--rotation-out", rotation_out, "Second pulse angle (default: -alpha)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  CLI::App* active = nullptr;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) {
      active = subs[i];
      config.subcommand = entries[i].id;
    }
  }
  auto given = [&](const char* name) {
    const CLI::Option* option = active->get_option_no_throw(name);
    return option != nullptr && option->count() > 0;
  };
  try {
    config.statistics = statistics == "fermi" ? Statistics::kFermi : Statistics::kBose;
    if (given("--state")) config.state = parse_state(state);
    if (given("--L")) config.L = L;
    if (given("--tmax")) config.tmax = tmax;
    if (given("--steps")) config.steps = steps;
    if (given("--rotation-out")) config.rotation_out = rotation_out;
    config.kappa = parse_mode(kappa);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return run(config, out, err);
}

}  // namespace dicke::tools
