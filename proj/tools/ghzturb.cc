// Copyright 2026 The ghzturb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ghzturb: turbulence sweeps over a three-photon GHZ state, Werner reference
// curves and the built-in verification suite.
//
// Exit status: 0 success, 1 verification failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghzturb/sweep.h"
#include "ghzturb/verify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitConfigError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ghzturb::ConfigError("cannot read config file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes via a callback to `path`, or to stdout when `path` is empty.
template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ghzturb::ConfigError("cannot open output file \"" + path + "\"");
  write(out);
  if (!out) throw std::runtime_error("failed writing \"" + path + "\"");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

struct SweepFlags {
  std::optional<double> theta_min;
  std::optional<double> theta_max;
  std::optional<int> steps;
  std::optional<std::string> arms;
  std::optional<std::string> mode;
  std::optional<std::string> entropy;
  std::optional<std::string> tangle;
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<int> threads;
};

ghzturb::SweepConfig resolve(const SweepFlags& flags) {
  ghzturb::SweepConfig config;
  if (flags.config) config = ghzturb::parse_sweep_config(read_file(*flags.config));
  if (flags.theta_min) config.theta_min = *flags.theta_min;
  if (flags.theta_max) config.theta_max = *flags.theta_max;
  if (flags.steps) config.steps = *flags.steps;
  if (flags.arms) {
    config.arm_sets.clear();
    for (const std::string& part : split_commas(*flags.arms)) {
      try {
        if (part.empty()) throw std::invalid_argument("empty arm set in --arms");
        config.arm_sets.push_back(ghzturb::ArmSet::parse(part));
      } catch (const std::invalid_argument& e) {
        throw ghzturb::ConfigError(e.what());
      }
    }
  }
  if (flags.mode) {
    try {
      config.mode = ghzturb::parse_channel_mode(*flags.mode);
    } catch (const std::invalid_argument& e) {
      throw ghzturb::ConfigError(e.what());
    }
  }
  if (flags.entropy) config.entropy_variant = ghzturb::parse_entropy_variant(*flags.entropy);
  if (flags.tangle) config.tangle_estimator = ghzturb::parse_tangle_estimator(*flags.tangle);
  if (flags.out) config.output_path = *flags.out;
  if (flags.threads) config.threads = *flags.threads;
  ghzturb::validate(config);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of a three-photon GHZ state under hyperbolic polarization turbulence"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ghzturb::kVersion));

  SweepFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep theta over arm sets and write CSV");
  sweep->add_option("--theta-min", sweep_flags.theta_min, "Lower theta bound (default 0)");
  sweep->add_option("--theta-max", sweep_flags.theta_max, "Upper theta bound (default pi/2)");
  sweep->add_option("--steps", sweep_flags.steps, "Grid points, endpoints inclusive (default 200)");
  sweep->add_option("--arms", sweep_flags.arms, "Comma list of arm sets, e.g. 1,12,123");
  sweep->add_option("--mode", sweep_flags.mode, "literal | conjugate | stochastic (default stochastic)");
  sweep->add_option("--entropy", sweep_flags.entropy, "paper | generalized (default paper)");
  sweep->add_option("--tangle", sweep_flags.tangle, "dominant | pairwise (default dominant)");
  sweep->add_option("--config", sweep_flags.config, "JSON config file; flags override its fields");
  sweep->add_option("--out", sweep_flags.out, "Output CSV path (default stdout)");
  sweep->add_option("--threads", sweep_flags.threads, "Worker threads (output is identical for any count)");

  int werner_qubits = 3;
  int werner_steps = 101;
  std::string werner_entropy = "paper";
  std::string werner_tangle = "dominant";
  std::string werner_out;
  CLI::App* werner = app.add_subcommand("werner-curve", "Write the Werner-state reference curve as CSV");
  werner->add_option("--qubits", werner_qubits, "2 or 3 (default 3)");
  werner->add_option("--steps", werner_steps, "Points over p in [0, 1], at least 2 (default 101)");
  werner->add_option("--entropy", werner_entropy, "paper | generalized (default paper)");
  werner->add_option("--tangle", werner_tangle, "dominant | pairwise, three qubits only (default dominant)");
  werner->add_option("--out", werner_out, "Output CSV path (default stdout)");

  app.add_subcommand("verify", "Run the built-in invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (sweep->parsed()) {
      const ghzturb::SweepConfig config = resolve(sweep_flags);
      const std::vector<ghzturb::SweepRecord> records = ghzturb::run_sweep(config);
      emit(config.output_path, [&](std::ostream& out) { ghzturb::write_sweep_csv(out, config, records); });
      return kExitOk;
    }
    if (werner->parsed()) {
      const auto variant = ghzturb::parse_entropy_variant(werner_entropy);
      const auto estimator = ghzturb::parse_tangle_estimator(werner_tangle);
      const auto points = ghzturb::werner_curve(werner_qubits, werner_steps, variant, estimator);
      emit(werner_out, [&](std::ostream& out) {
        ghzturb::write_werner_csv(out, werner_qubits, werner_steps, variant, estimator, points);
      });
      return kExitOk;
    }
    const auto results = ghzturb::run_verification();
    return ghzturb::print_verification_report(std::cout, results) ? kExitOk : kExitVerificationFailed;
  } catch (const ghzturb::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}
