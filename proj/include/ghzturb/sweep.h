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

#ifndef GHZTURB_SWEEP_H_
#define GHZTURB_SWEEP_H_

#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ghzturb/measures.h"
#include "ghzturb/turbulence.h"

namespace ghzturb {

inline constexpr std::string_view kVersion = "1.0.0";

/// Raised for any invalid sweep or curve configuration. The CLI maps it to
/// exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EntropyVariant { kPaper, kGeneralized };
enum class TangleEstimator { kDominantEigenvector, kPairwise };

std::string_view to_string(EntropyVariant variant);
std::string_view to_string(TangleEstimator estimator);
EntropyVariant parse_entropy_variant(std::string_view text);
/// Accepts "dominant", "dominant_eigenvector" and "pairwise".
TangleEstimator parse_tangle_estimator(std::string_view text);

struct SweepConfig {
  double theta_min = 0.0;
  double theta_max = std::numbers::pi / 2;
  int steps = 200;
  std::vector<ArmSet> arm_sets = {ArmSet::parse("1"), ArmSet::parse("12"), ArmSet::parse("123")};
  ChannelMode mode = ChannelMode::kStochastic;
  EntropyVariant entropy_variant = EntropyVariant::kPaper;
  TangleEstimator tangle_estimator = TangleEstimator::kDominantEigenvector;
  /// Empty means standard output.
  std::string output_path;
  /// Worker count for run_sweep; does not affect the output.
  int threads = 1;
};

/// Throws ConfigError describing the first violated constraint.
void validate(const SweepConfig& config);

/// Overlays the fields present in a JSON document onto `base`. Field names
/// match SweepConfig; arm_sets is a list of strings such as "12".
SweepConfig parse_sweep_config(std::string_view json_text, SweepConfig base = {});
/// Canonical single-line JSON of every field except `threads`.
std::string to_json(const SweepConfig& config);

/// `steps` points from theta_min to theta_max inclusive.
std::vector<double> theta_grid(double theta_min, double theta_max, int steps);

struct SweepRecord {
  double theta = 0.0;
  ArmSet arms;
  ChannelMode mode = ChannelMode::kStochastic;
  MeasureReport report;
  /// Entropy per the configured variant.
  double entropy = 0.0;
  /// Tangle per the configured estimator: the dominant-eigenvector
  /// three-tangle, or tangle_ab + tangle_ac.
  double tangle = 0.0;
};

/// GHZ through apply_turbulence at every (arm set, theta), sorted by
/// (canonical arm string, theta).
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

std::string sweep_csv_header();
void write_sweep_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRecord>& records);

struct WernerPoint {
  double p = 0.0;
  double entropy = 0.0;
  double tangle = 0.0;
};

/// Werner reference curve over p in [0, 1] inclusive. For two qubits the
/// tangle is the Wootters tangle; for three it follows `estimator`.
std::vector<WernerPoint> werner_curve(int n_qubits, int steps, EntropyVariant variant, TangleEstimator estimator);

void write_werner_csv(std::ostream& out, int n_qubits, int steps, EntropyVariant variant, TangleEstimator estimator,
                      const std::vector<WernerPoint>& points);

/// 17 significant digits, shortest exponent form.
std::string format_number(double value);

}  // namespace ghzturb

#endif  // GHZTURB_SWEEP_H_
