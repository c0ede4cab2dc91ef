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

#include "ghzturb/sweep.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "json.hpp"

namespace ghzturb {

namespace {

using nlohmann::json;

double selected_entropy(const MeasureReport& report, EntropyVariant variant) {
  return variant == EntropyVariant::kPaper ? report.linear_entropy : report.linear_entropy_generalized;
}

double selected_tangle(const MeasureReport& report, TangleEstimator estimator) {
  return estimator == TangleEstimator::kDominantEigenvector ? report.three_tangle
                                                           : report.tangle_ab + report.tangle_ac;
}

SweepRecord evaluate_point(double theta, ArmSet arms, const SweepConfig& config, const DensityMatrix& ghz) {
  const TurbulenceChannel channel(theta, arms, config.mode);
  SweepRecord record;
  record.theta = theta;
  record.arms = arms;
  record.mode = config.mode;
  record.report = measure_report(apply_turbulence(ghz, channel));
  record.entropy = selected_entropy(record.report, config.entropy_variant);
  record.tangle = selected_tangle(record.report, config.tangle_estimator);
  return record;
}

template <typename T>
T json_field(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field \"") + key + "\": " + e.what());
  }
}

}  // namespace

std::string_view to_string(EntropyVariant variant) {
  return variant == EntropyVariant::kPaper ? "paper" : "generalized";
}

std::string_view to_string(TangleEstimator estimator) {
  return estimator == TangleEstimator::kDominantEigenvector ? "dominant_eigenvector" : "pairwise";
}

EntropyVariant parse_entropy_variant(std::string_view text) {
  if (text == "paper") return EntropyVariant::kPaper;
  if (text == "generalized") return EntropyVariant::kGeneralized;
  throw ConfigError("unknown entropy variant \"" + std::string(text) + "\" (expected paper or generalized)");
}

TangleEstimator parse_tangle_estimator(std::string_view text) {
  if (text == "dominant" || text == "dominant_eigenvector") return TangleEstimator::kDominantEigenvector;
  if (text == "pairwise") return TangleEstimator::kPairwise;
  throw ConfigError("unknown tangle estimator \"" + std::string(text) + "\" (expected dominant or pairwise)");
}

void validate(const SweepConfig& config) {
  if (!std::isfinite(config.theta_min) || !std::isfinite(config.theta_max)) {
    throw ConfigError("theta bounds must be finite");
  }
  if (!(0.0 <= config.theta_min && config.theta_min <= config.theta_max && config.theta_max <= std::numbers::pi)) {
    throw ConfigError("theta bounds must satisfy 0 <= theta_min <= theta_max <= pi, got [" +
                      format_number(config.theta_min) + ", " + format_number(config.theta_max) + "]");
  }
  if (config.steps < 1) {
    throw ConfigError("steps must be at least 1, got " + std::to_string(config.steps));
  }
  if (config.arm_sets.empty()) {
    throw ConfigError("arm_sets must list at least one arm set");
  }
  std::set<std::uint8_t> seen;
  for (const ArmSet& arms : config.arm_sets) {
    if (arms.empty()) throw ConfigError("arm sets must name at least one arm");
    if (!seen.insert(arms.mask()).second) {
      throw ConfigError("arm set \"" + arms.to_string() + "\" listed twice");
    }
  }
  if (config.threads < 1) {
    throw ConfigError("threads must be at least 1, got " + std::to_string(config.threads));
  }
}

SweepConfig parse_sweep_config(std::string_view json_text, SweepConfig base) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  static const std::set<std::string> kKnown = {"theta_min",       "theta_max",        "steps",
                                               "arm_sets",        "mode",             "entropy_variant",
                                               "tangle_estimator", "output_path",     "threads"};
  for (const auto& item : doc.items()) {
    if (!kKnown.contains(item.key())) throw ConfigError("unknown config field \"" + item.key() + "\"");
  }
  if (doc.contains("theta_min")) base.theta_min = json_field<double>(doc, "theta_min");
  if (doc.contains("theta_max")) base.theta_max = json_field<double>(doc, "theta_max");
  if (doc.contains("steps")) base.steps = json_field<int>(doc, "steps");
  if (doc.contains("arm_sets")) {
    base.arm_sets.clear();
    try {
      for (const std::string& text : json_field<std::vector<std::string>>(doc, "arm_sets")) {
        base.arm_sets.push_back(ArmSet::parse(text));
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (doc.contains("mode")) {
    try {
      base.mode = parse_channel_mode(json_field<std::string>(doc, "mode"));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (doc.contains("entropy_variant")) {
    base.entropy_variant = parse_entropy_variant(json_field<std::string>(doc, "entropy_variant"));
  }
  if (doc.contains("tangle_estimator")) {
    base.tangle_estimator = parse_tangle_estimator(json_field<std::string>(doc, "tangle_estimator"));
  }
  if (doc.contains("output_path")) base.output_path = json_field<std::string>(doc, "output_path");
  if (doc.contains("threads")) base.threads = json_field<int>(doc, "threads");
  return base;
}

std::string to_json(const SweepConfig& config) {
  json arm_sets = json::array();
  for (const ArmSet& arms : config.arm_sets) arm_sets.push_back(arms.to_string());
  const json doc = {
      {"theta_min", config.theta_min},
      {"theta_max", config.theta_max},
      {"steps", config.steps},
      {"arm_sets", arm_sets},
      {"mode", std::string(to_string(config.mode))},
      {"entropy_variant", std::string(to_string(config.entropy_variant))},
      {"tangle_estimator", std::string(to_string(config.tangle_estimator))},
      {"output_path", config.output_path},
  };
  return doc.dump();
}

std::vector<double> theta_grid(double theta_min, double theta_max, int steps) {
  if (steps < 1) throw ConfigError("steps must be at least 1");
  if (steps == 1) return {theta_min};
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double span = theta_max - theta_min;
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] = theta_min + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  grid.back() = theta_max;
  return grid;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  validate(config);
  const std::vector<double> grid = theta_grid(config.theta_min, config.theta_max, config.steps);

  struct Point {
    double theta;
    ArmSet arms;
  };
  std::vector<Point> points;
  points.reserve(grid.size() * config.arm_sets.size());
  for (const ArmSet& arms : config.arm_sets) {
    for (double theta : grid) points.push_back({theta, arms});
  }

  const DensityMatrix ghz = to_density(ghz_state());
  std::vector<SweepRecord> records(points.size());
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.threads), points.size());

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](std::size_t first) {
    try {
      for (std::size_t i = first; i < points.size(); i += workers) {
        records[i] = evaluate_point(points[i].theta, points[i].arms, config, ghz);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    const std::string arms_a = a.arms.to_string();
    const std::string arms_b = b.arms.to_string();
    if (arms_a != arms_b) return arms_a < arms_b;
    return a.theta < b.theta;
  });
  return records;
}

std::string sweep_csv_header() {
  return "theta,arms,mode,purity,linear_entropy,linear_entropy_generalized,entropy,tangle_ab,tangle_ac,tangle_bc,"
         "three_tangle_estimate,tangle,residual_tangle,monogamy_gap";
}

void write_sweep_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRecord>& records) {
  out << "# ghzturb " << kVersion << " sweep " << to_json(config) << '\n';
  out << sweep_csv_header() << '\n';
  for (const SweepRecord& r : records) {
    const MeasureReport& m = r.report;
    out << format_number(r.theta) << ',' << r.arms.to_string() << ',' << to_string(r.mode) << ','
        << format_number(m.purity) << ',' << format_number(m.linear_entropy) << ','
        << format_number(m.linear_entropy_generalized) << ',' << format_number(r.entropy) << ','
        << format_number(m.tangle_ab) << ',' << format_number(m.tangle_ac) << ',' << format_number(m.tangle_bc)
        << ',' << format_number(m.three_tangle) << ',' << format_number(r.tangle) << ','
        << format_number(m.residual_tangle) << ',' << format_number(m.monogamy_gap) << '\n';
  }
}

std::vector<WernerPoint> werner_curve(int n_qubits, int steps, EntropyVariant variant, TangleEstimator estimator) {
  if (n_qubits != 2 && n_qubits != 3) {
    throw ConfigError("werner curves need 2 or 3 qubits, got " + std::to_string(n_qubits));
  }
  if (steps < 2) throw ConfigError("werner curves need at least 2 steps, got " + std::to_string(steps));
  std::vector<WernerPoint> points;
  points.reserve(static_cast<std::size_t>(steps));
  for (double p : theta_grid(0.0, 1.0, steps)) {
    const DensityMatrix rho = werner_state(p, n_qubits);
    WernerPoint point;
    point.p = p;
    point.entropy = variant == EntropyVariant::kPaper ? linear_entropy(rho) : linear_entropy_generalized(rho);
    if (n_qubits == 2) {
      point.tangle = tangle(rho);
    } else {
      const MeasureReport report = measure_report(rho);
      point.tangle = selected_tangle(report, estimator);
    }
    points.push_back(point);
  }
  return points;
}

void write_werner_csv(std::ostream& out, int n_qubits, int steps, EntropyVariant variant, TangleEstimator estimator,
                      const std::vector<WernerPoint>& points) {
  const json manifest = {
      {"qubits", n_qubits},
      {"steps", steps},
      {"entropy_variant", std::string(to_string(variant))},
      {"tangle_estimator", std::string(to_string(estimator))},
  };
  out << "# ghzturb " << kVersion << " werner-curve " << manifest.dump() << '\n';
  out << "p,entropy,tangle\n";
  for (const WernerPoint& point : points) {
    out << format_number(point.p) << ',' << format_number(point.entropy) << ',' << format_number(point.tangle)
        << '\n';
  }
}

std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

}  // namespace ghzturb
