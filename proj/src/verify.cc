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

#include "ghzturb/verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "ghzturb/measures.h"
#include "ghzturb/states.h"
#include "ghzturb/sweep.h"
#include "ghzturb/turbulence.h"

namespace ghzturb {

namespace {

constexpr std::uint64_t kSeed = 20260101;

constexpr std::array<ChannelMode, 3> kModes = {ChannelMode::kLiteral, ChannelMode::kConjugate,
                                               ChannelMode::kStochastic};

std::vector<double> unit_grid(int points) { return theta_grid(0.0, 1.0, points); }

double report_distance(const MeasureReport& a, const MeasureReport& b) {
  const std::array<double, 9> diffs = {
      a.purity - b.purity,
      a.linear_entropy - b.linear_entropy,
      a.linear_entropy_generalized - b.linear_entropy_generalized,
      a.tangle_ab - b.tangle_ab,
      a.tangle_ac - b.tangle_ac,
      a.tangle_bc - b.tangle_bc,
      a.three_tangle - b.three_tangle,
      a.residual_tangle - b.residual_tangle,
      a.monogamy_gap - b.monogamy_gap,
  };
  double worst = 0.0;
  for (double d : diffs) worst = std::max(worst, std::abs(d));
  return worst;
}

DensityMatrix relabel(const DensityMatrix& rho, const std::array<int, 3>& perm) {
  ComplexMatrix m = permute_qubits(rho.matrix(), 3, perm);
  return rho.normalized() ? DensityMatrix(3, std::move(m)) : DensityMatrix::unnormalized(3, std::move(m));
}

double wootters_closed_form() {
  double worst = 0.0;
  for (double p : unit_grid(101)) {
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    worst = std::max(worst, std::abs(concurrence(werner_state(p, 2)) - expected));
  }
  return worst;
}

double werner_purity_closed_form() {
  double worst = 0.0;
  for (int n : {2, 3}) {
    const double dim = std::pow(2.0, n);
    for (double p : unit_grid(101)) {
      const double expected = p * p + 2.0 * p * (1.0 - p) / dim + (1.0 - p) * (1.0 - p) / dim;
      worst = std::max(worst, std::abs(purity(werner_state(p, n)) - expected));
    }
  }
  return worst;
}

double werner_spectrum() {
  double worst = 0.0;
  for (int n : {2, 3}) {
    const double dim = std::pow(2.0, n);
    for (double p : unit_grid(101)) {
      const std::vector<double> values = hermitian_eigenvalues(werner_state(p, n).matrix());
      const double low = (1.0 - p) / dim;
      for (std::size_t k = 0; k + 1 < values.size(); ++k) worst = std::max(worst, std::abs(values[k] - low));
      worst = std::max(worst, std::abs(values.back() - (p + low)));
    }
  }
  return worst;
}

double three_tangle_anchors() {
  return std::max(std::abs(three_tangle(ghz_state()) - 1.0), std::abs(three_tangle(w_state())));
}

double ckw_monogamy() {
  std::mt19937_64 rng(kSeed);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    worst = std::max(worst, std::abs(monogamy_report(haar_random_state(3, rng)).monogamy_gap));
  }
  return worst;
}

double local_phase_invariance() {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PureState psi = haar_random_state(3, rng);
    const int qubit = i % 3;
    const Complex phase = std::polar(1.0, angle(rng));
    std::vector<Complex> rotated(psi.amplitudes().begin(), psi.amplitudes().end());
    for (std::size_t index = 0; index < rotated.size(); ++index) {
      if ((index >> (2 - qubit)) & 1u) rotated[index] *= phase;
    }
    worst = std::max(worst, std::abs(three_tangle(PureState(3, rotated)) - three_tangle(psi)));
  }
  return worst;
}

double channel_identity() {
  const std::array<DensityMatrix, 3> inputs = {to_density(ghz_state()), to_density(w_state()),
                                               werner_state(0.6, 3)};
  double worst = 0.0;
  for (const DensityMatrix& rho : inputs) {
    for (ChannelMode mode : kModes) {
      for (unsigned mask = 1; mask < 8; ++mask) {
        const DensityMatrix out = apply_turbulence(rho, TurbulenceChannel(0.0, ArmSet::from_mask(mask), mode));
        worst = std::max(worst, max_abs_diff(out.matrix(), rho.matrix()));
      }
    }
  }
  return worst;
}

double conjugate_purity_preservation() {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_real_distribution<double> theta(0.0, std::numbers::pi / 2);
  double worst = 0.0;
  const std::array<const char*, 7> subsets = {"1", "2", "3", "12", "13", "23", "123"};
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = to_density(haar_random_state(3, rng));
    const TurbulenceChannel channel(theta(rng), ArmSet::parse(subsets[i % 7]), ChannelMode::kConjugate);
    worst = std::max(worst, std::abs(purity(apply_turbulence(rho, channel)) - 1.0));
  }
  return worst;
}

double sequential_equals_simultaneous() {
  const DensityMatrix ghz = to_density(ghz_state());
  double worst = 0.0;
  for (ChannelMode mode : {ChannelMode::kConjugate, ChannelMode::kStochastic}) {
    for (double theta : {0.1, 0.5, 1.0, 1.5}) {
      const DensityMatrix first = apply_turbulence(ghz, TurbulenceChannel(theta, ArmSet::single(1), mode));
      const DensityMatrix sequential = apply_turbulence(first, TurbulenceChannel(theta, ArmSet::single(2), mode));
      const DensityMatrix simultaneous = apply_turbulence(ghz, TurbulenceChannel(theta, ArmSet::parse("12"), mode));
      worst = std::max(worst, max_abs_diff(sequential.matrix(), simultaneous.matrix()));
    }
  }
  return worst;
}

double arm_permutation_symmetry() {
  const DensityMatrix ghz = to_density(ghz_state());
  double worst = 0.0;
  for (ChannelMode mode : kModes) {
    for (double theta : theta_grid(0.1, std::numbers::pi / 2, 10)) {
      const MeasureReport reference =
          measure_report(apply_turbulence(ghz, TurbulenceChannel(theta, ArmSet::single(1), mode)));
      const DensityMatrix on_two = apply_turbulence(ghz, TurbulenceChannel(theta, ArmSet::single(2), mode));
      const DensityMatrix on_three = apply_turbulence(ghz, TurbulenceChannel(theta, ArmSet::single(3), mode));
      worst = std::max(worst, report_distance(reference, measure_report(relabel(on_two, {1, 0, 2}))));
      worst = std::max(worst, report_distance(reference, measure_report(relabel(on_three, {2, 1, 0}))));
    }
  }
  return worst;
}

std::array<std::vector<double>, 3> stochastic_entropy_curves() {
  const DensityMatrix ghz = to_density(ghz_state());
  const std::array<ArmSet, 3> arm_sets = {ArmSet::parse("1"), ArmSet::parse("12"), ArmSet::parse("123")};
  std::array<std::vector<double>, 3> curves;
  for (std::size_t a = 0; a < arm_sets.size(); ++a) {
    for (double theta : theta_grid(0.0, std::numbers::pi / 2, 50)) {
      curves[a].push_back(
          linear_entropy(apply_turbulence(ghz, TurbulenceChannel(theta, arm_sets[a], ChannelMode::kStochastic))));
    }
  }
  return curves;
}

double stochastic_entropy_monotone() {
  double worst_drop = 0.0;
  for (const std::vector<double>& curve : stochastic_entropy_curves()) {
    for (std::size_t i = 1; i < curve.size(); ++i) worst_drop = std::max(worst_drop, curve[i - 1] - curve[i]);
  }
  return worst_drop;
}

double stochastic_arm_ordering() {
  const auto curves = stochastic_entropy_curves();
  double worst = 0.0;
  for (std::size_t i = 0; i < curves[0].size(); ++i) {
    worst = std::max({worst, curves[0][i] - curves[1][i], curves[1][i] - curves[2][i]});
  }
  return worst;
}

double stochastic_validity() {
  const DensityMatrix ghz = to_density(ghz_state());
  std::mt19937_64 rng(kSeed + 3);
  double worst = 0.0;
  for (const char* arms : {"1", "2", "3", "12", "13", "23", "123"}) {
    for (double theta : {0.3, 1.0, 2.0, std::numbers::pi}) {
      for (const DensityMatrix& input : {ghz, to_density(haar_random_state(3, rng))}) {
        const DensityMatrix out =
            apply_turbulence(input, TurbulenceChannel(theta, ArmSet::parse(arms), ChannelMode::kStochastic));
        const ComplexMatrix& m = out.matrix();
        worst = std::max(worst, max_abs_diff(m, dagger(m)));
        worst = std::max(worst, std::abs(trace(m) - 1.0));
        worst = std::max(worst, -hermitian_eigenvalues(m).front());
      }
    }
  }
  return worst;
}

double werner_curve_endpoints() {
  const std::vector<WernerPoint> curve =
      werner_curve(2, 11, EntropyVariant::kPaper, TangleEstimator::kDominantEigenvector);
  const WernerPoint& first = curve.front();
  const WernerPoint& last = curve.back();
  return std::max({std::abs(first.p), std::abs(first.entropy - 1.0), std::abs(first.tangle),
                   std::abs(last.p - 1.0), std::abs(last.entropy), std::abs(last.tangle - 1.0)});
}

double sweep_determinism() {
  SweepConfig config;
  config.steps = 25;
  auto render = [&](int threads) {
    config.threads = threads;
    std::ostringstream out;
    write_sweep_csv(out, config, run_sweep(config));
    return out.str();
  };
  const std::string once = render(1);
  return once == render(1) && once == render(4) ? 0.0 : 1.0;
}

}  // namespace

std::vector<CheckResult> run_verification() {
  struct Check {
    const char* name;
    double tolerance;
    std::function<double()> run;
  };
  const std::vector<Check> checks = {
      {"wootters_closed_form", 1e-10, wootters_closed_form},
      {"werner_purity_closed_form", 1e-12, werner_purity_closed_form},
      {"werner_spectrum", 1e-10, werner_spectrum},
      {"three_tangle_anchors", 1e-12, three_tangle_anchors},
      {"ckw_monogamy_1000_random", 1e-8, ckw_monogamy},
      {"three_tangle_local_phase_invariance", 1e-10, local_phase_invariance},
      {"channel_identity_theta0", 1e-12, channel_identity},
      {"conjugate_purity_preservation", 1e-10, conjugate_purity_preservation},
      {"sequential_equals_simultaneous", 1e-10, sequential_equals_simultaneous},
      {"arm_permutation_symmetry", 1e-10, arm_permutation_symmetry},
      {"stochastic_valid_density_matrix", 1e-10, stochastic_validity},
      {"stochastic_entropy_monotone", 1e-10, stochastic_entropy_monotone},
      {"stochastic_entropy_arm_ordering", 1e-10, stochastic_arm_ordering},
      {"werner_curve_endpoints", 1e-12, werner_curve_endpoints},
      {"sweep_determinism", 0.5, sweep_determinism},
  };

  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const Check& check : checks) {
    CheckResult result{check.name, 0.0, check.tolerance, false, {}};
    try {
      result.worst_deviation = check.run();
      result.passed = std::isfinite(result.worst_deviation) && result.worst_deviation <= check.tolerance;
    } catch (const std::exception& e) {
      result.error = e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

bool print_verification_report(std::ostream& out, const std::vector<CheckResult>& results) {
  bool all_passed = true;
  for (const CheckResult& r : results) {
    all_passed = all_passed && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.error.empty()) {
      out << "  error: " << r.error << '\n';
      continue;
    }
    out << "  worst=" << format_number(r.worst_deviation) << " tol=" << format_number(r.tolerance) << '\n';
  }
  out << (all_passed ? "all checks passed" : "verification FAILED") << '\n';
  return all_passed;
}

}  // namespace ghzturb
