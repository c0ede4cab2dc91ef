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

#include "ghzturb/turbulence.h"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ghzturb {

namespace {

constexpr double kVanishingTrace = 1e-300;

void require_theta(double theta, const char* what) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument(std::string(what) + ": theta must lie in [0, pi], got " + std::to_string(theta));
  }
}

// A(t) for any real t; negative values appear in the stochastic branches.
ComplexMatrix hyperbolic(double t) {
  const double c = std::cosh(t);
  const double s = std::sinh(t);
  return ComplexMatrix::from_rows({{c, s}, {s, c}});
}

// Product operator with arm-specific signed strengths.
ComplexMatrix product_operator(const std::array<double, 3>& strengths, ArmSet arms) {
  const ComplexMatrix identity = ComplexMatrix::identity(2);
  ComplexMatrix out = arms.contains(1) ? hyperbolic(strengths[0]) : identity;
  for (int arm = 2; arm <= 3; ++arm) {
    out = kron(out, arms.contains(arm) ? hyperbolic(strengths[arm - 1]) : identity);
  }
  return out;
}

ComplexMatrix divide_by_trace(ComplexMatrix m, const char* what) {
  const Complex tr = trace(m);
  if (std::abs(tr) < kVanishingTrace) {
    throw std::domain_error(std::string(what) + ": normalization trace vanishes");
  }
  m *= 1.0 / tr;
  return m;
}

}  // namespace

ArmSet ArmSet::parse(std::string_view text) {
  std::uint8_t mask = 0;
  for (char ch : text) {
    if (ch < '1' || ch > '3') {
      throw std::invalid_argument("ArmSet: invalid arm '" + std::string(1, ch) + "' in \"" + std::string(text) +
                                  "\"");
    }
    const std::uint8_t bit = static_cast<std::uint8_t>(1u << (ch - '1'));
    if (mask & bit) {
      throw std::invalid_argument("ArmSet: arm repeated in \"" + std::string(text) + "\"");
    }
    mask |= bit;
  }
  return ArmSet(mask);
}

ArmSet ArmSet::single(int arm) {
  if (arm < 1 || arm > 3) {
    throw std::invalid_argument("ArmSet: arm must be 1, 2 or 3, got " + std::to_string(arm));
  }
  return ArmSet(static_cast<std::uint8_t>(1u << (arm - 1)));
}

ArmSet ArmSet::from_mask(unsigned mask) {
  if (mask > 0b111) {
    throw std::invalid_argument("ArmSet: mask " + std::to_string(mask) + " names arms beyond 3");
  }
  return ArmSet(static_cast<std::uint8_t>(mask));
}

int ArmSet::size() const { return std::popcount(mask_); }

std::string ArmSet::to_string() const {
  std::string out;
  for (int arm = 1; arm <= 3; ++arm) {
    if (contains(arm)) out.push_back(static_cast<char>('0' + arm));
  }
  return out;
}

std::string_view to_string(ChannelMode mode) {
  switch (mode) {
    case ChannelMode::kLiteral:
      return "literal";
    case ChannelMode::kConjugate:
      return "conjugate";
    case ChannelMode::kStochastic:
      return "stochastic";
  }
  return "unknown";
}

ChannelMode parse_channel_mode(std::string_view text) {
  if (text == "literal") return ChannelMode::kLiteral;
  if (text == "conjugate") return ChannelMode::kConjugate;
  if (text == "stochastic") return ChannelMode::kStochastic;
  throw std::invalid_argument("unknown channel mode \"" + std::string(text) +
                              "\" (expected literal, conjugate or stochastic)");
}

TurbulenceChannel::TurbulenceChannel(double theta_in, ArmSet arms_in, ChannelMode mode_in)
    : theta(theta_in), arms(arms_in), mode(mode_in) {
  require_theta(theta, "TurbulenceChannel");
}

ComplexMatrix turbulence_operator(double theta) {
  require_theta(theta, "turbulence_operator");
  return hyperbolic(theta);
}

ComplexMatrix arm_operator(const TurbulenceChannel& channel) {
  require_theta(channel.theta, "arm_operator");
  return product_operator({channel.theta, channel.theta, channel.theta}, channel.arms);
}

DensityMatrix apply_turbulence(const DensityMatrix& rho, const TurbulenceChannel& channel) {
  require_theta(channel.theta, "apply_turbulence");
  if (rho.n_qubits() != 3) {
    throw std::invalid_argument("apply_turbulence: expected a 3-qubit state, got " +
                                std::to_string(rho.n_qubits()));
  }
  if (!rho.normalized()) {
    throw std::invalid_argument("apply_turbulence: input must be a normalized density matrix");
  }
  if (channel.arms.empty()) return rho;

  const ComplexMatrix& m = rho.matrix();
  switch (channel.mode) {
    case ChannelMode::kLiteral: {
      const ComplexMatrix k = arm_operator(channel);
      return DensityMatrix::unnormalized(3, divide_by_trace(matmul(m, k), "apply_turbulence"));
    }
    case ChannelMode::kConjugate: {
      const ComplexMatrix k = arm_operator(channel);
      ComplexMatrix out = divide_by_trace(matmul(matmul(k, m), dagger(k)), "apply_turbulence");
      return DensityMatrix(3, 0.5 * (out + dagger(out)));
    }
    case ChannelMode::kStochastic: {
      // One branch per sign pattern over the turbulent arms; bit a of
      // `pattern` flips the sign on arm a+1. Patterns touching clean arms
      // duplicate other branches and are skipped.
      ComplexMatrix sum(8, 8);
      for (unsigned pattern = 0; pattern < 8; ++pattern) {
        if ((pattern & ~static_cast<unsigned>(channel.arms.mask())) != 0) continue;
        std::array<double, 3> strengths{};
        for (int a = 0; a < 3; ++a) strengths[a] = ((pattern >> a) & 1u) ? -channel.theta : channel.theta;
        const ComplexMatrix k = product_operator(strengths, channel.arms);
        sum += matmul(matmul(k, m), dagger(k));
      }
      ComplexMatrix out = divide_by_trace(std::move(sum), "apply_turbulence");
      return DensityMatrix(3, 0.5 * (out + dagger(out)));
    }
  }
  throw std::invalid_argument("apply_turbulence: unknown channel mode");
}

}  // namespace ghzturb
