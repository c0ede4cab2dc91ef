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

#ifndef GHZTURB_TURBULENCE_H_
#define GHZTURB_TURBULENCE_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "ghzturb/qmat.h"
#include "ghzturb/states.h"

namespace ghzturb {

/// Subset of the three photon arms, numbered 1..3.
class ArmSet {
 public:
  constexpr ArmSet() = default;

  /// Parses a canonical-or-not digit string such as "13" or "31". Throws
  /// std::invalid_argument on characters other than 1-3 or repeats.
  static ArmSet parse(std::string_view text);
  static ArmSet single(int arm);
  /// Bit k set means arm k+1 is turbulent. Throws for masks above 0b111.
  static ArmSet from_mask(unsigned mask);
  static constexpr ArmSet all() { return ArmSet(0b111); }

  bool contains(int arm) const { return arm >= 1 && arm <= 3 && ((mask_ >> (arm - 1)) & 1u) != 0; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  std::uint8_t mask() const { return mask_; }

  /// Ascending digits, e.g. "12"; the empty set renders as "".
  std::string to_string() const;

  friend constexpr bool operator==(ArmSet, ArmSet) = default;

 private:
  constexpr explicit ArmSet(std::uint8_t mask) : mask_(mask) {}
  std::uint8_t mask_ = 0;
};

enum class ChannelMode {
  /// rho K, divided by its trace; not Hermitian in general.
  kLiteral,
  /// K rho K^dagger, divided by its trace.
  kConjugate,
  /// Every turbulent arm independently sees A(+theta) or A(-theta) with
  /// weight 1/2; the branch mixture is divided by its trace.
  kStochastic,
};

std::string_view to_string(ChannelMode mode);
/// Accepts "literal", "conjugate" and "stochastic".
ChannelMode parse_channel_mode(std::string_view text);

struct TurbulenceChannel {
  /// Throws std::invalid_argument unless 0 <= theta <= pi.
  TurbulenceChannel(double theta, ArmSet arms, ChannelMode mode);

  double theta;
  ArmSet arms;
  ChannelMode mode;
};

/// [[cosh t, sinh t], [sinh t, cosh t]] for t in [0, pi]. Unit determinant,
/// not unitary.
ComplexMatrix turbulence_operator(double theta);

/// M1 x M2 x M3 with Mi = A(theta) on turbulent arms and I elsewhere.
ComplexMatrix arm_operator(const TurbulenceChannel& channel);

/// Sends a normalized three-qubit state through the channel. An empty arm
/// set is the identity. Throws std::domain_error if the renormalizing trace
/// vanishes.
DensityMatrix apply_turbulence(const DensityMatrix& rho, const TurbulenceChannel& channel);

}  // namespace ghzturb

#endif  // GHZTURB_TURBULENCE_H_
