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

#include "oracle/brute_force.h"

#include "gtest/gtest.h"

// Pins the oracle itself. The frozen values were cross-checked against an
// independent numpy evaluation of the same branch sums.
TEST(oracle, FrozenStochasticEntropies) {
  EXPECT_NEAR(oracle::stochastic_linear_entropy({true, false, false}, 0.5), 0.3866837722573161, 1e-13);
  EXPECT_NEAR(oracle::stochastic_linear_entropy({true, true, true}, 0.5), 0.8236215523858652, 1e-13);
  EXPECT_NEAR(oracle::stochastic_linear_entropy({true, true, false}, 1.0), 0.9512356037470795, 1e-13);
}

TEST(oracle, IdentityAtZeroTheta) {
  EXPECT_NEAR(oracle::stochastic_linear_entropy({true, true, true}, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(oracle::purity(oracle::ghz_projector()), 1.0, 1e-15);
}

TEST(oracle, BranchOperatorHasUnitDeterminantFactors) {
  // cosh^2 - sinh^2 = 1 on the single-arm block.
  const auto k = oracle::branch_operator({true, false, false}, {1, 1, 1}, 0.7);
  EXPECT_NEAR(k[0][0] * k[4][4] - k[0][4] * k[4][0], 1.0, 1e-14);
}
