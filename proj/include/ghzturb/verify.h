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

#ifndef GHZTURB_VERIFY_H_
#define GHZTURB_VERIFY_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace ghzturb {

struct CheckResult {
  std::string name;
  /// Worst deviation seen, compared against `tolerance`.
  double worst_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Set when the check threw instead of producing a deviation.
  std::string error;
};

/// Built-in invariant suite: Werner closed forms, three-tangle anchors,
/// CKW equality on seeded random states, channel identities, arm symmetry
/// and stochastic-mode entropy ordering.
std::vector<CheckResult> run_verification();

/// One line per check; returns true iff all passed.
bool print_verification_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace ghzturb

#endif  // GHZTURB_VERIFY_H_
