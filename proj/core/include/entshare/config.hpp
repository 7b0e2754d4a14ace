// Copyright 2026 The entshare Authors
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

#pragma once

namespace entshare {

/**
 * Numerical tolerances shared by every module.
 *
 * A single record so reports can echo the exact configuration they were
 * produced with.
 */
struct Tolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  /** Smallest eigenvalue still accepted as positive semidefinite. */
  double psd_floor = -1e-10;
  /** Generic comparison tolerance (PPT test, product test, certificates). */
  double compare = 1e-9;
  /** Eigenvalues at or below this are dropped from entropy sums. */
  double entropy_floor = 1e-12;
  /** Mutual information above this marks an unauthorized set as correlated. */
  double correlation = 1e-6;
};

/** Largest register (in qubits) the dense engine will allocate. */
inline constexpr int kDefaultDenseLimit = 12;

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace entshare
