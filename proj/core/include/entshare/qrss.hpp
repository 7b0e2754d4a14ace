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

#include <optional>
#include <string>
#include <vector>

#include "entshare/schemes.hpp"

namespace entshare {

struct TeleportOutcome {
  /** Single qubit, label "B". */
  DensityMatrix output;
  /** sum_ij |i><j| (x) Phi(|i><j|), input index first. */
  Matrix choi;
  bool cptp = false;
};

/**
 * Averaged teleportation: Bell measurement on the input and the first
 * resource qubit, then (optionally) the Pauli correction I, Z, X or ZX on
 * the second resource qubit for outcomes beta_0..beta_3.
 */
TeleportOutcome teleport(const DensityMatrix& input, const DensityMatrix& resource,
                         bool use_corrections = true);

/** Choi matrix PSD and its input marginal equal to the identity. */
bool is_cptp_choi(const Matrix& choi, double tol = 1e-10);

/** Input states by name: "0", "1", "+", "-", "+i", "-i". */
DensityMatrix named_qubit_state(const std::string& name, const std::string& label = "S");

/** Two-qubit resources by name: "bell", "classical", "product". */
DensityMatrix named_resource(const std::string& name);

struct LeakageEntry {
  ShareSet subset;
  SubsetStatus status = SubsetStatus::Intermediate;
  /** "certificate", "ppt", "npt" or "undetermined". */
  std::string evidence;
  std::string certificate;
  std::optional<double> residual;
  double negativity = 0.0;
};

/**
 * Illustration only: a classically correlated two-qubit resource built from
 * a certified ensemble (dealer basis relabelled to |0>,|1>, share side
 * replaced by its optimal two-outcome guess), and what teleporting |+>
 * through it delivers.
 */
struct TeleportDemo {
  ShareSet subset;
  double guess_probability = 0.0;
  DensityMatrix resource;
  TeleportOutcome outcome;
  double off_diagonal = 0.0;
  bool diagonal_only = false;
};

struct LeakageReport {
  std::string code_name;
  std::vector<LeakageEntry> entries;  // every unauthorized, non-forbidden set
  /** "classical only", "quantum leakage" or "undetermined". */
  std::string verdict;
  std::optional<TeleportDemo> demo;
  std::string demo_note;
};

LeakageReport qrss_leakage_report(const EntanglementSharingScheme& scheme, const SchemeReport& report,
                                  const Tolerances& tol = default_tolerances());

}  // namespace entshare
