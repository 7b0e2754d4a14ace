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

#include "entshare/config.hpp"
#include "entshare/pauli.hpp"
#include "entshare/share_set.hpp"
#include "entshare/states.hpp"

namespace entshare {

/**
 * An [[n,k,d]] stabilizer code. The distance is metadata only and never
 * used to decide correctability.
 */
struct StabilizerCode {
  std::string name;
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<PauliString> generators;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;
};

struct ValidationIssue {
  std::string message;
  /** 1-based indices of an offending pair, when the failure is pairwise. */
  std::optional<std::pair<int, int>> pair;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

/**
 * Checks generator count, commutation, independence, the logical operator
 * algebra and (when n fits the dense engine) that the codeword basis is
 * orthonormal and stabilized.
 */
ValidationReport validate(const StabilizerCode& code, int dense_limit = kDefaultDenseLimit);

/**
 * Codewords |C_j>, j = 0..2^k-1. |C_j> is the joint eigenvector of the
 * logical Z operators with eigenvalue (-1)^{bit} for the binary digits of j,
 * logical qubit 0 being the most significant digit. Each vector's first
 * nonzero amplitude is real and positive.
 */
std::vector<PureState> codeword_basis(const StabilizerCode& code,
                                      int dense_limit = kDefaultDenseLimit);

/**
 * True iff erasure of the shares in `erased` is correctable: no logical
 * operator is supported inside the set. Decided by GF(2) rank counting.
 */
bool erasure_correctable(const StabilizerCode& code, ShareSet erased);

/** Names accepted by builtin(). */
std::vector<std::string> builtin_names();

/** "shor_9_1_3", "code_4_2_2", "code_6_4_2" or "trivial_1_1". */
StabilizerCode builtin(const std::string& name);

}  // namespace entshare
