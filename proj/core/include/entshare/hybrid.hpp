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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entshare/schemes.hpp"
#include "entshare/shamir.hpp"

namespace entshare {

/** Classical key l in Z_q. */
struct PhaseKey {
  std::uint64_t l = 0;
  std::uint64_t q = 2;

  /** Throws InputError unless q >= 1 and l < q. */
  PhaseKey(std::uint64_t l, std::uint64_t q);
};

/**
 * Multiplies the |j>_D branch by exp(2 pi i j l / q). D must be the first
 * subsystem and have dimension q.
 */
PureState phase_encrypt(const PureState& state, const PhaseKey& key);
DensityMatrix phase_encrypt(const DensityMatrix& rho, const PhaseKey& key);

/** (1/q) sum_l U^l |psi><psi| U^l^dagger. */
DensityMatrix key_twirl(const PureState& state, std::uint64_t q);
DensityMatrix key_twirl(const DensityMatrix& rho, std::uint64_t q);

struct HybridSubsetView {
  ShareSet subset;
  bool quantum_authorized = false;
  /** Players in the subset each hold one classical share. */
  int key_shares = 0;
  /** Subset is in Q': quantum-authorized and at least t key shares. */
  bool key_known = false;
  std::optional<std::uint64_t> reconstructed_key;
  std::optional<double> recovery_fidelity;
  /** Dealer-diagonal decomposition residual of the key-twirled D,subset state. */
  double key_unknown_residual = 0.0;
  bool key_unknown_separable = false;
};

struct HybridReport {
  std::string code_name;
  int n = 0;
  int k = 0;
  std::uint64_t q = 0;
  int t = 0;
  std::uint64_t seed = 0;
  PhaseKey key{0, 2};
  ClassicalShareSet classical;
  std::vector<HybridSubsetView> subsets;  // report order

  /** Every key-known set recovers and every key-unknown view is separable. */
  bool secure(double tol = 1e-9) const;
};

/**
 * Draws l from the seed, shares it t-of-n over GF(p) (default p from
 * default_prime) and analyzes every subset. Requires n <= 10 and
 * 1 <= t <= n.
 */
HybridReport hybrid_analyze(const EntanglementSharingScheme& scheme, int t, std::uint64_t seed,
                            std::optional<std::uint64_t> p = std::nullopt,
                            const Tolerances& tol = default_tolerances());

}  // namespace entshare
