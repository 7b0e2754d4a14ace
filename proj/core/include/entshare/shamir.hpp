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
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace entshare {

/** Shamir shares of one secret over GF(p). Player indices are 1-based. */
struct ClassicalShareSet {
  std::uint64_t p = 0;
  int t = 0;
  std::vector<std::pair<int, std::uint64_t>> shares;

  /** The shares held by the listed players, same p and t. */
  ClassicalShareSet select(const std::vector<int>& players) const;
};

void to_json(nlohmann::json& j, const ClassicalShareSet& s);
void from_json(const nlohmann::json& j, ClassicalShareSet& s);

bool is_prime(std::uint64_t value);

/** Smallest prime strictly greater than max(n, q). */
std::uint64_t default_prime(int n, std::uint64_t q);

/**
 * Evaluates secret + c_1 x + ... + c_{t-1} x^{t-1} at x = 1..n with the
 * coefficients drawn from a seeded mt19937_64. Requires 1 <= t <= n < p,
 * p prime, p < 2^32 and secret < p.
 */
ClassicalShareSet shamir_share(std::uint64_t secret, int t, int n, std::uint64_t p,
                               std::uint64_t seed);

/** Same, with explicit higher coefficients (t - 1 of them). */
ClassicalShareSet shamir_share(std::uint64_t secret, int n, std::uint64_t p,
                               const std::vector<std::uint64_t>& coefficients);

/**
 * Lagrange interpolation at 0 from the first t distinct shares. Any further
 * shares must lie on the same polynomial, otherwise IntegrityError.
 * Fewer than t distinct players raise InsufficientSharesError.
 */
std::uint64_t shamir_reconstruct(const ClassicalShareSet& shares);

}  // namespace entshare
