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

#include "entshare/shamir.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "entshare/error.hpp"

namespace entshare {
namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 32;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1u) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1u;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void check_field(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw InputError("p must be a prime below 2^32, got " + std::to_string(p));
  }
}

std::uint64_t evaluate(const std::vector<std::uint64_t>& poly, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
  return acc;
}

// Lagrange value at x of the polynomial through the given points.
std::uint64_t interpolate(const std::vector<std::pair<int, std::uint64_t>>& points, std::uint64_t x,
                          std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::uint64_t num = 1, den = 1;
    const auto xi = static_cast<std::uint64_t>(points[i].first) % p;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const auto xj = static_cast<std::uint64_t>(points[j].first) % p;
      num = mulmod(num, (x + p - xj) % p, p);
      den = mulmod(den, (xi + p - xj) % p, p);
    }
    acc = (acc + mulmod(points[i].second, mulmod(num, inverse(den, p), p), p)) % p;
  }
  return acc;
}

}  // namespace

ClassicalShareSet ClassicalShareSet::select(const std::vector<int>& players) const {
  ClassicalShareSet out{p, t, {}};
  for (int player : players) {
    const auto it = std::find_if(shares.begin(), shares.end(),
                                 [player](const auto& s) { return s.first == player; });
    if (it == shares.end()) throw LookupError("no share for player " + std::to_string(player));
    out.shares.push_back(*it);
  }
  return out;
}

void to_json(nlohmann::json& j, const ClassicalShareSet& s) {
  nlohmann::json shares = nlohmann::json::array();
  for (const auto& [idx, value] : s.shares) shares.push_back({idx, value});
  j = nlohmann::json{{"p", s.p}, {"t", s.t}, {"shares", shares}};
}

void from_json(const nlohmann::json& j, ClassicalShareSet& s) {
  try {
    s.p = j.at("p").get<std::uint64_t>();
    s.t = j.at("t").get<int>();
    s.shares.clear();
    for (const auto& entry : j.at("shares")) {
      if (!entry.is_array() || entry.size() != 2) throw ParseError("share entries are [index, value]");
      s.shares.emplace_back(entry[0].get<int>(), entry[1].get<std::uint64_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("classical shares: ") + e.what());
  }
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::uint64_t default_prime(int n, std::uint64_t q) {
  std::uint64_t candidate = std::max<std::uint64_t>(static_cast<std::uint64_t>(std::max(n, 0)), q) + 1;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

ClassicalShareSet shamir_share(std::uint64_t secret, int t, int n, std::uint64_t p,
                               std::uint64_t seed) {
  check_field(p);
  if (t < 1) throw InputError("threshold must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  std::vector<std::uint64_t> coefficients(static_cast<std::size_t>(t - 1));
  for (auto& c : coefficients) c = coeff(rng);
  return shamir_share(secret, n, p, coefficients);
}

ClassicalShareSet shamir_share(std::uint64_t secret, int n, std::uint64_t p,
                               const std::vector<std::uint64_t>& coefficients) {
  check_field(p);
  const int t = static_cast<int>(coefficients.size()) + 1;
  if (t > n) throw InputError("threshold exceeds the number of players");
  if (static_cast<std::uint64_t>(n) >= p) throw InputError("need n < p");
  if (secret >= p) throw InputError("secret must be a field element");
  std::vector<std::uint64_t> poly{secret};
  for (auto c : coefficients) {
    if (c >= p) throw InputError("coefficient outside the field");
    poly.push_back(c);
  }
  ClassicalShareSet out{p, t, {}};
  for (int x = 1; x <= n; ++x) {
    out.shares.emplace_back(x, evaluate(poly, static_cast<std::uint64_t>(x), p));
  }
  return out;
}

std::uint64_t shamir_reconstruct(const ClassicalShareSet& set) {
  check_field(set.p);
  if (set.t < 1) throw InputError("threshold must be at least 1");
  std::vector<std::pair<int, std::uint64_t>> distinct;
  for (const auto& share : set.shares) {
    if (share.first < 1 || static_cast<std::uint64_t>(share.first) >= set.p) {
      throw InputError("share index out of range: " + std::to_string(share.first));
    }
    if (share.second >= set.p) throw InputError("share value outside the field");
    const auto it = std::find_if(distinct.begin(), distinct.end(),
                                 [&](const auto& d) { return d.first == share.first; });
    if (it == distinct.end()) {
      distinct.push_back(share);
    } else if (it->second != share.second) {
      throw IntegrityError("conflicting values for player " + std::to_string(share.first));
    }
  }
  const auto t = static_cast<std::size_t>(set.t);
  if (distinct.size() < t) {
    throw InsufficientSharesError("need " + std::to_string(t) + " shares, got " +
                                  std::to_string(distinct.size()));
  }
  const std::vector<std::pair<int, std::uint64_t>> basis(distinct.begin(), distinct.begin() + static_cast<std::ptrdiff_t>(t));
  for (std::size_t i = t; i < distinct.size(); ++i) {
    const auto x = static_cast<std::uint64_t>(distinct[i].first);
    if (interpolate(basis, x, set.p) != distinct[i].second) {
      throw IntegrityError("share of player " + std::to_string(distinct[i].first) +
                           " is inconsistent with the others");
    }
  }
  return interpolate(basis, 0, set.p);
}

}  // namespace entshare
