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

#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "entshare/error.hpp"
#include "entshare/hybrid.hpp"
#include "entshare/shamir.hpp"
#include "support.hpp"

using namespace entshare;

namespace {

// Plain modular arithmetic for the share oracle.
std::uint64_t poly_at(const std::vector<std::uint64_t>& coeffs, std::uint64_t x, std::uint64_t p) {
  std::uint64_t value = 0, power = 1;
  for (auto c : coeffs) {
    value = (value + c * power) % p;
    power = power * x % p;
  }
  return value;
}

}  // namespace

TEST_CASE("phase encryption") {
  const auto phi = mes(1);
  CHECK((phase_encrypt(phi, PhaseKey(0, 2)).amplitudes() - phi.amplitudes()).norm() < 1e-15);
  Vector minus = Vector::Zero(4);
  minus(0) = 1.0 / std::sqrt(2.0);
  minus(3) = -1.0 / std::sqrt(2.0);
  CHECK((phase_encrypt(phi, PhaseKey(1, 2)).amplitudes() - minus).norm() < 1e-15);

  const auto phi2 = mes(2);
  for (std::uint64_t l = 0; l < 4; ++l) {
    const auto there = phase_encrypt(phi2, PhaseKey(l, 4));
    const auto back = phase_encrypt(there, PhaseKey((4 - l) % 4, 4));
    CHECK((back.amplitudes() - phi2.amplitudes()).norm() < 1e-12);
  }
  CHECK_THROWS_AS(phase_encrypt(phi, PhaseKey(1, 4)), DimensionError);
  CHECK_THROWS_AS(PhaseKey(4, 4), InputError);
}

TEST_CASE("key twirl equals the literal mixture over keys") {
  std::mt19937_64 rng(51);
  const SystemLayout layout({{"D", 2}, {"P1", 1}});
  for (int trial = 0; trial < 5; ++trial) {
    const auto psi = entshare::testing::random_pure(layout, rng);
    Matrix expected = Matrix::Zero(8, 8);
    for (int l = 0; l < 4; ++l) {
      Vector v = psi.amplitudes();
      for (Eigen::Index i = 0; i < 8; ++i) {
        const auto j = static_cast<double>(i >> 1);
        v(i) *= std::polar(1.0, 2.0 * std::numbers::pi * j * l / 4.0);
      }
      expected += v * v.adjoint() / 4.0;
    }
    CHECK(max_abs_difference(key_twirl(psi, 4).matrix(), expected) < 1e-14);
    const auto rho = DensityMatrix::from_pure(psi);
    CHECK(max_abs_difference(key_twirl(rho, 4).matrix(), expected) < 1e-14);
  }
}

TEST_CASE("key twirl of maximally entangled states is a diagonal ensemble") {
  Matrix half = Matrix::Zero(4, 4);
  half(0, 0) = half(3, 3) = 0.5;
  CHECK(max_abs_difference(key_twirl(mes(1), 2).matrix(), half) < 1e-15);
  Matrix quarter = Matrix::Zero(16, 16);
  for (int j = 0; j < 4; ++j) quarter(5 * j, 5 * j) = 0.25;
  CHECK(max_abs_difference(key_twirl(mes(2), 4).matrix(), quarter) < 1e-15);
  const DensityMatrix diagonal(SystemLayout({{"D", 1}, {"D'", 1}}), half);
  CHECK(max_abs_difference(key_twirl(diagonal, 2).matrix(), half) < 1e-15);
}

TEST_CASE("Shamir example over GF(5)") {
  const auto set = shamir_share(3, 3, 5, {2});
  REQUIRE(set.shares.size() == 3);
  CHECK(set.shares[0] == std::pair<int, std::uint64_t>{1, 0});
  CHECK(set.shares[1] == std::pair<int, std::uint64_t>{2, 2});
  CHECK(set.shares[2] == std::pair<int, std::uint64_t>{3, 4});
  for (const auto& pair : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}) {
    CHECK(shamir_reconstruct(set.select(pair)) == 3);
  }
  CHECK(shamir_reconstruct(set) == 3);
}

TEST_CASE("Shamir shares match a direct polynomial evaluation") {
  std::mt19937_64 rng(52);
  for (std::uint64_t p : {7u, 11u, 13u, 101u, 65537u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + static_cast<int>(rng() % std::min<std::uint64_t>(p - 1, 6));
      const int t = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(t - 1));
      for (auto& c : coeffs) c = rng() % p;
      const std::uint64_t secret = rng() % p;
      const auto set = shamir_share(secret, n, p, coeffs);
      std::vector<std::uint64_t> full{secret};
      full.insert(full.end(), coeffs.begin(), coeffs.end());
      for (const auto& [x, y] : set.shares) CHECK(y == poly_at(full, static_cast<std::uint64_t>(x), p));
      CHECK(shamir_reconstruct(set) == secret);
      std::vector<int> players;
      for (int i = n; i > n - t; --i) players.push_back(i);
      CHECK(shamir_reconstruct(set.select(players)) == secret);
    }
  }
}

TEST_CASE("seeded Shamir sharing is reproducible") {
  const auto a = shamir_share(5, 3, 6, 11, 99);
  const auto b = shamir_share(5, 3, 6, 11, 99);
  CHECK(a.shares == b.shares);
  CHECK(shamir_reconstruct(a) == 5);
  const auto zero = shamir_share(0, 5, 7, {0, 0, 0});
  for (const auto& s : zero.shares) CHECK(s.second == 0);
}

TEST_CASE("Shamir errors") {
  const auto set = shamir_share(3, 3, 5, {2});
  CHECK_THROWS_AS(shamir_reconstruct(set.select({2})), InsufficientSharesError);
  auto tampered = set;
  tampered.shares[2].second = 1;
  CHECK_THROWS_AS(shamir_reconstruct(tampered), IntegrityError);
  auto conflicting = set.select({1, 2});
  conflicting.shares.push_back({1, 4});
  CHECK_THROWS_AS(shamir_reconstruct(conflicting), IntegrityError);
  CHECK_THROWS_AS(shamir_share(1, 3, 6, {1}), InputError);   // p not prime
  CHECK_THROWS_AS(shamir_share(1, 5, 5, {1}), InputError);   // n >= p
  CHECK_THROWS_AS(shamir_share(7, 3, 5, {1}), InputError);   // secret outside the field
  CHECK_THROWS_AS(shamir_share(1, 2, 5, {1, 1}), InputError);  // t > n
}

TEST_CASE("t-1 Shamir shares are independent of the secret") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u}) {
    for (int t = 2; t <= 3; ++t) {
      const int n = std::min<int>(static_cast<int>(p) - 1, t + 1);
      if (n < t) continue;
      // Players 1..t-1 and the last t-1 players.
      for (int offset : {0, n - (t - 1)}) {
        std::map<std::vector<std::uint64_t>, int> reference;
        for (std::uint64_t secret = 0; secret < p; ++secret) {
          std::map<std::vector<std::uint64_t>, int> counts;
          std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(t - 1), 0);
          for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(std::pow(p, t - 1)); ++code) {
            std::uint64_t c = code;
            for (auto& v : coeffs) {
              v = c % p;
              c /= p;
            }
            const auto set = shamir_share(secret, n, p, coeffs);
            std::vector<std::uint64_t> view;
            for (int i = 0; i < t - 1; ++i) view.push_back(set.shares[static_cast<std::size_t>(offset + i)].second);
            ++counts[view];
          }
          CAPTURE(p);
          CAPTURE(t);
          CHECK(counts.size() == static_cast<std::size_t>(std::pow(p, t - 1)));
          if (secret == 0) reference = counts;
          CHECK(counts == reference);
        }
      }
    }
  }
}

TEST_CASE("classical share JSON") {
  const auto set = shamir_share(3, 3, 5, {2});
  const nlohmann::json j = set;
  CHECK(j.dump() == R"({"p":5,"shares":[[1,0],[2,2],[3,4]],"t":2})");
  const auto back = j.get<ClassicalShareSet>();
  CHECK(back.shares == set.shares);
  CHECK(back.p == 5);
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"p":5})").get<ClassicalShareSet>(), ParseError);
}

TEST_CASE("field parameters") {
  CHECK(default_prime(3, 2) == 5);
  CHECK(default_prime(4, 4) == 5);
  CHECK(default_prime(9, 2) == 11);
  CHECK(default_prime(6, 16) == 17);
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("hybrid [[4,2,2]] with four key shares needed") {
  const auto scheme = build_scheme(builtin("code_4_2_2"));
  const auto report = hybrid_analyze(scheme, 4, 7);
  for (const auto& view : report.subsets) {
    CAPTURE(view.subset.to_string());
    CHECK(view.key_unknown_separable);
    CHECK(view.key_unknown_residual < 1e-9);
    if (view.subset == ShareSet{1, 2, 3}) {
      CHECK(view.quantum_authorized);
      CHECK_FALSE(view.key_known);
    }
  }
  CHECK(report.secure());
}

TEST_CASE("hybrid [[4,2,2]] with three key shares needed") {
  const auto scheme = build_scheme(builtin("code_4_2_2"));
  const auto report = hybrid_analyze(scheme, 3, 7);
  std::size_t recovered = 0;
  for (const auto& view : report.subsets) {
    if (!view.key_known) continue;
    ++recovered;
    REQUIRE(view.recovery_fidelity);
    CHECK(*view.recovery_fidelity >= 1.0 - 1e-9);
    CHECK(view.reconstructed_key == report.key.l);
  }
  CHECK(recovered == 5);
  CHECK(report.secure());
}

TEST_CASE("key-unknown views are separable for every built-in scheme") {
  for (const auto& name : builtin_names()) {
    const auto scheme = build_scheme(builtin(name));
    const auto report = hybrid_analyze(scheme, scheme.shares(), 3);
    for (const auto& view : report.subsets) {
      CAPTURE(name);
      CAPTURE(view.subset.to_string());
      CHECK(view.key_unknown_residual < 1e-9);
    }
  }
}

TEST_CASE("hybrid analysis is deterministic in the seed") {
  const auto scheme = build_scheme(builtin("code_4_2_2"));
  const auto a = hybrid_analyze(scheme, 3, 11);
  const auto b = hybrid_analyze(scheme, 3, 11);
  CHECK(a.key.l == b.key.l);
  CHECK(a.classical.shares == b.classical.shares);
  CHECK_THROWS_AS(hybrid_analyze(scheme, 0, 1), InputError);
  CHECK_THROWS_AS(hybrid_analyze(scheme, 5, 1), InputError);
}
