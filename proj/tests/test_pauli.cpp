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

#include <random>

#include "entshare/error.hpp"
#include "entshare/pauli.hpp"
#include "support.hpp"

using namespace entshare;
using entshare::testing::letters_dense;

namespace {

std::string random_letters(std::size_t n, std::mt19937_64& rng) {
  static const char kOps[] = {'I', 'X', 'Y', 'Z'};
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(kOps[pick(rng)]);
  return s;
}

Complex prefix_value(const std::string& prefix) {
  if (prefix == "-") return -1.0;
  if (prefix == "+i") return Complex(0, 1);
  if (prefix == "-i") return Complex(0, -1);
  return 1.0;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(PauliString::parse("XYZI").to_string() == "XYZI");
  CHECK(PauliString::parse("+XZ").to_string() == "XZ");
  CHECK(PauliString::parse("-iXYZ").to_string() == "-iXYZ");
  CHECK(PauliString::parse("+iZ").phase() == 1);
  CHECK(PauliString::parse("-Z").phase() == 2);
  CHECK(PauliString::parse("\xE2\x88\x92X").phase() == 2);
  CHECK(PauliString::parse("XIIX").weight() == 2);
  CHECK(PauliString::parse("IXIY").support() == std::vector<std::size_t>{1, 3});
  CHECK_THROWS_AS(PauliString::parse("XQ"), ParseError);
  CHECK_THROWS_AS(PauliString::parse("iX"), ParseError);
  CHECK_THROWS_AS(PauliString::parse(""), ParseError);
}

TEST_CASE("dense form matches the Kronecker product of letters") {
  std::mt19937_64 rng(11);
  for (const std::string prefix : {"", "-", "+i", "-i"}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::string letters = random_letters(1 + trial % 4, rng);
      const Matrix expected = prefix_value(prefix) * letters_dense(letters);
      const Matrix got = to_dense(PauliString::parse(prefix + letters));
      CHECK((got - expected).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("products and commutation agree with dense matrices") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const auto a = PauliString::parse(random_letters(n, rng));
    const auto b = PauliString::parse((trial % 2 ? "-i" : "") + random_letters(n, rng));
    const Matrix da = to_dense(a), db = to_dense(b);
    CHECK((to_dense(a * b) - da * db).cwiseAbs().maxCoeff() < 1e-14);
    const bool dense_commute = (da * db - db * da).cwiseAbs().maxCoeff() < 1e-14;
    CHECK(commutes(a, b) == dense_commute);
    CHECK(symplectic_product(a, b) == !dense_commute);
  }
}

TEST_CASE("single-qubit algebra") {
  const auto x = PauliString::parse("X"), y = PauliString::parse("Y"), z = PauliString::parse("Z");
  CHECK(x * y == PauliString::parse("+iZ"));
  CHECK(y * x == PauliString::parse("-iZ"));
  CHECK(x * x == PauliString::parse("I"));
  CHECK(z * x == PauliString::parse("+iY"));
  CHECK_FALSE(commutes(x, z));
  CHECK(commutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
}

TEST_CASE("inverse and identity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = PauliString::parse((trial % 2 ? "+i" : "-") + random_letters(3, rng));
    CHECK((p * p.inverse()).is_identity());
    CHECK((p * p.inverse()).phase() == 0);
  }
  CHECK(PauliString(3).is_identity());
  CHECK(PauliString(3).to_string() == "III");
}

TEST_CASE("apply and conjugate agree with dense") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = PauliString::parse((trial % 3 ? "" : "-i") + random_letters(3, rng));
    const Vector v = entshare::testing::random_vector(8, rng);
    CHECK((entshare::apply(p, v) - to_dense(p) * v).norm() < 1e-14);
    const Matrix rho = v * v.adjoint();
    CHECK((conjugate(p, rho) - to_dense(p) * rho * to_dense(p).adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("embedding and size checks") {
  const auto p = PauliString::parse("XZ");
  CHECK(embed(p, 4, {3, 1}).to_string() == "IZIX");
  CHECK_THROWS_AS(multiply(PauliString::parse("X"), PauliString::parse("XX")), DimensionError);
  CHECK_THROWS_AS(to_dense(PauliString(13)), CapacityError);
}
