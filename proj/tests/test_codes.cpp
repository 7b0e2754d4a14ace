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
#include <cstdio>
#include <fstream>

#include "entshare/code_io.hpp"
#include "entshare/codes.hpp"
#include "entshare/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace entshare;

namespace {

Vector bell(int j) {
  Vector v = Vector::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  if (j == 0) v << s, 0, 0, s;
  if (j == 1) v << s, 0, 0, -s;
  if (j == 2) v << 0, s, s, 0;
  if (j == 3) v << 0, s, -s, 0;
  return v;
}

Vector kron(const Vector& a, const Vector& b) {
  return entshare::testing::kron(Matrix(a), Matrix(b)).col(0);
}

}  // namespace

TEST_CASE("built-in codes validate") {
  for (const auto& name : builtin_names()) {
    const auto code = builtin(name);
    CAPTURE(name);
    CHECK(validate(code).ok());
    CHECK(code.generators.size() == static_cast<std::size_t>(code.n - code.k));
  }
  CHECK_THROWS_AS(builtin("steane"), LookupError);
}

TEST_CASE("validation catches broken codes") {
  auto code = builtin("code_4_2_2");
  code.generators[1] = PauliString::parse("ZZII");
  CHECK_FALSE(validate(code).ok());

  auto dependent = builtin("code_4_2_2");
  dependent.generators[1] = dependent.generators[0];
  CHECK_FALSE(validate(dependent).ok());

  auto bad_logical = builtin("code_4_2_2");
  bad_logical.logical_x[0] = PauliString::parse("XIII");
  CHECK_FALSE(validate(bad_logical).ok());

  auto wrong_count = builtin("code_4_2_2");
  wrong_count.k = 1;
  CHECK_FALSE(validate(wrong_count).ok());
}

TEST_CASE("codeword basis for the [[4,2,2]] code is a pair of equal Bell states") {
  const auto words = codeword_basis(builtin("code_4_2_2"));
  REQUIRE(words.size() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK((words[static_cast<std::size_t>(j)].amplitudes() - kron(bell(j), bell(j))).norm() < 1e-12);
  }
}

TEST_CASE("codeword basis for the [[6,4,2]] code is three Bell pairs") {
  const auto words = codeword_basis(builtin("code_6_4_2"));
  REQUIRE(words.size() == 16);
  for (int f = 0; f < 4; ++f) {
    for (int g = 0; g < 4; ++g) {
      const Vector expected = kron(kron(bell(f), bell(g)), bell(f ^ g));
      CHECK((words[static_cast<std::size_t>(4 * f + g)].amplitudes() - expected).norm() < 1e-12);
    }
  }
}

TEST_CASE("codewords are orthonormal and stabilized") {
  for (const auto& name : builtin_names()) {
    const auto code = builtin(name);
    const auto words = codeword_basis(code);
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        const Complex ip = words[i].amplitudes().dot(words[j].amplitudes());
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
      for (const auto& g : code.generators) {
        CHECK((entshare::apply(g, words[i].amplitudes()) - words[i].amplitudes()).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("symplectic erasure test agrees with brute-force detectability") {
  for (const auto& name : builtin_names()) {
    const auto code = builtin(name);
    const Matrix basis = entshare::testing::code_space_basis(code);
    for (ShareSet k : enumerate_subsets(code.n)) {
      if (k.size() > 4) continue;
      CAPTURE(name);
      CAPTURE(k.to_string());
      CHECK(erasure_correctable(code, k) == entshare::testing::detectability_oracle(basis, code.n, k));
    }
  }
}

TEST_CASE("known erasure patterns") {
  const auto shor = builtin("shor_9_1_3");
  CHECK(erasure_correctable(shor, ShareSet{1, 5}));
  CHECK_FALSE(erasure_correctable(shor, ShareSet{1, 2, 3}));
  CHECK_FALSE(erasure_correctable(shor, ShareSet{1, 4, 7}));
  const auto c422 = builtin("code_4_2_2");
  CHECK(erasure_correctable(c422, ShareSet{3}));
  CHECK_FALSE(erasure_correctable(c422, ShareSet{1, 2}));
}

TEST_CASE("code JSON round trip") {
  for (const auto& name : builtin_names()) {
    const auto code = builtin(name);
    const auto back = code_from_json(code_to_json(code));
    CHECK(back.name == code.name);
    CHECK(back.n == code.n);
    CHECK(back.generators == code.generators);
    CHECK(back.logical_x == code.logical_x);
    CHECK(back.logical_z == code.logical_z);
  }
}

TEST_CASE("malformed code JSON") {
  CHECK_THROWS_AS(code_from_json(nlohmann::json::parse(R"({"name":"x"})")), ParseError);
  CHECK_THROWS_AS(code_from_json(nlohmann::json::parse(R"([1,2])")), ParseError);
  CHECK_THROWS_AS(code_from_json(nlohmann::json::parse(
                      R"({"name":"x","n":2,"k":1,"d":1,"generators":["XQ"],"logical_x":["XI"],"logical_z":["ZI"]})")),
                  ParseError);
  CHECK_THROWS_AS(code_from_json(nlohmann::json::parse(
                      R"({"name":"x","n":2,"k":1,"d":1,"generators":["XX"],"logical_x":["XI"],"logical_z":["ZI"]})")),
                  ValidationError);
  CHECK_THROWS_AS(load_code_file("/nonexistent/code.json"), InputError);
}
