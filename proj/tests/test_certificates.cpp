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
#include <set>

#include "entshare/error.hpp"
#include "entshare/schemes.hpp"
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

// Four-qubit vector of Bell(j) on qubits (a,b) and Bell(k) on (c,d), 1-based.
Vector two_pairs(int j, int a, int b, int k, int c, int d) {
  Vector out(16);
  for (int idx = 0; idx < 16; ++idx) {
    auto bit = [idx](int q) { return (idx >> (4 - q)) & 1; };
    out(idx) = bell(j)(2 * bit(a) + bit(b)) * bell(k)(2 * bit(c) + bit(d));
  }
  return out;
}

}  // namespace

TEST_CASE("Bell re-pairing coefficients") {
  const auto scheme = build_scheme(builtin("code_4_2_2"));
  for (ShareSet s : enumerate_subsets(4)) {
    if (s.size() != 2) continue;
    CAPTURE(s.to_string());
    const auto kept = s.members();
    const auto gone = s.complement(4).members();
    const auto cert = bell_repairing_certificate(scheme, s);
    REQUIRE(cert);
    REQUIRE(cert->ensemble.terms.size() == 4);
    Matrix c(4, 4);
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        c(j, k) = two_pairs(k, gone[0], gone[1], k, kept[0], kept[1]).dot(two_pairs(j, 1, 2, j, 3, 4));
      }
    }
    // Each re-paired column is a unit vector on the dealer.
    for (int k = 0; k < 4; ++k) CHECK(c.col(k).norm() == doctest::Approx(1.0));
    for (int k = 0; k < 4; ++k) {
      const auto& term = cert->ensemble.terms[static_cast<std::size_t>(k)];
      CHECK(term.weight == doctest::Approx(0.25));
      CHECK(max_abs_difference(term.left.matrix(), c.col(k) * c.col(k).adjoint()) < 1e-12);
      CHECK(max_abs_difference(term.right.matrix(), bell(k) * bell(k).adjoint()) < 1e-12);
    }
    CHECK(verify_separable_decomposition(dealer_view(scheme, s), cert->ensemble) < 1e-12);
  }
  CHECK_FALSE(bell_repairing_certificate(scheme, ShareSet{1}));
  CHECK_FALSE(bell_repairing_certificate(build_scheme(builtin("shor_9_1_3")), ShareSet{1, 2}));
}

TEST_CASE("Shor symmetry group") {
  const auto group = shor_symmetry_group();
  CHECK(group.size() == 1296);
  std::set<std::array<int, 10>> distinct(group.begin(), group.end());
  CHECK(distinct.size() == 1296);
  for (const auto& perm : group) {
    std::set<int> image(perm.begin() + 1, perm.end());
    CHECK(image.size() == 9);
    // Triplets map onto triplets.
    for (int t = 0; t < 3; ++t) {
      const int target = (perm[static_cast<std::size_t>(3 * t + 1)] - 1) / 3;
      CHECK((perm[static_cast<std::size_t>(3 * t + 2)] - 1) / 3 == target);
      CHECK((perm[static_cast<std::size_t>(3 * t + 3)] - 1) / 3 == target);
    }
  }
}

TEST_CASE("Shor anchor ensembles reproduce the reduced states") {
  const auto scheme = build_scheme(builtin("shor_9_1_3"));
  const auto anchors = shor_anchor_subsets();
  CHECK(anchors.size() == 8);
  for (ShareSet a : anchors) {
    CAPTURE(a.to_string());
    const auto ens = shor_anchor_ensemble(a);
    CHECK_NOTHROW(ens.check());
    CHECK(verify_separable_decomposition(dealer_view(scheme, a), ens) < 1e-12);
  }
  CHECK_THROWS_AS(shor_anchor_ensemble(ShareSet{1}), LookupError);
}

TEST_CASE("Shor triplet classes") {
  const auto scheme = build_scheme(builtin("shor_9_1_3"));
  const auto report = classify_all(scheme);
  const auto shor = verify_shor_triplet_classes(scheme, report);
  REQUIRE(shor.classes.size() == 4);
  CHECK(shor.classes[0].members == 6);
  CHECK(shor.classes[1].members == 54);
  CHECK(shor.classes[2].members == 36);
  CHECK(shor.classes[3].members == 162);
  for (const auto& c : shor.classes) {
    CAPTURE(c.name);
    CHECK(c.passed);
    CHECK(c.max_residual < 1e-9);
  }
  CHECK(shor.non_correctable_unauthorized == 258);
  CHECK(shor.class_union_size == 258);
  CHECK(shor.exhaustive);
  CHECK(shor.passed);

  const auto other = build_scheme(builtin("code_4_2_2"));
  CHECK_THROWS_AS(verify_shor_triplet_classes(other, classify_all(other)), InputError);
}

TEST_CASE("generic stabilizer certificate agrees with the code-specific ones") {
  for (const std::string name : {"code_4_2_2", "shor_9_1_3"}) {
    const auto scheme = build_scheme(builtin(name));
    for (ShareSet s : enumerate_subsets(scheme.shares())) {
      if (is_authorized(scheme, s) || erasure_correctable(scheme.code, s)) continue;
      const auto rho = dealer_view(scheme, s);
      const auto cert = stabilizer_dephasing_certificate(scheme, s, rho);
      CAPTURE(name);
      CAPTURE(s.to_string());
      REQUIRE(cert);
      CHECK(verify_separable_decomposition(rho, cert->ensemble) < 1e-9);
    }
  }
}

TEST_CASE("generic certificate declines entangled sets") {
  const auto scheme = build_scheme(builtin("code_6_4_2"));
  const ShareSet s{1, 2, 3, 4};
  const auto rho = dealer_view(scheme, s);
  const auto cert = stabilizer_dephasing_certificate(scheme, s, rho);
  if (cert) CHECK(verify_separable_decomposition(rho, cert->ensemble) > 1e-6);
}

TEST_CASE("dealer basis ensemble needs the dealer first") {
  const auto scheme = build_scheme(builtin("code_4_2_2"));
  const auto rho = reorder(dealer_view(scheme, ShareSet{1, 2}), {"P1", "D", "P2"});
  CHECK_THROWS_AS(dealer_basis_ensemble(rho, Matrix::Identity(4, 4)), InputError);
}
