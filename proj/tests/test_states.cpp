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
#include <random>

#include "entshare/error.hpp"
#include "entshare/states.hpp"
#include "support.hpp"

using namespace entshare;
using entshare::testing::qubits;
using entshare::testing::random_density;
using entshare::testing::random_pure;

namespace {

// Keeps qubit subset `keep` (ascending positions) of an n-qubit matrix by
// summing over the traced bits index by index.
Matrix trace_oracle(const Matrix& m, int n, const std::vector<int>& keep) {
  const int nk = static_cast<int>(keep.size());
  Matrix out = Matrix::Zero(Eigen::Index{1} << nk, Eigen::Index{1} << nk);
  auto bit = [n](Eigen::Index idx, int q) { return (idx >> (n - 1 - q)) & 1; };
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      bool same = true;
      for (int q = 0; q < n && same; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end() && bit(i, q) != bit(j, q)) same = false;
      }
      if (!same) continue;
      Eigen::Index a = 0, b = 0;
      for (int q : keep) {
        a = 2 * a + bit(i, q);
        b = 2 * b + bit(j, q);
      }
      out(a, b) += m(i, j);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("layout bookkeeping") {
  const auto layout = SystemLayout::dealer_and_shares(2, 3);
  CHECK(layout.labels() == std::vector<std::string>{"D", "P1", "P2", "P3"});
  CHECK(layout.total_qubits() == 5);
  CHECK(layout.offset_of("P2") == 3);
  CHECK(layout.positions({"P3", "D"}) == std::vector<int>{0, 1, 4});
  CHECK(layout.complement({"P1"}) == std::vector<std::string>{"D", "P2", "P3"});
  CHECK_THROWS_AS(layout.index_of("P9"), LookupError);
  CHECK_THROWS_AS(SystemLayout({{"A", 1}, {"A", 1}}), InputError);
  CHECK_THROWS_AS(SystemLayout::shares_only(13), CapacityError);
}

TEST_CASE("partial trace agrees with an index-sum oracle") {
  std::mt19937_64 rng(31);
  const auto layout = qubits({"A", "B", "C", "E"});
  const std::vector<std::pair<std::vector<std::string>, std::vector<int>>> cases = {
      {{"A"}, {0}}, {{"B", "E"}, {1, 3}}, {{"A", "C", "E"}, {0, 2, 3}}, {{"E", "B"}, {1, 3}}};
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = random_density(layout, rng);
    const auto psi = random_pure(layout, rng);
    const Matrix psi_m = psi.amplitudes() * psi.amplitudes().adjoint();
    for (const auto& [labels, pos] : cases) {
      CHECK(max_abs_difference(partial_trace(rho, labels).matrix(), trace_oracle(rho.matrix(), 4, pos)) < 1e-14);
      CHECK(max_abs_difference(partial_trace(psi, labels).matrix(), trace_oracle(psi_m, 4, pos)) < 1e-14);
    }
  }
}

TEST_CASE("reorder is a qubit permutation") {
  std::mt19937_64 rng(32);
  const auto layout = qubits({"A", "B", "C"});
  const auto rho = random_density(layout, rng);
  const auto swapped = reorder(rho, {"C", "A", "B"});
  CHECK(swapped.layout().labels() == std::vector<std::string>{"C", "A", "B"});
  // <cab|rho'|c'a'b'> = <abc|rho|a'b'c'>
  for (Eigen::Index i = 0; i < 8; ++i) {
    for (Eigen::Index j = 0; j < 8; ++j) {
      auto back = [](Eigen::Index idx) { return ((idx & 3) << 1) | (idx >> 2); };
      CHECK(std::abs(swapped.matrix()(i, j) - rho.matrix()(back(i), back(j))) < 1e-15);
    }
  }
  CHECK(max_abs_difference(reorder(swapped, {"A", "B", "C"}).matrix(), rho.matrix()) < 1e-15);
}

TEST_CASE("tensor products and mixed states") {
  std::mt19937_64 rng(33);
  const auto a = random_density(qubits({"A"}), rng);
  const auto b = random_density(qubits({"B", "C"}), rng);
  const auto ab = tensor(a, b);
  CHECK(max_abs_difference(ab.matrix(), entshare::testing::kron(a.matrix(), b.matrix())) < 1e-15);
  CHECK(max_abs_difference(partial_trace(ab, {"A"}).matrix(), a.matrix()) < 1e-14);
  CHECK(maximally_mixed("M", 2).matrix().isApprox(Matrix::Identity(4, 4) / 4.0));
}

TEST_CASE("maximally entangled state") {
  const auto phi = mes(2);
  CHECK(phi.layout().labels() == std::vector<std::string>{"D", "D'"});
  CHECK(std::abs(phi.amplitudes()(0) - 0.5) < 1e-15);
  CHECK(std::abs(phi.amplitudes()(5) - 0.5) < 1e-15);
  CHECK(std::abs(phi.amplitudes()(1)) < 1e-15);
  CHECK(std::abs(subsystem_entropy(phi, {"D"}) - 2.0) < 1e-12);
  const auto rho = DensityMatrix::from_pure(phi);
  CHECK(std::abs(mutual_information(rho, {"D"}, {"D'"}) - 4.0) < 1e-12);
  CHECK(std::abs(entropy(rho)) < 1e-12);
}

TEST_CASE("fidelity and trace distance") {
  std::mt19937_64 rng(34);
  const auto layout = qubits({"A", "B"});
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_pure(layout, rng);
    const auto q = random_pure(layout, rng);
    const double overlap = std::norm(p.amplitudes().dot(q.amplitudes()));
    const auto rp = DensityMatrix::from_pure(p), rq = DensityMatrix::from_pure(q);
    CHECK(std::abs(fidelity(rp, rq) - overlap) < 1e-9);
    CHECK(std::abs(trace_distance(rp, rq) - std::sqrt(1.0 - overlap)) < 1e-9);
    const auto r = random_density(layout, rng);
    CHECK(std::abs(fidelity(r, r) - 1.0) < 1e-9);
    CHECK(trace_distance(r, r) < 1e-12);
  }
}

TEST_CASE("subsystem entropy uses either side of a pure cut") {
  std::mt19937_64 rng(35);
  const auto layout = qubits({"A", "B", "C", "E", "F"});
  for (int trial = 0; trial < 5; ++trial) {
    const auto psi = random_pure(layout, rng);
    const double direct = entropy(partial_trace(psi, {"A", "B", "C", "E"}));
    CHECK(std::abs(subsystem_entropy(psi, {"A", "B", "C", "E"}) - direct) < 1e-10);
    CHECK(std::abs(subsystem_entropy(psi, {"F"}) - direct) < 1e-10);
  }
}

TEST_CASE("constructor checks") {
  Matrix bad = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(qubits({"A"}), bad), NumericalError);
  Matrix non_herm = Matrix::Identity(2, 2) / 2.0;
  non_herm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(qubits({"A"}), non_herm), NumericalError);
  CHECK_THROWS_AS(DensityMatrix(qubits({"A", "B"}), Matrix::Identity(2, 2) / 2.0), DimensionError);
  CHECK_THROWS_AS(PureState(qubits({"A"}), Vector::Ones(2)), NumericalError);
  CHECK(PureState::normalized(qubits({"A"}), Vector::Ones(2)).amplitudes().norm() == doctest::Approx(1.0));
}
