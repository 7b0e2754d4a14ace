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

#include <random>
#include <string>
#include <vector>

#include "entshare/states.hpp"

namespace entshare::testing {

inline Vector random_vector(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

inline PureState random_pure(const SystemLayout& layout, std::mt19937_64& rng) {
  return PureState(layout, random_vector(layout.dimension(), rng));
}

/** Mixture of `rank` random pure states with random weights. */
inline DensityMatrix random_density(const SystemLayout& layout, std::mt19937_64& rng, int rank = 3) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  const Eigen::Index dim = layout.dimension();
  Matrix m = Matrix::Zero(dim, dim);
  double total = 0.0;
  for (int r = 0; r < rank; ++r) {
    const double w = u(rng);
    const Vector v = random_vector(dim, rng);
    m += w * v * v.adjoint();
    total += w;
  }
  m /= total;
  return DensityMatrix(layout, (0.5 * (m + m.adjoint())).eval());
}

inline Matrix single_qubit(char op) {
  Matrix m(2, 2);
  switch (op) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

/** Plain Kronecker product, left factor most significant. */
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/** Dense operator of a letter string such as "XIZY". */
inline Matrix letters_dense(const std::string& letters) {
  Matrix m = Matrix::Identity(1, 1);
  for (char c : letters) m = kron(m, single_qubit(c));
  return m;
}

inline SystemLayout qubits(const std::vector<std::string>& labels) {
  std::vector<Subsystem> subs;
  for (const auto& l : labels) subs.push_back({l, 1});
  return SystemLayout(std::move(subs));
}

}  // namespace entshare::testing
