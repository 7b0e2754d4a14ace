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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "entshare/config.hpp"

namespace entshare {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/**
 * An n-qubit Pauli operator i^phase * P_1 (x) ... (x) P_n stored in symplectic
 * form. Qubit i of the operator is P_{i+1}; the single-qubit factor is
 * I, X, Z or Y for (x, z) = (0,0), (1,0), (0,1), (1,1).
 *
 * Indices are 0-based in this API. The text format is 1-based only in the
 * sense that the leftmost character is share 1.
 */
class PauliString {
 public:
  PauliString() = default;

  /** Identity on n qubits. */
  explicit PauliString(std::size_t n);

  PauliString(std::vector<bool> x, std::vector<bool> z, unsigned phase = 0);

  /**
   * Parses "[+|-|+i|-i]{I,X,Y,Z}*", e.g. "-iXYZ". The Unicode minus sign is
   * accepted in place of '-'.
   */
  static PauliString parse(std::string_view text);

  /** Single-qubit operator 'I', 'X', 'Y' or 'Z' at position q of n qubits. */
  static PauliString single(std::size_t n, std::size_t q, char op);

  std::size_t size() const { return x_.size(); }
  bool x(std::size_t q) const { return x_[q]; }
  bool z(std::size_t q) const { return z_[q]; }
  const std::vector<bool>& x_bits() const { return x_; }
  const std::vector<bool>& z_bits() const { return z_; }

  /** Power of i: 0 -> +1, 1 -> +i, 2 -> -1, 3 -> -i. */
  unsigned phase() const { return phase_; }
  Complex phase_value() const;

  /** Operator character at qubit q, ignoring phase. */
  char op(std::size_t q) const;

  bool is_identity() const;  // ignores phase
  bool is_hermitian() const { return phase_ % 2 == 0; }

  /** Number of non-identity positions. */
  std::size_t weight() const;

  /** 0-based positions where the operator acts nontrivially. */
  std::vector<std::size_t> support() const;

  PauliString inverse() const;
  PauliString with_phase(unsigned phase) const;

  /** Same operator with phase dropped. */
  PauliString unsigned_part() const { return with_phase(0); }

  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<bool> x_;
  std::vector<bool> z_;
  unsigned phase_ = 0;
};

/** Group product a*b with exact phase. Throws DimensionError on size mismatch. */
PauliString multiply(const PauliString& a, const PauliString& b);

inline PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }

/** Parity of the symplectic inner product, as a boolean "anticommutes". */
bool symplectic_product(const PauliString& a, const PauliString& b);

bool commutes(const PauliString& a, const PauliString& b);

/**
 * Dense 2^n x 2^n matrix, qubit 0 most significant in the basis index.
 * Throws CapacityError above dense_limit qubits.
 */
Matrix to_dense(const PauliString& p, int dense_limit = kDefaultDenseLimit);

/** Applies p to a state vector of matching dimension. */
Vector apply(const PauliString& p, const Vector& psi);

/** Returns p rho p^dagger for a matrix of matching dimension. */
Matrix conjugate(const PauliString& p, const Matrix& rho);

/**
 * Embeds p into a larger register: qubit q of p lands on positions[q] of an
 * n-qubit string.
 */
PauliString embed(const PauliString& p, std::size_t n, const std::vector<std::size_t>& positions);

}  // namespace entshare
