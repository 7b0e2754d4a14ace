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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "entshare/config.hpp"
#include "entshare/pauli.hpp"
#include "entshare/share_set.hpp"

namespace entshare {

struct StabilizerCode;

struct Subsystem {
  std::string label;
  int qubits = 1;

  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

/** Label of player share i (1-based): "P1", "P2", ... */
std::string share_label(int i);

inline const std::string kDealer = "D";
/** The dealer's partner register in a bare MES or a recovered state. */
inline const std::string kDealerPartner = "D'";

/**
 * Ordered, labeled subsystems. Qubits are laid out in subsystem order, and
 * the basis index is big-endian: the first qubit of the first subsystem is
 * the most significant bit.
 */
class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Subsystem> subsystems, int dense_limit = kDefaultDenseLimit);

  /** "D" with dealer_qubits, followed by single-qubit shares P1..Pn. */
  static SystemLayout dealer_and_shares(int dealer_qubits, int n,
                                        int dense_limit = kDefaultDenseLimit);
  static SystemLayout shares_only(int n, int dense_limit = kDefaultDenseLimit);

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  std::vector<std::string> labels() const;
  int total_qubits() const { return total_qubits_; }
  Eigen::Index dimension() const { return Eigen::Index{1} << total_qubits_; }

  bool has(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws LookupError
  int qubits_of(const std::string& label) const;
  int offset_of(const std::string& label) const;

  /** Absolute qubit positions of the listed labels, in layout order. */
  std::vector<int> positions(const std::vector<std::string>& labels) const;

  /** The listed labels, kept in layout order. */
  SystemLayout restrict_to(const std::vector<std::string>& labels) const;

  /** Labels not in the list, in layout order. */
  std::vector<std::string> complement(const std::vector<std::string>& labels) const;

  friend bool operator==(const SystemLayout& a, const SystemLayout& b) {
    return a.subsystems_ == b.subsystems_;
  }

 private:
  std::vector<Subsystem> subsystems_;
  int total_qubits_ = 0;
};

/** Share labels for the members of a set, ascending. */
std::vector<std::string> share_labels(ShareSet shares);

class PureState {
 public:
  PureState() = default;
  /** Throws DimensionError on size mismatch, NumericalError if not unit norm. */
  PureState(SystemLayout layout, Vector amplitudes);

  /** Normalizes first; throws NumericalError for a zero vector. */
  static PureState normalized(SystemLayout layout, Vector amplitudes);

  const SystemLayout& layout() const { return layout_; }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  SystemLayout layout_;
  Vector amplitudes_;
};

class DensityMatrix {
 public:
  DensityMatrix() = default;
  /**
   * Checks dimension, Hermiticity and unit trace (default tolerances).
   * Positivity is checked separately by is_psd() since it needs a spectrum.
   */
  DensityMatrix(SystemLayout layout, Matrix matrix);

  static DensityMatrix from_pure(const PureState& psi);

  const SystemLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return matrix_; }
  Eigen::Index dimension() const { return matrix_.rows(); }

  /** Ascending eigenvalues. */
  Eigen::VectorXd eigenvalues() const;
  bool is_psd(double floor = default_tolerances().psd_floor) const;

 private:
  SystemLayout layout_;
  Matrix matrix_;
};

/** (1/sqrt(2^k)) sum_j |j>_D |j>_D'. */
PureState mes(int k, int dense_limit = kDefaultDenseLimit);

/** 2^{-k/2} sum_j |j>_D |C_j>_{P1..Pn}. */
PureState encode_dealer_mes(const StabilizerCode& code, int dense_limit = kDefaultDenseLimit);

DensityMatrix partial_trace(const PureState& psi, const std::vector<std::string>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

/** Same operator with subsystems listed in a new order. */
DensityMatrix reorder(const DensityMatrix& rho, const std::vector<std::string>& order);

/** Same matrix, subsystem labels renamed position by position. */
DensityMatrix relabel(const DensityMatrix& rho, const std::vector<std::string>& labels);

/** a (x) b over the concatenated layout; labels must be disjoint. */
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/** I / 2^q on a single labeled register. */
DensityMatrix maximally_mixed(const std::string& label, int qubits);

/** Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2. */
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/** Half the trace norm of a - b. */
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/** Von Neumann entropy in bits; throws NumericalError if not PSD. */
double entropy(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/** S(A) + S(B) - S(AB) for two disjoint label groups of rho. */
double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& a,
                          const std::vector<std::string>& b,
                          const Tolerances& tol = default_tolerances());

/**
 * Entropy of a subsystem of a pure state, evaluated on whichever side of the
 * cut is smaller.
 */
double subsystem_entropy(const PureState& psi, const std::vector<std::string>& labels,
                         const Tolerances& tol = default_tolerances());

/** Sum of |eigenvalues| of a Hermitian matrix. */
double trace_norm(const Matrix& hermitian);

/** Max |entry| of a - b. */
double max_abs_difference(const Matrix& a, const Matrix& b);

}  // namespace entshare
