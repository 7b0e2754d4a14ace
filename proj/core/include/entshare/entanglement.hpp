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
#include <utility>
#include <vector>

#include "entshare/config.hpp"
#include "entshare/states.hpp"

namespace entshare {

/** Disjoint label groups covering a layout. */
struct Bipartition {
  std::vector<std::string> left;
  std::vector<std::string> right;

  /** Throws InputError unless disjoint and covering `layout`. */
  void check(const SystemLayout& layout) const;

  /** `left` against everything else in the layout. */
  static Bipartition split(const SystemLayout& layout, const std::vector<std::string>& left);
};

/** sum_i w_i left_i (x) right_i. */
struct SeparableEnsemble {
  struct Term {
    double weight = 0.0;
    DensityMatrix left;
    DensityMatrix right;
  };
  std::vector<Term> terms;

  /** Throws InputError on non-positive weights or a total off by more than 1e-12. */
  void check() const;
};

/** Transpose on the right-hand labels. */
Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& part);

double min_partial_transpose_eigenvalue(const DensityMatrix& rho, const Bipartition& part);

/** (||rho^{T_B}||_1 - 1) / 2 */
double negativity(const DensityMatrix& rho, const Bipartition& part);

bool is_ppt(const DensityMatrix& rho, const Bipartition& part,
            double tol = default_tolerances().compare);

/** Whether PPT is known to imply separability for these local dimensions. */
bool ppt_implies_separable(const DensityMatrix& rho, const Bipartition& part);

/** ||rho - rho_L (x) rho_R||_1 */
double product_distance(const DensityMatrix& rho, const Bipartition& part);

bool is_product(const DensityMatrix& rho, const Bipartition& part,
                double tol = default_tolerances().compare);

/** Mixture sum_i w_i left_i (x) right_i laid out like `like`. */
DensityMatrix ensemble_state(const SeparableEnsemble& ens, const SystemLayout& like);

/** Max-entry |rho - sum_i w_i left_i (x) right_i|. */
double verify_separable_decomposition(const DensityMatrix& rho, const SeparableEnsemble& ens);

/** Conjugations (1 (x) g_i) rho (1 (x) g_i), g_i over all Paulis on `target`, each with weight 4^-q. */
std::vector<std::pair<double, DensityMatrix>> twirl_ensemble(const DensityMatrix& rho,
                                                             const std::string& target);

/** Uniform Pauli twirl of one subsystem; equals tr_target(rho) (x) I/2^q. */
DensityMatrix pauli_twirl(const DensityMatrix& rho, const std::string& target);

/** S(sum p_i rho_i) - sum p_i S(rho_i). */
double holevo_gap(const std::vector<std::pair<double, DensityMatrix>>& ensemble,
                  const Tolerances& tol = default_tolerances());

}  // namespace entshare
