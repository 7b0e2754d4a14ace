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

#include "entshare/entanglement.hpp"

#include <cmath>
#include <set>

#include <unsupported/Eigen/KroneckerProduct>

#include "entshare/error.hpp"
#include "entshare/pauli.hpp"

namespace entshare {
namespace {

std::uint64_t mask_of(const SystemLayout& layout, const std::vector<std::string>& labels) {
  std::uint64_t mask = 0;
  const int total = layout.total_qubits();
  for (int p : layout.positions(labels)) mask |= std::uint64_t{1} << (total - 1 - p);
  return mask;
}

std::vector<std::string> concat(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

void Bipartition::check(const SystemLayout& layout) const {
  std::set<std::string> seen;
  for (const auto& l : concat(left, right)) {
    if (!layout.has(l)) throw InputError("bipartition label '" + l + "' not in layout");
    if (!seen.insert(l).second) throw InputError("bipartition label '" + l + "' appears twice");
  }
  if (seen.size() != layout.subsystems().size()) {
    throw InputError("bipartition does not cover the layout");
  }
}

Bipartition Bipartition::split(const SystemLayout& layout, const std::vector<std::string>& left) {
  return {left, layout.complement(left)};
}

void SeparableEnsemble::check() const {
  double total = 0.0;
  for (const auto& t : terms) {
    if (!(t.weight > 0.0)) throw InputError("ensemble weights must be positive");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InputError("ensemble weights do not sum to 1");
}

Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& part) {
  part.check(rho.layout());
  const std::uint64_t mask = mask_of(rho.layout(), part.right);
  const Matrix& m = rho.matrix();
  const Eigen::Index dim = m.rows();
  Matrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto uc = static_cast<std::uint64_t>(c);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const auto ur = static_cast<std::uint64_t>(r);
      const auto r2 = static_cast<Eigen::Index>((ur & ~mask) | (uc & mask));
      const auto c2 = static_cast<Eigen::Index>((uc & ~mask) | (ur & mask));
      out(r2, c2) = m(r, c);
    }
  }
  return out;
}

double min_partial_transpose_eigenvalue(const DensityMatrix& rho, const Bipartition& part) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(partial_transpose(rho, part), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue solver failed");
  return solver.eigenvalues().minCoeff();
}

double negativity(const DensityMatrix& rho, const Bipartition& part) {
  return std::max(0.0, 0.5 * (trace_norm(partial_transpose(rho, part)) - 1.0));
}

bool is_ppt(const DensityMatrix& rho, const Bipartition& part, double tol) {
  return min_partial_transpose_eigenvalue(rho, part) >= -tol;
}

bool ppt_implies_separable(const DensityMatrix& rho, const Bipartition& part) {
  part.check(rho.layout());
  const auto ql = rho.layout().positions(part.left).size();
  const auto qr = rho.layout().positions(part.right).size();
  const std::size_t dl = std::size_t{1} << ql;
  const std::size_t dr = std::size_t{1} << qr;
  return dl == 1 || dr == 1 || dl * dr <= 6;
}

double product_distance(const DensityMatrix& rho, const Bipartition& part) {
  part.check(rho.layout());
  if (part.left.empty() || part.right.empty()) return 0.0;
  const DensityMatrix prod = tensor(partial_trace(rho, part.left), partial_trace(rho, part.right));
  const DensityMatrix laid_out = reorder(prod, rho.layout().labels());
  return trace_norm(rho.matrix() - laid_out.matrix());
}

bool is_product(const DensityMatrix& rho, const Bipartition& part, double tol) {
  return product_distance(rho, part) < tol;
}

DensityMatrix ensemble_state(const SeparableEnsemble& ens, const SystemLayout& like) {
  if (ens.terms.empty()) throw InputError("empty ensemble");
  const auto& first = ens.terms.front();
  const SystemLayout& ll = first.left.layout();
  const SystemLayout& rl = first.right.layout();
  Matrix acc = Matrix::Zero(ll.dimension() * rl.dimension(), ll.dimension() * rl.dimension());
  for (const auto& t : ens.terms) {
    if (!(t.left.layout() == ll) || !(t.right.layout() == rl)) {
      throw DimensionError("ensemble terms have inconsistent layouts");
    }
    acc += t.weight * Eigen::kroneckerProduct(t.left.matrix(), t.right.matrix()).eval();
  }
  std::vector<Subsystem> subs = ll.subsystems();
  subs.insert(subs.end(), rl.subsystems().begin(), rl.subsystems().end());
  const int total = ll.total_qubits() + rl.total_qubits();
  DensityMatrix mixed(SystemLayout(std::move(subs), total), std::move(acc));
  return reorder(mixed, like.labels());
}

double verify_separable_decomposition(const DensityMatrix& rho, const SeparableEnsemble& ens) {
  ens.check();
  const auto& first = ens.terms.front();
  Bipartition part{first.left.layout().labels(), first.right.layout().labels()};
  try {
    part.check(rho.layout());
  } catch (const InputError& e) {
    throw DimensionError(std::string("ensemble layout does not match state: ") + e.what());
  }
  for (const auto& l : part.left) {
    if (rho.layout().qubits_of(l) != first.left.layout().qubits_of(l)) {
      throw DimensionError("ensemble subsystem '" + l + "' has the wrong size");
    }
  }
  for (const auto& l : part.right) {
    if (rho.layout().qubits_of(l) != first.right.layout().qubits_of(l)) {
      throw DimensionError("ensemble subsystem '" + l + "' has the wrong size");
    }
  }
  return max_abs_difference(rho.matrix(), ensemble_state(ens, rho.layout()).matrix());
}

std::vector<std::pair<double, DensityMatrix>> twirl_ensemble(const DensityMatrix& rho,
                                                             const std::string& target) {
  const SystemLayout& layout = rho.layout();
  const auto positions = layout.positions({target});
  const std::size_t q = positions.size();
  const std::size_t n = static_cast<std::size_t>(layout.total_qubits());
  const std::size_t count = std::size_t{1} << (2 * q);
  const double weight = 1.0 / static_cast<double>(count);
  std::vector<std::size_t> pos(positions.begin(), positions.end());

  std::vector<std::pair<double, DensityMatrix>> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<bool> x(q), z(q);
    for (std::size_t i = 0; i < q; ++i) {
      x[i] = (code >> (2 * i)) & 1u;
      z[i] = (code >> (2 * i + 1)) & 1u;
    }
    const PauliString g = embed(PauliString(x, z), n, pos);
    out.emplace_back(weight, DensityMatrix(layout, conjugate(g, rho.matrix())));
  }
  return out;
}

DensityMatrix pauli_twirl(const DensityMatrix& rho, const std::string& target) {
  const auto terms = twirl_ensemble(rho, target);
  Matrix acc = Matrix::Zero(rho.dimension(), rho.dimension());
  for (const auto& [w, r] : terms) acc += w * r.matrix();
  return DensityMatrix(rho.layout(), std::move(acc));
}

double holevo_gap(const std::vector<std::pair<double, DensityMatrix>>& ensemble,
                  const Tolerances& tol) {
  if (ensemble.empty()) throw InputError("empty ensemble");
  const SystemLayout& layout = ensemble.front().second.layout();
  Matrix mix = Matrix::Zero(layout.dimension(), layout.dimension());
  double total = 0.0;
  double average = 0.0;
  for (const auto& [p, r] : ensemble) {
    if (!(r.layout() == layout)) throw DimensionError("ensemble states have different layouts");
    mix += p * r.matrix();
    total += p;
    average += p * entropy(r, tol);
  }
  if (std::abs(total - 1.0) > 1e-9) throw InputError("ensemble weights do not sum to 1");
  return entropy(DensityMatrix(layout, std::move(mix)), tol) - average;
}

}  // namespace entshare
