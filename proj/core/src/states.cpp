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

#include "entshare/states.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "entshare/codes.hpp"
#include "entshare/error.hpp"

namespace entshare {
namespace {

// Gathers the bits of `index` found at absolute qubit positions into a
// compact big-endian index.
std::uint64_t gather(std::uint64_t index, const std::vector<int>& positions, int total) {
  std::uint64_t out = 0;
  for (int p : positions) {
    out = (out << 1) | ((index >> (total - 1 - p)) & 1u);
  }
  return out;
}

struct Split {
  std::vector<std::uint64_t> kept;
  std::vector<std::uint64_t> traced;
};

Split split_indices(const SystemLayout& layout, const std::vector<int>& keep_pos,
                    const std::vector<int>& trace_pos) {
  const int total = layout.total_qubits();
  const auto dim = static_cast<std::uint64_t>(layout.dimension());
  Split s;
  s.kept.resize(dim);
  s.traced.resize(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    s.kept[b] = gather(b, keep_pos, total);
    s.traced[b] = gather(b, trace_pos, total);
  }
  return s;
}

void check_hermitian_trace(const Matrix& m, const Tolerances& tol) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > std::max(tol.hermiticity, 1e-12 * m.rows())) {
    throw NumericalError("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > std::max(tol.trace, 1e-12 * m.rows())) {
    throw NumericalError("density matrix trace is not 1");
  }
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue solver failed");
  return solver.eigenvalues();
}

// Eigenvalues below the rounding floor are treated as exact zeros so that
// rank-deficient inputs keep their rank.
Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("eigen decomposition failed");
  const double floor = 1e-14 * std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  const Eigen::VectorXd ev =
      solver.eigenvalues().unaryExpr([floor](double v) { return v > floor ? std::sqrt(v) : 0.0; });
  return solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().adjoint();
}

std::vector<std::string> labels_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::string share_label(int i) { return "P" + std::to_string(i); }

std::vector<std::string> share_labels(ShareSet shares) {
  std::vector<std::string> out;
  for (int s : shares.members()) out.push_back(share_label(s));
  return out;
}

SystemLayout::SystemLayout(std::vector<Subsystem> subsystems, int dense_limit)
    : subsystems_(std::move(subsystems)) {
  std::set<std::string> seen;
  for (const auto& s : subsystems_) {
    if (s.qubits <= 0) throw InputError("subsystem '" + s.label + "' must have at least one qubit");
    if (!seen.insert(s.label).second) throw InputError("duplicate subsystem label '" + s.label + "'");
    total_qubits_ += s.qubits;
  }
  if (total_qubits_ > dense_limit) {
    throw CapacityError("layout of " + std::to_string(total_qubits_) +
                        " qubits exceeds the dense limit of " + std::to_string(dense_limit));
  }
}

SystemLayout SystemLayout::dealer_and_shares(int dealer_qubits, int n, int dense_limit) {
  std::vector<Subsystem> subs;
  if (dealer_qubits > 0) subs.push_back({kDealer, dealer_qubits});
  for (int i = 1; i <= n; ++i) subs.push_back({share_label(i), 1});
  return SystemLayout(std::move(subs), dense_limit);
}

SystemLayout SystemLayout::shares_only(int n, int dense_limit) {
  return dealer_and_shares(0, n, dense_limit);
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  for (const auto& s : subsystems_) out.push_back(s.label);
  return out;
}

bool SystemLayout::has(const std::string& label) const {
  return std::any_of(subsystems_.begin(), subsystems_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t SystemLayout::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return i;
  }
  throw LookupError("unknown subsystem label '" + label + "'");
}

int SystemLayout::qubits_of(const std::string& label) const {
  return subsystems_[index_of(label)].qubits;
}

int SystemLayout::offset_of(const std::string& label) const {
  const std::size_t idx = index_of(label);
  int offset = 0;
  for (std::size_t i = 0; i < idx; ++i) offset += subsystems_[i].qubits;
  return offset;
}

std::vector<int> SystemLayout::positions(const std::vector<std::string>& labels) const {
  std::vector<bool> wanted(subsystems_.size(), false);
  for (const auto& l : labels) wanted[index_of(l)] = true;
  std::vector<int> out;
  int offset = 0;
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (wanted[i]) {
      for (int q = 0; q < subsystems_[i].qubits; ++q) out.push_back(offset + q);
    }
    offset += subsystems_[i].qubits;
  }
  return out;
}

SystemLayout SystemLayout::restrict_to(const std::vector<std::string>& labels) const {
  std::vector<bool> wanted(subsystems_.size(), false);
  for (const auto& l : labels) wanted[index_of(l)] = true;
  std::vector<Subsystem> subs;
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (wanted[i]) subs.push_back(subsystems_[i]);
  }
  return SystemLayout(std::move(subs), total_qubits_);
}

std::vector<std::string> SystemLayout::complement(const std::vector<std::string>& labels) const {
  std::vector<bool> excluded(subsystems_.size(), false);
  for (const auto& l : labels) excluded[index_of(l)] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (!excluded[i]) out.push_back(subsystems_[i].label);
  }
  return out;
}

PureState::PureState(SystemLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.dimension()) {
    throw DimensionError("state has " + std::to_string(amplitudes_.size()) +
                         " amplitudes for a layout of dimension " +
                         std::to_string(layout_.dimension()));
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) throw NumericalError("state is not normalized");
}

PureState PureState::normalized(SystemLayout layout, Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw NumericalError("cannot normalize the zero vector");
  amplitudes /= norm;
  return PureState(std::move(layout), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(SystemLayout layout, Matrix matrix)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != layout_.dimension() || matrix_.cols() != layout_.dimension()) {
    throw DimensionError("matrix of size " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " does not match layout dimension " +
                         std::to_string(layout_.dimension()));
  }
  check_hermitian_trace(matrix_, default_tolerances());
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.layout(), psi.amplitudes() * psi.amplitudes().adjoint());
}

Eigen::VectorXd DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(matrix_); }

bool DensityMatrix::is_psd(double floor) const { return eigenvalues().minCoeff() >= floor; }

PureState mes(int k, int dense_limit) {
  if (k <= 0) throw InputError("MES needs at least one qubit per side");
  if (2 * k > dense_limit) {
    throw CapacityError("MES on 2x" + std::to_string(k) + " qubits exceeds the dense limit");
  }
  SystemLayout layout({{kDealer, k}, {kDealerPartner, k}}, dense_limit);
  const Eigen::Index side = Eigen::Index{1} << k;
  Vector amps = Vector::Zero(layout.dimension());
  const double a = 1.0 / std::sqrt(static_cast<double>(side));
  for (Eigen::Index j = 0; j < side; ++j) amps(j * side + j) = a;
  return PureState(std::move(layout), std::move(amps));
}

PureState encode_dealer_mes(const StabilizerCode& code, int dense_limit) {
  if (code.k + code.n > dense_limit) {
    throw CapacityError("encoding " + std::to_string(code.k) + " dealer qubits and " +
                        std::to_string(code.n) + " shares exceeds the dense limit of " +
                        std::to_string(dense_limit));
  }
  if (code.k == 0) throw InputError("code '" + code.name + "' encodes no logical qubits");
  const auto basis = codeword_basis(code, dense_limit);
  SystemLayout layout = SystemLayout::dealer_and_shares(code.k, code.n, dense_limit);
  const Eigen::Index block = Eigen::Index{1} << code.n;
  Vector amps(layout.dimension());
  const double a = 1.0 / std::sqrt(static_cast<double>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    amps.segment(static_cast<Eigen::Index>(j) * block, block) = a * basis[j].amplitudes();
  }
  return PureState::normalized(std::move(layout), std::move(amps));
}

DensityMatrix partial_trace(const PureState& psi, const std::vector<std::string>& keep) {
  const SystemLayout& layout = psi.layout();
  const SystemLayout kept_layout = layout.restrict_to(keep);
  const std::vector<std::string> kept_labels = kept_layout.labels();
  const auto keep_pos = layout.positions(kept_labels);
  const auto trace_pos = layout.positions(layout.complement(kept_labels));
  const Split s = split_indices(layout, keep_pos, trace_pos);

  const Eigen::Index dk = Eigen::Index{1} << keep_pos.size();
  const Eigen::Index dt = Eigen::Index{1} << trace_pos.size();
  Matrix m = Matrix::Zero(dk, dt);
  const Vector& amps = psi.amplitudes();
  for (Eigen::Index b = 0; b < amps.size(); ++b) {
    m(static_cast<Eigen::Index>(s.kept[static_cast<std::size_t>(b)]),
      static_cast<Eigen::Index>(s.traced[static_cast<std::size_t>(b)])) = amps(b);
  }
  Matrix rho = m * m.adjoint();
  return DensityMatrix(kept_layout, std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  const SystemLayout& layout = rho.layout();
  const SystemLayout kept_layout = layout.restrict_to(keep);
  const std::vector<std::string> kept_labels = kept_layout.labels();
  const auto keep_pos = layout.positions(kept_labels);
  const auto trace_pos = layout.positions(layout.complement(kept_labels));
  const Split s = split_indices(layout, keep_pos, trace_pos);

  const Eigen::Index dk = Eigen::Index{1} << keep_pos.size();
  const Eigen::Index dt = Eigen::Index{1} << trace_pos.size();
  // Reshuffle into blocks indexed by (traced, kept) so each traced value
  // contributes a contiguous dk x dk block.
  std::vector<Eigen::Index> by_pair(static_cast<std::size_t>(dk * dt));
  for (std::size_t b = 0; b < s.kept.size(); ++b) {
    by_pair[static_cast<std::size_t>(static_cast<Eigen::Index>(s.traced[b]) * dk +
                                     static_cast<Eigen::Index>(s.kept[b]))] =
        static_cast<Eigen::Index>(b);
  }
  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.matrix();
  for (Eigen::Index t = 0; t < dt; ++t) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      const Eigen::Index col = by_pair[static_cast<std::size_t>(t * dk + c)];
      for (Eigen::Index r = 0; r < dk; ++r) {
        out(r, c) += m(by_pair[static_cast<std::size_t>(t * dk + r)], col);
      }
    }
  }
  return DensityMatrix(kept_layout, std::move(out));
}

DensityMatrix reorder(const DensityMatrix& rho, const std::vector<std::string>& order) {
  const SystemLayout& layout = rho.layout();
  if (order.size() != layout.subsystems().size()) {
    throw InputError("reorder needs every label exactly once");
  }
  std::vector<Subsystem> subs;
  for (const auto& l : order) subs.push_back(layout.subsystems()[layout.index_of(l)]);
  SystemLayout target(std::move(subs), layout.total_qubits());

  // Position list: new qubit i comes from old qubit source[i].
  std::vector<int> source;
  for (const auto& l : order) {
    const int off = layout.offset_of(l);
    for (int q = 0; q < layout.qubits_of(l); ++q) source.push_back(off + q);
  }
  const int total = layout.total_qubits();
  const auto dim = static_cast<std::uint64_t>(layout.dimension());
  std::vector<Eigen::Index> map(dim);
  for (std::uint64_t b = 0; b < dim; ++b) map[b] = static_cast<Eigen::Index>(gather(b, source, total));
  Matrix out(rho.dimension(), rho.dimension());
  const Matrix& m = rho.matrix();
  for (std::uint64_t c = 0; c < dim; ++c) {
    for (std::uint64_t r = 0; r < dim; ++r) {
      out(map[r], map[c]) = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return DensityMatrix(std::move(target), std::move(out));
}

DensityMatrix relabel(const DensityMatrix& rho, const std::vector<std::string>& labels) {
  const auto& old = rho.layout().subsystems();
  if (labels.size() != old.size()) throw InputError("relabel needs one label per subsystem");
  std::vector<Subsystem> subs;
  for (std::size_t i = 0; i < old.size(); ++i) subs.push_back({labels[i], old[i].qubits});
  return DensityMatrix(SystemLayout(std::move(subs), rho.layout().total_qubits()), rho.matrix());
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<Subsystem> subs = a.layout().subsystems();
  subs.insert(subs.end(), b.layout().subsystems().begin(), b.layout().subsystems().end());
  SystemLayout layout(std::move(subs), a.layout().total_qubits() + b.layout().total_qubits());
  const Eigen::Index da = a.dimension();
  const Eigen::Index db = b.dimension();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return DensityMatrix(std::move(layout), std::move(out));
}

DensityMatrix maximally_mixed(const std::string& label, int qubits) {
  SystemLayout layout({{label, qubits}}, qubits);
  const Eigen::Index dim = layout.dimension();
  return DensityMatrix(std::move(layout),
                       Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.layout() == b.layout())) throw DimensionError("fidelity needs identical layouts");
  // ||sqrt(a) sqrt(b)||_1 squared.
  const Matrix product = psd_sqrt(a.matrix()) * psd_sqrt(b.matrix());
  const double root = Eigen::JacobiSVD<Matrix>(product).singularValues().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

double trace_norm(const Matrix& hermitian) {
  return hermitian_eigenvalues(hermitian).cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.layout() == b.layout())) throw DimensionError("trace distance needs identical layouts");
  return 0.5 * trace_norm(a.matrix() - b.matrix());
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix size mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

double entropy(const DensityMatrix& rho, const Tolerances& tol) {
  const Eigen::VectorXd ev = rho.eigenvalues();
  if (ev.minCoeff() < tol.psd_floor) {
    throw NumericalError("entropy of a matrix with eigenvalue " + std::to_string(ev.minCoeff()));
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > tol.entropy_floor) s -= ev(i) * std::log2(ev(i));
  }
  return s;
}

double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& a,
                          const std::vector<std::string>& b, const Tolerances& tol) {
  const DensityMatrix ab = partial_trace(rho, labels_union(a, b));
  return entropy(partial_trace(ab, a), tol) + entropy(partial_trace(ab, b), tol) - entropy(ab, tol);
}

double subsystem_entropy(const PureState& psi, const std::vector<std::string>& labels,
                         const Tolerances& tol) {
  const auto& layout = psi.layout();
  const auto other = layout.complement(labels);
  const int here = static_cast<int>(layout.positions(labels).size());
  const int there = layout.total_qubits() - here;
  if (here == 0 || there == 0) return 0.0;
  return entropy(partial_trace(psi, here <= there ? labels : other), tol);
}

}  // namespace entshare
