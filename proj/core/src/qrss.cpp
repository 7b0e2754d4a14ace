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

#include "entshare/qrss.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "entshare/error.hpp"

namespace entshare {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

SystemLayout qubit_layout(const std::string& label) { return SystemLayout({{label, 1}}); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Bell states beta_0..beta_3 as |00>+|11>, |00>-|11>, |01>+|10>, |01>-|10>.
Vector bell(int m) {
  Vector v = Vector::Zero(4);
  switch (m) {
    case 0: v << 1, 0, 0, 1; break;
    case 1: v << 1, 0, 0, -1; break;
    case 2: v << 0, 1, 1, 0; break;
    default: v << 0, 1, -1, 0; break;
  }
  return v * kInvSqrt2;
}

Matrix correction(int m) {
  switch (m) {
    case 0: return Matrix::Identity(2, 2);
    case 1: return pauli_z();
    case 2: return pauli_x();
    default: return pauli_z() * pauli_x();
  }
}

// Averaged channel applied to an arbitrary 2x2 operator on the input.
Matrix channel(const Matrix& x, const Matrix& resource, bool use_corrections) {
  Matrix joint = Matrix::Zero(8, 8);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) joint.block(i * 4, j * 4, 4, 4) = x(i, j) * resource;
  }
  Matrix out = Matrix::Zero(2, 2);
  for (int m = 0; m < 4; ++m) {
    // K = <beta_m|_{SA} (x) I_B, a 2x8 map.
    const Vector b = bell(m);
    Matrix k = Matrix::Zero(2, 8);
    for (Eigen::Index sa = 0; sa < 4; ++sa) {
      for (Eigen::Index out_b = 0; out_b < 2; ++out_b) k(out_b, sa * 2 + out_b) = std::conj(b(sa));
    }
    Matrix branch = k * joint * k.adjoint();
    if (use_corrections) branch = correction(m) * branch * correction(m).adjoint();
    out += branch;
  }
  return out;
}

struct DemoCandidate {
  double guess = 0.0;
  Matrix joint;  // P(a, g)
};

std::optional<DemoCandidate> helstrom(const SeparableEnsemble& ens) {
  if (ens.terms.size() != 2) return std::nullopt;
  const auto& t0 = ens.terms[0];
  const auto& t1 = ens.terms[1];
  if (t0.left.dimension() != 2) return std::nullopt;
  if (std::abs((t0.left.matrix() * t1.left.matrix()).trace()) > 1e-9) return std::nullopt;
  const Matrix m = t0.weight * t0.right.matrix() - t1.weight * t1.right.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Matrix proj = Matrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (es.eigenvalues()(i) > 0.0) proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  DemoCandidate c;
  c.joint = Matrix::Zero(2, 2);
  c.joint(0, 0) = t0.weight * (proj * t0.right.matrix()).trace().real();
  c.joint(0, 1) = t0.weight - c.joint(0, 0).real();
  c.joint(1, 0) = t1.weight * (proj * t1.right.matrix()).trace().real();
  c.joint(1, 1) = t1.weight - c.joint(1, 0).real();
  c.guess = c.joint(0, 0).real() + c.joint(1, 1).real();
  return c;
}

}  // namespace

TeleportOutcome teleport(const DensityMatrix& input, const DensityMatrix& resource, bool use_corrections) {
  if (input.dimension() != 2) throw DimensionError("teleport input must be one qubit");
  if (resource.dimension() != 4) throw DimensionError("teleport resource must be two qubits");
  TeleportOutcome out;
  Matrix result = channel(input.matrix(), resource.matrix(), use_corrections);
  result = (0.5 * (result + result.adjoint())).eval();
  out.output = DensityMatrix(qubit_layout("B"), result);
  out.choi = Matrix::Zero(4, 4);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      Matrix unit = Matrix::Zero(2, 2);
      unit(i, j) = 1.0;
      out.choi.block(i * 2, j * 2, 2, 2) = channel(unit, resource.matrix(), use_corrections);
    }
  }
  out.cptp = is_cptp_choi(out.choi);
  return out;
}

bool is_cptp_choi(const Matrix& choi, double tol) {
  if ((choi - choi.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  const Eigen::Index din = 2;
  const Eigen::Index dout = choi.rows() / din;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (choi + choi.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) return false;
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      const Complex tr = choi.block(i * dout, j * dout, dout, dout).trace();
      if (std::abs(tr - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

DensityMatrix named_qubit_state(const std::string& name, const std::string& label) {
  Vector v(2);
  const Complex i(0.0, 1.0);
  if (name == "0") {
    v << 1, 0;
  } else if (name == "1") {
    v << 0, 1;
  } else if (name == "+") {
    v << kInvSqrt2, kInvSqrt2;
  } else if (name == "-") {
    v << kInvSqrt2, -kInvSqrt2;
  } else if (name == "+i") {
    v << kInvSqrt2, i * kInvSqrt2;
  } else if (name == "-i") {
    v << kInvSqrt2, -i * kInvSqrt2;
  } else {
    throw InputError("unknown input state '" + name + "' (0, 1, +, -, +i, -i)");
  }
  return DensityMatrix(qubit_layout(label), v * v.adjoint());
}

DensityMatrix named_resource(const std::string& name) {
  const SystemLayout layout({{"A", 1}, {"B", 1}});
  Matrix m = Matrix::Zero(4, 4);
  if (name == "bell") {
    const Vector b = bell(0);
    m = b * b.adjoint();
  } else if (name == "classical") {
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
  } else if (name == "product") {
    m = Matrix::Identity(4, 4) / 4.0;
  } else {
    throw InputError("unknown resource '" + name + "' (bell, classical, product)");
  }
  return DensityMatrix(layout, m);
}

LeakageReport qrss_leakage_report(const EntanglementSharingScheme& scheme, const SchemeReport& report,
                                  const Tolerances& tol) {
  LeakageReport out;
  out.code_name = report.code_name;
  bool npt = false, undetermined = false;
  for (const auto& c : report.subsets) {
    if (c.status == SubsetStatus::Authorized || c.status == SubsetStatus::Forbidden) continue;
    LeakageEntry e;
    e.subset = c.subset;
    e.status = c.status;
    e.negativity = c.witnesses.negativity;
    e.residual = c.witnesses.decomposition_residual;
    e.certificate = c.witnesses.certificate;
    switch (c.status) {
      case SubsetStatus::Intermediate: e.evidence = e.certificate.empty() ? "ppt" : "certificate"; break;
      case SubsetStatus::EntangledLeak: e.evidence = "npt"; npt = true; break;
      default: e.evidence = "undetermined"; undetermined = true; break;
    }
    out.entries.push_back(std::move(e));
  }
  out.verdict = npt ? "quantum leakage" : (undetermined ? "undetermined" : "classical only");

  if (scheme.ebits != 1) {
    out.demo_note = "teleportation demo needs a one-qubit dealer";
    return out;
  }
  std::optional<std::pair<ShareSet, DemoCandidate>> best;
  for (const auto& e : out.entries) {
    if (e.evidence != "certificate") continue;
    const DensityMatrix rho = dealer_view(scheme, e.subset);
    const auto cert = find_certificate(scheme, e.subset, rho);
    if (!cert) continue;
    const auto cand = helstrom(cert->ensemble);
    if (cand && (!best || cand->guess > best->second.guess + tol.compare)) best.emplace(e.subset, *cand);
  }
  if (!best) {
    out.demo_note = "no certified intermediate set with a two-term dealer ensemble";
    return out;
  }
  TeleportDemo demo;
  demo.subset = best->first;
  demo.guess_probability = best->second.guess;
  Matrix res = Matrix::Zero(4, 4);
  for (Eigen::Index a = 0; a < 2; ++a) {
    for (Eigen::Index g = 0; g < 2; ++g) res(a * 2 + g, a * 2 + g) = best->second.joint(a, g);
  }
  demo.resource = DensityMatrix(SystemLayout({{"A", 1}, {"B", 1}}), res);
  demo.outcome = teleport(named_qubit_state("+"), demo.resource, true);
  demo.off_diagonal = std::abs(demo.outcome.output.matrix()(0, 1));
  demo.diagonal_only = demo.off_diagonal < tol.compare;
  out.demo = std::move(demo);
  out.demo_note = "illustrative: dealer basis relabelled to |0>,|1>, shares replaced by their optimal guess";
  return out;
}

}  // namespace entshare
