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

#include "entshare/hybrid.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "entshare/error.hpp"

namespace entshare {
namespace {

Eigen::Index dealer_dimension(const SystemLayout& layout, std::uint64_t q) {
  const auto& subs = layout.subsystems();
  if (subs.empty() || subs.front().label != kDealer) {
    throw InputError("dealer must be the first subsystem");
  }
  const Eigen::Index dd = Eigen::Index{1} << subs.front().qubits;
  if (static_cast<std::uint64_t>(dd) != q) {
    throw DimensionError("dealer dimension " + std::to_string(dd) + " does not match q = " +
                         std::to_string(q));
  }
  return dd;
}

// Diagonal of U^l over the full space.
Vector phase_diagonal(const SystemLayout& layout, const PhaseKey& key) {
  const Eigen::Index dd = dealer_dimension(layout, key.q);
  const Eigen::Index rest = layout.dimension() / dd;
  Vector diag(layout.dimension());
  for (Eigen::Index j = 0; j < dd; ++j) {
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>((static_cast<std::uint64_t>(j) * key.l) % key.q) /
                         static_cast<double>(key.q);
    diag.segment(j * rest, rest).setConstant(std::polar(1.0, angle));
  }
  return diag;
}

}  // namespace

PhaseKey::PhaseKey(std::uint64_t l_, std::uint64_t q_) : l(l_), q(q_) {
  if (q == 0 || l >= q) throw InputError("key must satisfy 0 <= l < q");
}

PureState phase_encrypt(const PureState& state, const PhaseKey& key) {
  const Vector diag = phase_diagonal(state.layout(), key);
  return PureState(state.layout(), diag.cwiseProduct(state.amplitudes()));
}

DensityMatrix phase_encrypt(const DensityMatrix& rho, const PhaseKey& key) {
  const Vector diag = phase_diagonal(rho.layout(), key);
  const Matrix out = diag.asDiagonal() * rho.matrix() * diag.conjugate().asDiagonal();
  return DensityMatrix(rho.layout(), out);
}

DensityMatrix key_twirl(const PureState& state, std::uint64_t q) {
  dealer_dimension(state.layout(), q);
  const Eigen::Index dim = state.layout().dimension();
  Matrix acc = Matrix::Zero(dim, dim);
  for (std::uint64_t l = 0; l < q; ++l) {
    const Vector v = phase_encrypt(state, PhaseKey(l, q)).amplitudes();
    acc += v * v.adjoint();
  }
  acc /= static_cast<double>(q);
  return DensityMatrix(state.layout(), acc);
}

DensityMatrix key_twirl(const DensityMatrix& rho, std::uint64_t q) {
  dealer_dimension(rho.layout(), q);
  Matrix acc = Matrix::Zero(rho.dimension(), rho.dimension());
  for (std::uint64_t l = 0; l < q; ++l) acc += phase_encrypt(rho, PhaseKey(l, q)).matrix();
  acc /= static_cast<double>(q);
  return DensityMatrix(rho.layout(), acc);
}

bool HybridReport::secure(double tol) const {
  for (const auto& s : subsets) {
    if (!s.key_unknown_separable || s.key_unknown_residual >= tol) return false;
    if (s.key_known && (!s.recovery_fidelity || *s.recovery_fidelity < 1.0 - tol)) return false;
  }
  return true;
}

HybridReport hybrid_analyze(const EntanglementSharingScheme& scheme, int t, std::uint64_t seed,
                            std::optional<std::uint64_t> p, const Tolerances& tol) {
  const int n = scheme.shares();
  if (n > 10) throw CapacityError("hybrid analysis supports at most 10 shares");
  if (t < 1 || t > n) throw InputError("threshold must satisfy 1 <= t <= n");
  const std::uint64_t q = std::uint64_t{1} << scheme.ebits;

  HybridReport report;
  report.code_name = scheme.code.name;
  report.n = n;
  report.k = scheme.ebits;
  report.q = q;
  report.t = t;
  report.seed = seed;

  const std::uint64_t prime = p ? *p : default_prime(n, q);
  if (prime <= std::max<std::uint64_t>(static_cast<std::uint64_t>(n), q)) {
    throw InputError("p must exceed max(n, q)");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> key_dist(0, q - 1);
  report.key = PhaseKey(key_dist(rng), q);
  report.classical = shamir_share(report.key.l, t, n, prime, rng());

  const PureState encrypted = phase_encrypt(scheme.encoded_state, report.key);
  const PureState target = mes(scheme.ebits);

  for (ShareSet subset : enumerate_subsets(n)) {
    HybridSubsetView view;
    view.subset = subset;
    view.quantum_authorized = is_authorized(scheme, subset);
    view.key_shares = subset.size();
    view.key_known = view.quantum_authorized && view.key_shares >= t;

    if (view.key_known) {
      const std::uint64_t l = shamir_reconstruct(report.classical.select(subset.members()));
      view.reconstructed_key = l;
      const RecoveryResult rec = recover_from(scheme, encrypted, subset);
      const DensityMatrix decrypted = phase_encrypt(rec.state, PhaseKey((q - l) % q, q));
      const Vector& phi = target.amplitudes();
      view.recovery_fidelity = std::clamp((phi.adjoint() * decrypted.matrix() * phi)(0, 0).real(), 0.0, 1.0);
    }

    if (subset.empty()) {
      view.key_unknown_residual = 0.0;
    } else {
      const DensityMatrix twirled = key_twirl(dealer_view(scheme, subset), q);
      const Matrix identity = Matrix::Identity(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(q));
      view.key_unknown_residual =
          verify_separable_decomposition(twirled, dealer_basis_ensemble(twirled, identity));
    }
    view.key_unknown_separable = view.key_unknown_residual < tol.compare;
    report.subsets.push_back(std::move(view));
  }
  return report;
}

}  // namespace entshare
