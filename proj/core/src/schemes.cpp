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

#include "entshare/schemes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "entshare/error.hpp"

namespace entshare {
namespace {

std::uint64_t gather_shares(std::uint64_t b, const std::vector<int>& shares, int n) {
  std::uint64_t out = 0;
  for (int s : shares) out = (out << 1) | ((b >> (n - s)) & 1u);
  return out;
}

std::vector<std::string> dealer_and(ShareSet subset) {
  std::vector<std::string> labels{kDealer};
  for (const auto& l : share_labels(subset)) labels.push_back(l);
  return labels;
}

}  // namespace

EntanglementSharingScheme build_scheme(const StabilizerCode& code, int dense_limit) {
  const ValidationReport report = validate(code, dense_limit);
  if (!report.ok()) {
    throw ValidationError("invalid code '" + code.name + "': " + report.summary());
  }
  EntanglementSharingScheme scheme;
  scheme.code = code;
  scheme.codewords = codeword_basis(code, dense_limit);
  scheme.encoded_state = encode_dealer_mes(code, dense_limit);
  scheme.ebits = code.k;
  return scheme;
}

bool is_authorized(const EntanglementSharingScheme& scheme, ShareSet subset) {
  if (!subset.subset_of(ShareSet::all(scheme.shares()))) {
    throw InputError("subset " + subset.to_string() + " has shares outside 1.." +
                     std::to_string(scheme.shares()));
  }
  return erasure_correctable(scheme.code, subset.complement(scheme.shares()));
}

RecoveryResult recover(const EntanglementSharingScheme& scheme, ShareSet subset) {
  return recover_from(scheme, scheme.encoded_state, subset);
}

RecoveryResult recover_from(const EntanglementSharingScheme& scheme, const PureState& state,
                            ShareSet subset) {
  if (!is_authorized(scheme, subset)) {
    throw AuthorizationError("subset " + subset.to_string() + " is not authorized for '" +
                             scheme.code.name + "'");
  }
  if (!(state.layout() == scheme.encoded_state.layout())) {
    throw DimensionError("state layout does not match the scheme");
  }
  const int n = scheme.shares();
  const int k = scheme.ebits;
  const ShareSet erased = subset.complement(n);
  const auto kept_shares = subset.members();
  const auto erased_shares = erased.members();
  const Eigen::Index da = Eigen::Index{1} << kept_shares.size();
  const Eigen::Index de = Eigen::Index{1} << erased_shares.size();
  const Eigen::Index dd = Eigen::Index{1} << k;
  const auto block = static_cast<std::uint64_t>(1) << n;

  std::vector<Eigen::Index> a_index(block), e_index(block);
  for (std::uint64_t b = 0; b < block; ++b) {
    a_index[b] = static_cast<Eigen::Index>(gather_shares(b, kept_shares, n));
    e_index[b] = static_cast<Eigen::Index>(gather_shares(b, erased_shares, n));
  }

  // Column (j, e) of `code` is codeword j with the erased shares fixed to e;
  // column (d, f) of `held` is the dealer-d branch of the state likewise.
  Matrix code = Matrix::Zero(da, dd * de);
  Matrix held = Matrix::Zero(da, dd * de);
  for (Eigen::Index j = 0; j < dd; ++j) {
    const Vector& cw = scheme.codewords[static_cast<std::size_t>(j)].amplitudes();
    for (std::uint64_t b = 0; b < block; ++b) {
      code(a_index[b], j * de + e_index[b]) = cw(static_cast<Eigen::Index>(b));
      held(a_index[b], j * de + e_index[b]) =
          state.amplitudes()(j * static_cast<Eigen::Index>(block) + static_cast<Eigen::Index>(b));
    }
  }

  // Kraus operators E_e = sum_j |j><c_{j,e}| N(P)^{-1/2} with N(P) = code code^dag.
  // With code = U S V^dag, <c_{j,e}| N(P)^{-1/2} = row (j,e) of V U^dag.
  Eigen::JacobiSVD<Matrix> svd(code, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > 1e-10 * sv(0)) ++rank;
  const Matrix amplitudes =
      svd.matrixV().leftCols(rank) * (svd.matrixU().leftCols(rank).adjoint() * held);

  // amplitudes((j,e),(d,f)) -> output vector |d>|j> for environment (e,f).
  Matrix t(dd * dd, de * de);
  for (Eigen::Index d = 0; d < dd; ++d) {
    for (Eigen::Index j = 0; j < dd; ++j) {
      for (Eigen::Index e = 0; e < de; ++e) {
        for (Eigen::Index f = 0; f < de; ++f) {
          t(d * dd + j, e * de + f) = amplitudes(j * de + e, d * de + f);
        }
      }
    }
  }
  const PureState target = mes(k);
  DensityMatrix out(target.layout(), t * t.adjoint());
  const Complex overlap =
      target.amplitudes().dot(out.matrix() * target.amplitudes());
  return {std::move(out), std::clamp(overlap.real(), 0.0, 1.0)};
}

std::string to_string(SubsetStatus status) {
  switch (status) {
    case SubsetStatus::Authorized: return "authorized";
    case SubsetStatus::Intermediate: return "intermediate";
    case SubsetStatus::Forbidden: return "forbidden";
    case SubsetStatus::PPTUndetermined: return "ppt-undetermined";
    case SubsetStatus::EntangledLeak: return "entangled-leak";
  }
  return "?";
}

DensityMatrix dealer_view(const EntanglementSharingScheme& scheme, ShareSet subset) {
  return partial_trace(scheme.encoded_state, dealer_and(subset));
}

SubsetClassification classify_subset(const EntanglementSharingScheme& scheme, ShareSet subset,
                                      const Tolerances& tol) {
  SubsetClassification out;
  out.subset = subset;
  const auto gamma = share_labels(subset);
  Witnesses& w = out.witnesses;

  if (is_authorized(scheme, subset)) {
    const RecoveryResult rec = recover(scheme, subset);
    out.status = SubsetStatus::Authorized;
    w.recovery_fidelity = rec.fidelity;
    w.negativity = negativity(rec.state, Bipartition{{kDealer}, {kDealerPartner}});
    const PureState& psi = scheme.encoded_state;
    w.mutual_information_bits = subsystem_entropy(psi, {kDealer}, tol) +
                                subsystem_entropy(psi, gamma, tol) -
                                subsystem_entropy(psi, dealer_and(subset), tol);
    return out;
  }

  const DensityMatrix rho = dealer_view(scheme, subset);
  const Bipartition part{{kDealer}, gamma};
  w.mutual_information_bits = mutual_information(rho, {kDealer}, gamma, tol);
  w.negativity = negativity(rho, part);
  w.product_distance = product_distance(rho, part);

  if (*w.product_distance < tol.compare) {
    out.status = SubsetStatus::Forbidden;
    w.certificate = "product";
    return out;
  }
  if (!is_ppt(rho, part, tol.compare)) {
    out.status = SubsetStatus::EntangledLeak;
    return out;
  }
  if (auto cert = find_certificate(scheme, subset, rho)) {
    const double residual = verify_separable_decomposition(rho, cert->ensemble);
    if (residual < tol.compare) {
      out.status = SubsetStatus::Intermediate;
      w.decomposition_residual = residual;
      w.certificate = cert->provider;
      return out;
    }
  }
  if (ppt_implies_separable(rho, part)) {
    out.status = SubsetStatus::Intermediate;
    w.certificate = "ppt-low-dimension";
    return out;
  }
  out.status = SubsetStatus::PPTUndetermined;
  return out;
}

AccessStructureCheck check_access_structure(int n, const std::vector<ShareSet>& authorized) {
  AccessStructureCheck check;
  std::vector<bool> is_auth(std::size_t{1} << n, false);
  for (ShareSet a : authorized) is_auth[a.mask()] = true;
  for (ShareSet a : authorized) {
    for (int r = 1; r <= n; ++r) {
      if (!a.contains(r) && !is_auth[a.with(r).mask()]) {
        check.monotone = false;
        check.violations.push_back("not monotone: " + a.to_string() + " authorized but " +
                                   a.with(r).to_string() + " is not");
      }
    }
    if (is_auth[a.complement(n).mask()]) {
      check.complements_unauthorized = false;
      check.violations.push_back("complement of " + a.to_string() + " is authorized");
    }
  }
  for (std::size_t i = 0; i < authorized.size(); ++i) {
    for (std::size_t j = i; j < authorized.size(); ++j) {
      if (authorized[i].disjoint(authorized[j]) && (i != j || authorized[i].empty())) {
        check.no_disjoint_pair = false;
        check.violations.push_back("disjoint authorized sets " + authorized[i].to_string() +
                                   " and " + authorized[j].to_string());
      }
    }
  }
  return check;
}

ImportantShares important_shares(int n, const std::vector<ShareSet>& authorized) {
  std::vector<bool> is_auth(std::size_t{1} << n, false);
  for (ShareSet a : authorized) is_auth[a.mask()] = true;
  ImportantShares out;
  for (ShareSet a : authorized) {
    for (int r : a.members()) {
      if (!is_auth[a.without(r).mask()]) out.shares = out.shares.with(r);
    }
  }
  // Every share is a single qubit.
  if (!out.shares.empty()) out.q = 1;
  return out;
}

ShareBoundVerdict check_share_bound(const SchemeReport& report) {
  ShareBoundVerdict v;
  v.ebits = report.k;
  v.q = report.important.q;
  v.leak_confirmed = report.count(SubsetStatus::EntangledLeak) > 0;
  v.undetermined_sets = report.count(SubsetStatus::PPTUndetermined) > 0;
  if (!v.q) {
    v.consistent = true;
    v.summary = "no important share; bound not applicable";
    return v;
  }
  v.bound = 2 * *v.q;
  v.saturated = v.ebits == *v.bound;
  v.leak_predicted = v.ebits > *v.bound;
  v.consistent = !v.leak_predicted || v.leak_confirmed;
  const std::string rel = "k=" + std::to_string(v.ebits) + ", 2q=" + std::to_string(*v.bound);
  if (v.leak_predicted) {
    v.summary = rel + ": k exceeds 2q, entanglement must leak; " +
                (v.leak_confirmed ? "leak confirmed by an NPT unauthorized set"
                                  : "no entangled unauthorized set found");
  } else if (v.saturated) {
    v.summary = rel + ": bound saturated";
  } else {
    v.summary = rel + ": within bound";
  }
  return v;
}

bool SchemeReport::perfect() const {
  return count(SubsetStatus::EntangledLeak) == 0 && count(SubsetStatus::PPTUndetermined) == 0;
}

std::size_t SchemeReport::count(SubsetStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      subsets.begin(), subsets.end(), [status](const auto& s) { return s.status == status; }));
}

const SubsetClassification& SchemeReport::find(ShareSet subset) const {
  for (const auto& s : subsets) {
    if (s.subset == subset) return s;
  }
  throw LookupError("subset " + subset.to_string() + " not in report");
}

SchemeReport classify_all(const EntanglementSharingScheme& scheme, const ClassifyOptions& opts) {
  const int n = scheme.shares();
  if (n > 10) throw CapacityError("classify_all enumerates 2^n subsets; n must be at most 10");
  const std::vector<ShareSet> subsets = enumerate_subsets(n);

  std::vector<SubsetClassification> results(subsets.size());
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(subsets.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < subsets.size(); i = next++) {
        results[i] = classify_subset(scheme, subsets[i], opts.tol);
      }
    } catch (...) {
      errors[id] = std::current_exception();
      next = subsets.size();
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SchemeReport report;
  report.code_name = scheme.code.name;
  report.n = n;
  report.k = scheme.ebits;
  report.subsets = std::move(results);
  for (const auto& s : report.subsets) {
    if (s.status == SubsetStatus::Authorized) report.access_structure.push_back(s.subset);
  }
  report.structure = check_access_structure(n, report.access_structure);
  report.important = important_shares(n, report.access_structure);
  report.bound = check_share_bound(report);
  return report;
}

}  // namespace entshare
