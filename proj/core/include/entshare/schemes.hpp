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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "entshare/codes.hpp"
#include "entshare/config.hpp"
#include "entshare/entanglement.hpp"
#include "entshare/share_set.hpp"
#include "entshare/states.hpp"

namespace entshare {

/** A code together with the dealer-MES state it produces. */
struct EntanglementSharingScheme {
  StabilizerCode code;
  std::vector<PureState> codewords;
  /** Layout D (k qubits), P1..Pn. */
  PureState encoded_state;
  int ebits = 0;

  int shares() const { return code.n; }
};

/** Validates the code and encodes the dealer MES. */
EntanglementSharingScheme build_scheme(const StabilizerCode& code,
                                       int dense_limit = kDefaultDenseLimit);

/** Authorized iff erasure of the complement is correctable. */
bool is_authorized(const EntanglementSharingScheme& scheme, ShareSet subset);

struct RecoveryResult {
  /** Layout D (k qubits), D' (k qubits). */
  DensityMatrix state;
  double fidelity = 0.0;
};

/**
 * Recovers the dealer MES from the shares in `subset`. The erased shares
 * are replaced by fresh ancillas and the transpose (Petz) channel of the
 * erasure, taken with respect to the code projector, maps the result back
 * onto the code space before unencoding into D'.
 *
 * Throws AuthorizationError for an unauthorized subset.
 */
RecoveryResult recover(const EntanglementSharingScheme& scheme, ShareSet subset);

/**
 * Same channel applied to an arbitrary state on D, P1..Pn (for instance a
 * phase-encrypted one). The fidelity field compares against the bare MES.
 */
RecoveryResult recover_from(const EntanglementSharingScheme& scheme, const PureState& state,
                            ShareSet subset);

enum class SubsetStatus { Authorized, Intermediate, Forbidden, PPTUndetermined, EntangledLeak };

std::string to_string(SubsetStatus status);

struct Witnesses {
  std::optional<double> recovery_fidelity;
  /** For authorized sets this is measured on the recovered D,D' state. */
  double negativity = 0.0;
  double mutual_information_bits = 0.0;
  /** ||rho - rho_D (x) rho_Gamma||_1, for unauthorized sets. */
  std::optional<double> product_distance;
  std::optional<double> decomposition_residual;
  /** Name of the separability certificate that was checked, if any. */
  std::string certificate;
};

struct SubsetClassification {
  ShareSet subset;
  SubsetStatus status = SubsetStatus::Forbidden;
  Witnesses witnesses;
};

struct AccessStructureCheck {
  bool monotone = true;
  bool no_disjoint_pair = true;
  bool complements_unauthorized = true;
  std::vector<std::string> violations;

  bool ok() const { return monotone && no_disjoint_pair && complements_unauthorized; }
};

struct ImportantShares {
  ShareSet shares;
  /** Qubits in the smallest important share; empty if there is none. */
  std::optional<int> q;
};

/**
 * Relation between shared ebits k and the smallest important share q:
 * a scheme that leaks no entanglement must have k <= 2q, so k > 2q has to
 * show up as an entangled unauthorized set.
 */
struct ShareBoundVerdict {
  int ebits = 0;
  std::optional<int> q;
  std::optional<int> bound;
  bool saturated = false;
  bool leak_predicted = false;
  bool leak_confirmed = false;
  bool undetermined_sets = false;
  bool consistent = true;
  std::string summary;
};

struct SchemeReport {
  std::string code_name;
  int n = 0;
  int k = 0;
  std::vector<SubsetClassification> subsets;  // report order
  std::vector<ShareSet> access_structure;     // authorized sets, report order
  AccessStructureCheck structure;
  ImportantShares important;
  ShareBoundVerdict bound;

  /** No unauthorized set is entangled or undetermined. */
  bool perfect() const;
  std::size_t count(SubsetStatus status) const;
  const SubsetClassification& find(ShareSet subset) const;
};

struct ClassifyOptions {
  Tolerances tol = default_tolerances();
  /** 0 picks std::thread::hardware_concurrency(). */
  unsigned threads = 0;
};

SubsetClassification classify_subset(const EntanglementSharingScheme& scheme, ShareSet subset,
                                      const Tolerances& tol = default_tolerances());

/** Classifies all 2^n subsets (n <= 10) and derives the structure checks. */
SchemeReport classify_all(const EntanglementSharingScheme& scheme, const ClassifyOptions& opts = {});

AccessStructureCheck check_access_structure(int n, const std::vector<ShareSet>& authorized);

ImportantShares important_shares(int n, const std::vector<ShareSet>& authorized);

ShareBoundVerdict check_share_bound(const SchemeReport& report);

/** rho on D and the shares of `subset`, dealer first. */
DensityMatrix dealer_view(const EntanglementSharingScheme& scheme, ShareSet subset);

// ---------------------------------------------------------------------------
// Separability certificates

struct Certificate {
  std::string provider;
  SeparableEnsemble ensemble;
};

/**
 * Decomposition of a state on D (first subsystem) and other labels obtained
 * by measuring D in an orthonormal basis: terms |a><a| (x) <a|rho|a>/p_a.
 * Exact whenever rho is already block-diagonal in that basis.
 */
SeparableEnsemble dealer_basis_ensemble(const DensityMatrix& rho, const Matrix& dealer_basis);

/**
 * Bell re-pairing decomposition for two shares of the [[4,2,2]] scheme:
 * the codeword pairs (12)(34) are rewritten over (pq)(rs) and the traced
 * pair (pq) is discarded.
 */
std::optional<Certificate> bell_repairing_certificate(const EntanglementSharingScheme& scheme,
                                                      ShareSet subset);

/**
 * Explicit triplet-structured ensembles for Shor's code, carried to any
 * subset in the orbit of a class anchor under triplet and within-triplet
 * permutations.
 */
std::optional<Certificate> shor_orbit_certificate(const EntanglementSharingScheme& scheme,
                                                  ShareSet subset);

/**
 * Generic stabilizer certificate: if the dealer restrictions of the state's
 * stabilizer elements supported on D and the subset commute, dephasing D in
 * a joint eigenbasis of a maximal commuting extension leaves rho unchanged.
 */
std::optional<Certificate> stabilizer_dephasing_certificate(const EntanglementSharingScheme& scheme,
                                                            ShareSet subset,
                                                            const DensityMatrix& rho);

/** Tries the code-specific providers, then the generic one. */
std::optional<Certificate> find_certificate(const EntanglementSharingScheme& scheme,
                                            ShareSet subset, const DensityMatrix& rho);

// ---------------------------------------------------------------------------
// Shor's code: triplet classes of the unauthorized, non-correctable subsets

struct ShorClassCheck {
  std::string name;              // class representative, e.g. "{1,4,7}"
  std::vector<ShareSet> anchors;  // subsets with an explicit ensemble
  std::size_t members = 0;
  double max_residual = 0.0;
  bool all_separable = true;  // every member Intermediate or Forbidden
  bool passed = false;
};

struct ShorTripletReport {
  std::vector<ShorClassCheck> classes;
  std::size_t class_union_size = 0;
  std::size_t non_correctable_unauthorized = 0;
  /** Class orbits cover exactly the subsets that are neither correctable nor authorized. */
  bool exhaustive = false;
  bool passed = false;
};

/** Throws InputError unless the scheme is built on shor_9_1_3. */
ShorTripletReport verify_shor_triplet_classes(const EntanglementSharingScheme& scheme,
                                              const SchemeReport& report,
                                              const Tolerances& tol = default_tolerances());

/** Explicit anchor ensemble for one of the eight Shor anchors (throws LookupError otherwise). */
SeparableEnsemble shor_anchor_ensemble(ShareSet anchor);

/** The eight anchor subsets, two per class. */
std::vector<ShareSet> shor_anchor_subsets();

/** Triplet / within-triplet permutations of shares 1..9 (1296 of them), perm[s] for s in 1..9. */
std::vector<std::array<int, 10>> shor_symmetry_group();

}  // namespace entshare
