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

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <map>
#include <mutex>

#include "entshare/error.hpp"
#include "entshare/gf2.hpp"
#include "entshare/schemes.hpp"

namespace entshare {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DensityMatrix projector(const SystemLayout& layout, const Vector& v) {
  return DensityMatrix(layout, v * v.adjoint());
}

SystemLayout shares_layout(const std::vector<int>& shares) {
  std::vector<Subsystem> subs;
  for (int s : shares) subs.push_back({share_label(s), 1});
  return SystemLayout(std::move(subs));
}

SystemLayout dealer_layout(int k) { return SystemLayout({{kDealer, k}}); }

// Bell states on two qubits in the order |00>,|01>,|10>,|11>.
Vector bell(int index) {
  Vector v = Vector::Zero(4);
  switch (index) {
    case 0: v << 1, 0, 0, 1; break;
    case 1: v << 1, 0, 0, -1; break;
    case 2: v << 0, 1, 1, 0; break;
    default: v << 0, 1, -1, 0; break;
  }
  return v * kInvSqrt2;
}

int bit_of(std::uint64_t b, int share, int n) { return static_cast<int>((b >> (n - share)) & 1u); }

// Bell(k) on shares (p,q) times Bell(k) on shares (r,s), as a 4-share vector.
Vector bell_pair_product(int k, int p, int q, int r, int s) {
  const Vector beta = bell(k);
  Vector v(16);
  for (std::uint64_t b = 0; b < 16; ++b) {
    const int first = 2 * bit_of(b, p, 4) + bit_of(b, q, 4);
    const int second = 2 * bit_of(b, r, 4) + bit_of(b, s, 4);
    v(static_cast<Eigen::Index>(b)) = beta(first) * beta(second);
  }
  return v;
}

// Joint eigenvector of commuting Hermitian Paulis with the given signs.
Vector joint_eigenvector(const std::vector<PauliString>& ops, const std::vector<int>& signs,
                         Eigen::Index dim) {
  for (Eigen::Index b = 0; b < dim; ++b) {
    Vector v = Vector::Zero(dim);
    v(b) = 1.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      v = 0.5 * (v + static_cast<double>(signs[i]) * entshare::apply(ops[i], v));
    }
    if (v.norm() > 1e-6) return v / v.norm();
  }
  throw NumericalError("no joint eigenvector for sign pattern");
}

// Phases d_j with |C_j> = d_j * X_L^{j} |C_0>, where X_L^{j} multiplies the
// logical X operators selected by the bits of j.
std::vector<Complex> logical_phases(const EntanglementSharingScheme& scheme) {
  const auto& code = scheme.code;
  const Vector& c0 = scheme.codewords.front().amplitudes();
  std::vector<Complex> out;
  for (std::size_t j = 0; j < scheme.codewords.size(); ++j) {
    Vector v = c0;
    for (int i = 0; i < code.k; ++i) {
      if ((j >> (code.k - 1 - i)) & 1u) v = entshare::apply(code.logical_x[static_cast<std::size_t>(i)], v);
    }
    out.push_back(v.dot(scheme.codewords[j].amplitudes()));
  }
  return out;
}

std::vector<std::uint8_t> to_bits(const PauliString& p) {
  std::vector<std::uint8_t> row(2 * p.size());
  for (std::size_t q = 0; q < p.size(); ++q) {
    row[q] = p.x(q);
    row[p.size() + q] = p.z(q);
  }
  return row;
}

PauliString from_bits(const std::vector<std::uint8_t>& bits, std::size_t offset, std::size_t count,
                      std::size_t total) {
  std::vector<bool> x(count), z(count);
  for (std::size_t q = 0; q < count; ++q) {
    x[q] = bits[offset + q] != 0;
    z[q] = bits[total + offset + q] != 0;
  }
  return PauliString(std::move(x), std::move(z));
}

// ---------------------------------------------------------------------------
// Shor anchors

Vector ghz_like(int j) {
  Vector v = Vector::Zero(8);
  v(0) = kInvSqrt2;
  v(7) = j == 0 ? kInvSqrt2 : -kInvSqrt2;
  return v;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Vector dealer_ket(int which) {
  Vector v(2);
  switch (which) {
    case 0: v << 1, 0; break;
    case 1: v << 0, 1; break;
    case 2: v << kInvSqrt2, kInvSqrt2; break;   // |+>
    default: v << kInvSqrt2, -kInvSqrt2; break;  // |->
  }
  return v;
}

Matrix diagonal_mixture(const std::vector<const char*>& bitstrings) {
  const std::size_t len = std::string(bitstrings.front()).size();
  const Eigen::Index dim = Eigen::Index{1} << len;
  Matrix m = Matrix::Zero(dim, dim);
  for (const char* s : bitstrings) {
    const auto idx = static_cast<Eigen::Index>(std::stoul(s, nullptr, 2));
    m(idx, idx) += 1.0 / static_cast<double>(bitstrings.size());
  }
  return m;
}

SeparableEnsemble trace_right(const SeparableEnsemble& ens, const std::vector<int>& keep) {
  SeparableEnsemble out;
  std::vector<std::string> labels;
  for (int s : keep) labels.push_back(share_label(s));
  for (const auto& t : ens.terms) out.terms.push_back({t.weight, t.left, partial_trace(t.right, labels)});
  return out;
}

SeparableEnsemble full_triplets_ensemble() {
  SeparableEnsemble e;
  for (int j = 0; j < 2; ++j) {
    e.terms.push_back({0.5, projector(dealer_layout(1), dealer_ket(j)),
                       projector(shares_layout({1, 2, 3, 4, 5, 6}), kron(ghz_like(j), ghz_like(j)))});
  }
  return e;
}

SeparableEnsemble last_triplet_ensemble() {
  SeparableEnsemble e;
  for (int j = 0; j < 2; ++j) {
    e.terms.push_back({0.5, projector(dealer_layout(1), dealer_ket(j)),
                       projector(shares_layout({7, 8, 9}), ghz_like(j))});
  }
  return e;
}

SeparableEnsemble two_per_triplet_ensemble() {
  const SystemLayout right = shares_layout({2, 3, 5, 6, 8, 9});
  const Matrix even = diagonal_mixture({"000000", "001111", "110011", "111100"});
  const Matrix odd = diagonal_mixture({"000011", "001100", "110000", "111111"});
  SeparableEnsemble e;
  e.terms.push_back({0.5, projector(dealer_layout(1), dealer_ket(2)), DensityMatrix(right, even)});
  e.terms.push_back({0.5, projector(dealer_layout(1), dealer_ket(3)), DensityMatrix(right, odd)});
  return e;
}

SeparableEnsemble pair_and_triplet_ensemble() {
  Matrix mix56 = Matrix::Zero(4, 4);
  mix56(0, 0) = 0.5;
  mix56(3, 3) = 0.5;
  const DensityMatrix pair(shares_layout({5, 6}), mix56);
  SeparableEnsemble e;
  for (int j = 0; j < 2; ++j) {
    e.terms.push_back({0.5, projector(dealer_layout(1), dealer_ket(j)),
                       tensor(pair, projector(shares_layout({7, 8, 9}), ghz_like(j)))});
  }
  return e;
}

struct Anchor {
  ShareSet subset;
  const char* class_name;
};

const std::vector<Anchor>& anchors() {
  static const std::vector<Anchor> table = {
      {ShareSet{1, 2, 3, 4, 5, 6}, "{1,2,3}"}, {ShareSet{7, 8, 9}, "{1,2,3}"},
      {ShareSet{2, 3, 5, 6, 8, 9}, "{1,4,7}"}, {ShareSet{3, 6, 9}, "{1,4,7}"},
      {ShareSet{5, 6, 7, 8, 9}, "{1,2,3,4}"},  {ShareSet{6, 7, 8, 9}, "{1,2,3,4}"},
      {ShareSet{2, 3, 5, 6, 9}, "{1,4,7,8}"},  {ShareSet{2, 3, 6, 9}, "{1,4,7,8}"},
  };
  return table;
}

ShareSet apply_perm(ShareSet s, const std::array<int, 10>& perm) {
  ShareSet out;
  for (int m : s.members()) out = out.with(perm[static_cast<std::size_t>(m)]);
  return out;
}

struct OrbitEntry {
  std::size_t anchor;
  std::size_t perm;
};

// Subset mask -> first (anchor, permutation) mapping an anchor onto it.
const std::map<std::uint32_t, OrbitEntry>& orbit_table() {
  static const std::map<std::uint32_t, OrbitEntry> table = [] {
    std::map<std::uint32_t, OrbitEntry> t;
    const auto group = shor_symmetry_group();
    for (std::size_t a = 0; a < anchors().size(); ++a) {
      for (std::size_t p = 0; p < group.size(); ++p) {
        t.try_emplace(apply_perm(anchors()[a].subset, group[p]).mask(), OrbitEntry{a, p});
      }
    }
    return t;
  }();
  return table;
}

SeparableEnsemble permute_ensemble(const SeparableEnsemble& ens, ShareSet anchor,
                                   const std::array<int, 10>& perm) {
  const auto members = anchor.members();
  std::vector<std::string> labels;
  ShareSet image;
  for (int m : members) {
    labels.push_back(share_label(perm[static_cast<std::size_t>(m)]));
    image = image.with(perm[static_cast<std::size_t>(m)]);
  }
  const auto order = share_labels(image);
  SeparableEnsemble out;
  for (const auto& t : ens.terms) {
    out.terms.push_back({t.weight, t.left, reorder(relabel(t.right, labels), order)});
  }
  return out;
}

}  // namespace

SeparableEnsemble dealer_basis_ensemble(const DensityMatrix& rho, const Matrix& dealer_basis) {
  const auto& subs = rho.layout().subsystems();
  if (subs.empty() || subs.front().label != kDealer) {
    throw InputError("dealer must be the first subsystem");
  }
  const int k = subs.front().qubits;
  const Eigen::Index dd = Eigen::Index{1} << k;
  if (dealer_basis.rows() != dd || dealer_basis.cols() != dd) {
    throw DimensionError("dealer basis has the wrong size");
  }
  const auto labels = rho.layout().labels();
  const std::vector<std::string> rest(labels.begin() + 1, labels.end());
  const SystemLayout right_layout = rho.layout().restrict_to(rest);
  const Eigen::Index dr = right_layout.dimension();
  const Matrix& m = rho.matrix();

  SeparableEnsemble ens;
  for (Eigen::Index a = 0; a < dd; ++a) {
    const Vector ket = dealer_basis.col(a);
    Matrix block = Matrix::Zero(dr, dr);
    for (Eigen::Index d = 0; d < dd; ++d) {
      for (Eigen::Index d2 = 0; d2 < dd; ++d2) {
        const Complex c = std::conj(ket(d)) * ket(d2);
        if (std::abs(c) == 0.0) continue;
        block += c * m.block(d * dr, d2 * dr, dr, dr);
      }
    }
    const double p = block.trace().real();
    if (p < 1e-14) continue;
    block = (0.5 * (block + block.adjoint()) / p).eval();
    ens.terms.push_back({p, projector(dealer_layout(k), ket), DensityMatrix(right_layout, block)});
  }
  // Renormalize away the weight of dropped near-zero terms.
  double total = 0.0;
  for (const auto& t : ens.terms) total += t.weight;
  for (auto& t : ens.terms) t.weight /= total;
  return ens;
}

std::optional<Certificate> bell_repairing_certificate(const EntanglementSharingScheme& scheme,
                                                      ShareSet subset) {
  if (scheme.code.name != "code_4_2_2" || subset.size() != 2) return std::nullopt;
  const auto kept = subset.members();
  const auto traced = subset.complement(4).members();
  const int p = traced[0], q = traced[1], r = kept[0], s = kept[1];

  // c(j, k) = <Bell(k)_pq Bell(k)_rs | Bell(j)_12 Bell(j)_34>
  Matrix c(4, 4);
  for (int j = 0; j < 4; ++j) {
    const Vector original = bell_pair_product(j, 1, 2, 3, 4);
    for (int k = 0; k < 4; ++k) c(j, k) = bell_pair_product(k, p, q, r, s).dot(original);
  }
  Certificate cert{"bell-repairing", {}};
  const SystemLayout right = shares_layout({r, s});
  for (int k = 0; k < 4; ++k) {
    const Vector a = c.col(k);
    cert.ensemble.terms.push_back({0.25, projector(dealer_layout(2), a), projector(right, bell(k))});
  }
  return cert;
}

std::vector<std::array<int, 10>> shor_symmetry_group() {
  std::array<int, 3> base{0, 1, 2};
  std::vector<std::array<int, 3>> s3;
  do {
    s3.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  std::vector<std::array<int, 10>> group;
  for (const auto& triplets : s3) {
    for (const auto& w0 : s3) {
      for (const auto& w1 : s3) {
        for (const auto& w2 : s3) {
          const std::array<std::array<int, 3>, 3> within{w0, w1, w2};
          std::array<int, 10> perm{};
          for (int t = 0; t < 3; ++t) {
            for (int i = 0; i < 3; ++i) {
              perm[static_cast<std::size_t>(3 * t + i + 1)] =
                  3 * triplets[static_cast<std::size_t>(t)] + within[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] + 1;
            }
          }
          group.push_back(perm);
        }
      }
    }
  }
  return group;
}

std::vector<ShareSet> shor_anchor_subsets() {
  std::vector<ShareSet> out;
  for (const auto& a : anchors()) out.push_back(a.subset);
  return out;
}

SeparableEnsemble shor_anchor_ensemble(ShareSet anchor) {
  if (anchor == ShareSet{1, 2, 3, 4, 5, 6}) return full_triplets_ensemble();
  if (anchor == ShareSet{7, 8, 9}) return last_triplet_ensemble();
  if (anchor == ShareSet{2, 3, 5, 6, 8, 9}) return two_per_triplet_ensemble();
  if (anchor == ShareSet{3, 6, 9}) return trace_right(two_per_triplet_ensemble(), {3, 6, 9});
  if (anchor == ShareSet{5, 6, 7, 8, 9}) return pair_and_triplet_ensemble();
  if (anchor == ShareSet{6, 7, 8, 9}) return trace_right(pair_and_triplet_ensemble(), {6, 7, 8, 9});
  if (anchor == ShareSet{2, 3, 5, 6, 9}) return trace_right(two_per_triplet_ensemble(), {2, 3, 5, 6, 9});
  if (anchor == ShareSet{2, 3, 6, 9}) return trace_right(two_per_triplet_ensemble(), {2, 3, 6, 9});
  throw LookupError("no explicit ensemble for " + anchor.to_string());
}

std::optional<Certificate> shor_orbit_certificate(const EntanglementSharingScheme& scheme,
                                                  ShareSet subset) {
  if (scheme.code.name != "shor_9_1_3") return std::nullopt;
  const auto& table = orbit_table();
  const auto it = table.find(subset.mask());
  if (it == table.end()) return std::nullopt;
  static const auto group = shor_symmetry_group();
  const ShareSet anchor = anchors()[it->second.anchor].subset;
  return Certificate{"shor-triplet-orbit",
                     permute_ensemble(shor_anchor_ensemble(anchor), anchor, group[it->second.perm])};
}

std::optional<Certificate> stabilizer_dephasing_certificate(const EntanglementSharingScheme& scheme,
                                                            ShareSet subset,
                                                            const DensityMatrix& rho) {
  const auto& code = scheme.code;
  const auto k = static_cast<std::size_t>(code.k);
  const auto n = static_cast<std::size_t>(code.n);
  const std::size_t total = k + n;

  // Stabilizer of sum_j |j>_D X_L^{j}|C_0>, on D then the shares.
  std::vector<std::size_t> share_pos(n), dealer_pos(k);
  for (std::size_t i = 0; i < n; ++i) share_pos[i] = k + i;
  for (std::size_t i = 0; i < k; ++i) dealer_pos[i] = i;
  gf2::BitMatrix g(0, 2 * total);
  for (const auto& gen : code.generators) g.append_row(to_bits(embed(gen, total, share_pos)));
  for (std::size_t i = 0; i < k; ++i) {
    g.append_row(to_bits(multiply(PauliString::single(total, i, 'Z'), embed(code.logical_z[i], total, share_pos))));
    g.append_row(to_bits(multiply(PauliString::single(total, i, 'X'), embed(code.logical_x[i], total, share_pos))));
  }

  // Elements with no support outside D and the subset.
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < n; ++i) {
    if (!subset.contains(static_cast<int>(i + 1))) {
      outside.push_back(k + i);
      outside.push_back(total + k + i);
    }
  }
  std::vector<std::vector<std::uint8_t>> combos;
  if (outside.empty()) {
    for (std::size_t r = 0; r < g.rows(); ++r) {
      std::vector<std::uint8_t> c(g.rows(), 0);
      c[r] = 1;
      combos.push_back(std::move(c));
    }
  } else {
    combos = gf2::left_kernel(g.select_columns(outside));
  }
  std::vector<PauliString> dealer_parts;
  for (const auto& c : combos) {
    const PauliString d = from_bits(gf2::combine_rows(g, c), 0, k, total);
    if (!d.is_identity()) dealer_parts.push_back(d);
  }
  for (std::size_t i = 0; i < dealer_parts.size(); ++i) {
    for (std::size_t j = i + 1; j < dealer_parts.size(); ++j) {
      if (!commutes(dealer_parts[i], dealer_parts[j])) return std::nullopt;
    }
  }

  // Extend to k independent commuting dealer Paulis.
  std::vector<PauliString> lagrangian;
  gf2::BitMatrix span(0, 2 * k);
  auto try_add = [&](const PauliString& p) {
    for (const auto& l : lagrangian) {
      if (!commutes(l, p)) return;
    }
    gf2::BitMatrix trial = span;
    trial.append_row(to_bits(p));
    if (gf2::rank(trial) > lagrangian.size()) {
      lagrangian.push_back(p);
      span = std::move(trial);
    }
  };
  for (const auto& p : dealer_parts) try_add(p);
  const std::size_t candidates = std::size_t{1} << (2 * k);
  for (std::size_t code_bits = 1; code_bits < candidates && lagrangian.size() < k; ++code_bits) {
    std::vector<bool> x(k), z(k);
    for (std::size_t i = 0; i < k; ++i) {
      x[i] = (code_bits >> i) & 1u;
      z[i] = (code_bits >> (k + i)) & 1u;
    }
    try_add(PauliString(std::move(x), std::move(z)));
  }

  const Eigen::Index dd = Eigen::Index{1} << k;
  const auto phases = logical_phases(scheme);
  Matrix basis(dd, dd);
  for (Eigen::Index s = 0; s < dd; ++s) {
    std::vector<int> signs(k);
    for (std::size_t i = 0; i < k; ++i) signs[i] = ((s >> i) & 1) ? -1 : 1;
    Vector v = joint_eigenvector(lagrangian, signs, dd);
    // Undo the codeword phase convention on the dealer side.
    for (Eigen::Index j = 0; j < dd; ++j) v(j) *= phases[static_cast<std::size_t>(j)];
    basis.col(s) = v;
  }
  return Certificate{"stabilizer-dealer-dephasing", dealer_basis_ensemble(rho, basis)};
}

std::optional<Certificate> find_certificate(const EntanglementSharingScheme& scheme,
                                            ShareSet subset, const DensityMatrix& rho) {
  if (auto c = bell_repairing_certificate(scheme, subset)) return c;
  if (auto c = shor_orbit_certificate(scheme, subset)) return c;
  return stabilizer_dephasing_certificate(scheme, subset, rho);
}

ShorTripletReport verify_shor_triplet_classes(const EntanglementSharingScheme& scheme,
                                              const SchemeReport& report, const Tolerances& tol) {
  if (scheme.code.name != "shor_9_1_3" || scheme.shares() != 9 || scheme.ebits != 1) {
    throw InputError("triplet class verification needs the shor_9_1_3 scheme");
  }
  const auto group = shor_symmetry_group();
  ShorTripletReport out;
  std::vector<bool> covered(512, false);

  std::vector<std::string> class_names;
  for (const auto& a : anchors()) {
    if (std::find(class_names.begin(), class_names.end(), a.class_name) == class_names.end()) {
      class_names.push_back(a.class_name);
    }
  }
  for (const auto& name : class_names) {
    ShorClassCheck check;
    check.name = name;
    std::vector<bool> seen(512, false);
    for (const auto& a : anchors()) {
      if (a.class_name != name) continue;
      check.anchors.push_back(a.subset);
      const SeparableEnsemble base = shor_anchor_ensemble(a.subset);
      for (const auto& perm : group) {
        const ShareSet member = apply_perm(a.subset, perm);
        if (seen[member.mask()]) continue;
        seen[member.mask()] = true;
        covered[member.mask()] = true;
        ++check.members;
        const DensityMatrix rho = dealer_view(scheme, member);
        const double residual =
            verify_separable_decomposition(rho, permute_ensemble(base, a.subset, perm));
        check.max_residual = std::max(check.max_residual, residual);
        const auto status = report.find(member).status;
        if (status != SubsetStatus::Intermediate && status != SubsetStatus::Forbidden) {
          check.all_separable = false;
        }
      }
    }
    check.passed = check.all_separable && check.max_residual < tol.compare;
    out.classes.push_back(std::move(check));
  }

  bool match = true;
  for (std::uint32_t m = 0; m < 512; ++m) {
    const ShareSet s(m);
    const bool in_b = !erasure_correctable(scheme.code, s) && !is_authorized(scheme, s);
    if (in_b) ++out.non_correctable_unauthorized;
    if (covered[m]) ++out.class_union_size;
    if (in_b != covered[m]) match = false;
  }
  out.exhaustive = match;
  out.passed = out.exhaustive &&
               std::all_of(out.classes.begin(), out.classes.end(), [](const auto& c) { return c.passed; });
  return out;
}

}  // namespace entshare
