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

#include "entshare/codes.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "entshare/error.hpp"
#include "entshare/gf2.hpp"

namespace entshare {
namespace {

// Rows are generators, columns x_0..x_{n-1}, z_0..z_{n-1}.
gf2::BitMatrix symplectic_matrix(const std::vector<PauliString>& ops, std::size_t n) {
  gf2::BitMatrix m(0, 2 * n);
  for (const auto& p : ops) {
    std::vector<std::uint8_t> row(2 * n, 0);
    for (std::size_t q = 0; q < n; ++q) {
      row[q] = p.x(q);
      row[n + q] = p.z(q);
    }
    m.append_row(row);
  }
  return m;
}

std::vector<std::size_t> columns_for(const std::vector<int>& shares, std::size_t n) {
  std::vector<std::size_t> cols;
  for (int s : shares) cols.push_back(static_cast<std::size_t>(s - 1));
  for (int s : shares) cols.push_back(n + static_cast<std::size_t>(s - 1));
  return cols;
}

std::vector<ValidationIssue> structural_issues(const StabilizerCode& code) {
  std::vector<ValidationIssue> issues;
  if (code.n <= 0) {
    issues.push_back({"n must be positive", std::nullopt});
    return issues;
  }
  if (code.k < 0 || code.k > code.n) {
    issues.push_back({"k must lie in [0, n]", std::nullopt});
    return issues;
  }
  const auto n = static_cast<std::size_t>(code.n);
  const auto expected = static_cast<std::size_t>(code.n - code.k);
  if (code.generators.size() != expected) {
    issues.push_back({"expected " + std::to_string(expected) + " generators, found " +
                          std::to_string(code.generators.size()),
                      std::nullopt});
  }
  if (code.logical_x.size() != static_cast<std::size_t>(code.k) ||
      code.logical_z.size() != static_cast<std::size_t>(code.k)) {
    issues.push_back({"expected " + std::to_string(code.k) + " logical X and Z operators",
                      std::nullopt});
  }
  auto check_length = [&](const std::vector<PauliString>& ops, const char* what) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (ops[i].size() != n) {
        issues.push_back({std::string(what) + " " + std::to_string(i + 1) + " has length " +
                              std::to_string(ops[i].size()) + ", expected " + std::to_string(n),
                          std::nullopt});
      }
    }
  };
  check_length(code.generators, "generator");
  check_length(code.logical_x, "logical X");
  check_length(code.logical_z, "logical Z");
  if (!issues.empty()) return issues;

  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    if (!code.generators[i].is_hermitian()) {
      issues.push_back({"generator " + std::to_string(i + 1) + " has an imaginary phase",
                        std::nullopt});
    }
    for (std::size_t j = i + 1; j < code.generators.size(); ++j) {
      if (!commutes(code.generators[i], code.generators[j])) {
        issues.push_back({"generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " anticommute",
                          std::make_pair(static_cast<int>(i + 1), static_cast<int>(j + 1))});
      }
    }
  }
  if (gf2::rank(symplectic_matrix(code.generators, n)) != code.generators.size()) {
    issues.push_back({"generators are not independent", std::nullopt});
  }

  for (std::size_t i = 0; i < static_cast<std::size_t>(code.k); ++i) {
    for (std::size_t g = 0; g < code.generators.size(); ++g) {
      if (!commutes(code.logical_x[i], code.generators[g])) {
        issues.push_back({"logical X " + std::to_string(i + 1) + " anticommutes with generator " +
                              std::to_string(g + 1),
                          std::nullopt});
      }
      if (!commutes(code.logical_z[i], code.generators[g])) {
        issues.push_back({"logical Z " + std::to_string(i + 1) + " anticommutes with generator " +
                              std::to_string(g + 1),
                          std::nullopt});
      }
    }
    for (std::size_t j = 0; j < static_cast<std::size_t>(code.k); ++j) {
      const bool xz_commute = commutes(code.logical_x[i], code.logical_z[j]);
      if (i == j && xz_commute) {
        issues.push_back({"logical X and Z " + std::to_string(i + 1) + " commute", std::nullopt});
      }
      if (i != j && !xz_commute) {
        issues.push_back({"logical X " + std::to_string(i + 1) + " anticommutes with logical Z " +
                              std::to_string(j + 1),
                          std::nullopt});
      }
      if (j > i) {
        if (!commutes(code.logical_x[i], code.logical_x[j])) {
          issues.push_back({"logical X " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " anticommute",
                            std::nullopt});
        }
        if (!commutes(code.logical_z[i], code.logical_z[j])) {
          issues.push_back({"logical Z " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " anticommute",
                            std::nullopt});
        }
      }
    }
  }
  return issues;
}

// Projects onto the +1 (sign = +1) or -1 eigenspace of p.
Vector project(const PauliString& p, const Vector& v, int sign) {
  Vector pv = apply(p, v);
  return 0.5 * (v + static_cast<double>(sign) * pv);
}

std::vector<PureState> build_codewords(const StabilizerCode& code, int dense_limit) {
  const SystemLayout layout = SystemLayout::shares_only(code.n, dense_limit);
  const Eigen::Index dim = layout.dimension();
  const std::size_t count = std::size_t{1} << code.k;
  // Stabilizer amplitudes have modulus 2^{-r/2} with r <= n when nonzero.
  const double threshold = 0.5 * std::pow(2.0, -0.5 * code.n);

  std::vector<PureState> basis;
  basis.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    Vector found;
    for (Eigen::Index b = 0; b < dim && found.size() == 0; ++b) {
      Vector v = Vector::Zero(dim);
      v(b) = 1.0;
      for (const auto& g : code.generators) v = project(g, v, +1);
      for (int i = 0; i < code.k; ++i) {
        const bool bit = (j >> (code.k - 1 - i)) & 1u;
        v = project(code.logical_z[static_cast<std::size_t>(i)], v, bit ? -1 : +1);
      }
      if (v.norm() > threshold) found = v / v.norm();
    }
    if (found.size() == 0) {
      throw ValidationError("code '" + code.name + "': empty logical eigenspace for codeword " +
                            std::to_string(j));
    }
    for (Eigen::Index b = 0; b < dim; ++b) {
      if (std::abs(found(b)) > 1e-9) {
        found *= std::conj(found(b)) / std::abs(found(b));
        break;
      }
    }
    basis.emplace_back(layout, std::move(found));
  }
  return basis;
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issues[i].message;
  }
  return os.str();
}

ValidationReport validate(const StabilizerCode& code, int dense_limit) {
  ValidationReport report;
  report.issues = structural_issues(code);
  if (!report.ok() || code.n > dense_limit) return report;

  const auto basis = build_codewords(code, dense_limit);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a; b < basis.size(); ++b) {
      const Complex overlap = basis[a].amplitudes().dot(basis[b].amplitudes());
      const double expected = (a == b) ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > 1e-9) {
        report.issues.push_back({"codewords " + std::to_string(a) + " and " + std::to_string(b) +
                                     " are not orthonormal",
                                 std::nullopt});
      }
    }
    for (std::size_t g = 0; g < code.generators.size(); ++g) {
      const Vector gv = apply(code.generators[g], basis[a].amplitudes());
      if ((gv - basis[a].amplitudes()).norm() > 1e-9) {
        report.issues.push_back({"codeword " + std::to_string(a) + " is not stabilized by generator " +
                                     std::to_string(g + 1),
                                 std::nullopt});
      }
    }
  }
  return report;
}

std::vector<PureState> codeword_basis(const StabilizerCode& code, int dense_limit) {
  if (code.n > dense_limit) {
    throw CapacityError("code '" + code.name + "' has " + std::to_string(code.n) +
                        " qubits, above the dense limit of " + std::to_string(dense_limit));
  }
  const auto issues = structural_issues(code);
  if (!issues.empty()) {
    ValidationReport r{issues};
    throw ValidationError("invalid code '" + code.name + "': " + r.summary());
  }
  return build_codewords(code, dense_limit);
}

bool erasure_correctable(const StabilizerCode& code, ShareSet erased) {
  const auto n = static_cast<std::size_t>(code.n);
  for (int s : erased.members()) {
    if (s > code.n) {
      throw InputError("share " + std::to_string(s) + " out of range for code '" + code.name +
                       "' with n=" + std::to_string(code.n));
    }
  }
  const ShareSet kept = erased.complement(code.n);
  const gf2::BitMatrix g = symplectic_matrix(code.generators, n);
  const std::size_t in_erased = erased.empty() ? 0 : gf2::rank(g.select_columns(columns_for(erased.members(), n)));
  const std::size_t in_kept = kept.empty() ? 0 : gf2::rank(g.select_columns(columns_for(kept.members(), n)));
  // dim(normalizer restricted to K) = 2|K| - rank(G_K);
  // dim(stabilizer restricted to K) = (n-k) - rank(G_{K^c}).
  const std::size_t normalizer_dim = 2 * static_cast<std::size_t>(erased.size()) - in_erased;
  const std::size_t stabilizer_dim = code.generators.size() - in_kept;
  return normalizer_dim == stabilizer_dim;
}

std::vector<std::string> builtin_names() {
  return {"shor_9_1_3", "code_4_2_2", "code_6_4_2", "trivial_1_1"};
}

StabilizerCode builtin(const std::string& name) {
  auto paulis = [](std::initializer_list<const char*> texts) {
    std::vector<PauliString> out;
    for (const char* t : texts) out.push_back(PauliString::parse(t));
    return out;
  };
  if (name == "shor_9_1_3") {
    return {name, 9, 1, 3,
            paulis({"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII", "IIIIIIZZI", "IIIIIIIZZ",
                    "XXXXXXIII", "IIIXXXXXX"}),
            // The phase-flip structure swaps the usual roles: X^9 reads the
            // codeword sign, Z^9 flips between the two codewords.
            paulis({"ZZZZZZZZZ"}), paulis({"XXXXXXXXX"})};
  }
  if (name == "code_4_2_2") {
    // Codeword j is a pair of identical Bell states on (1,2) and (3,4).
    return {name, 4, 2, 2, paulis({"XXXX", "ZZZZ"}), paulis({"XIXI", "ZIZI"}),
            paulis({"ZZII", "XXII"})};
  }
  if (name == "code_6_4_2") {
    // Codeword (f,g) in base 4 is Bell(f) (x) Bell(g) (x) Bell(f xor g).
    return {name,
            6,
            4,
            2,
            paulis({"XXXXXX", "ZZZZZZ"}),
            paulis({"XIIIXI", "ZIIIZI", "IIXIIX", "IIZIIZ"}),
            paulis({"ZZIIII", "XXIIII", "IIZZII", "IIXXII"})};
  }
  if (name == "trivial_1_1") {
    return {name, 1, 1, 1, {}, paulis({"X"}), paulis({"Z"})};
  }
  throw LookupError("unknown built-in code '" + name + "'");
}

}  // namespace entshare
