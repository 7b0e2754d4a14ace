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

#include "entshare/pauli.hpp"

#include <bit>

#include "entshare/error.hpp"

namespace entshare {
namespace {

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) {
    throw DimensionError("Pauli strings have different lengths: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

Complex i_power(unsigned k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct Masks {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
};

// Bit (n-1-q) holds qubit q, matching the big-endian basis index.
Masks masks_of(const PauliString& p) {
  Masks m;
  const std::size_t n = p.size();
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    if (p.x(q)) m.x |= bit;
    if (p.z(q)) m.z |= bit;
  }
  return m;
}

// Phase of P|b> = phase(b) |b ^ x>.
Complex basis_phase(const PauliString& p, const Masks& m, std::uint64_t b) {
  unsigned k = p.phase() + static_cast<unsigned>(std::popcount(m.x & m.z));
  if (std::popcount(m.z & b) % 2 != 0) k += 2;
  return i_power(k);
}

void require_dim(const PauliString& p, Eigen::Index dim) {
  if (p.size() >= 63 || (Eigen::Index{1} << p.size()) != dim) {
    throw DimensionError("Pauli string on " + std::to_string(p.size()) +
                         " qubits applied to dimension " + std::to_string(dim));
  }
}

}  // namespace

PauliString::PauliString(std::size_t n) : x_(n, false), z_(n, false) {}

PauliString::PauliString(std::vector<bool> x, std::vector<bool> z, unsigned phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase % 4) {
  if (x_.size() != z_.size()) {
    throw DimensionError("x and z bit vectors differ in length");
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::string_view rest = text;
  auto consume = [&rest](std::string_view prefix) {
    if (rest.substr(0, prefix.size()) == prefix) {
      rest.remove_prefix(prefix.size());
      return true;
    }
    return false;
  };
  bool negative = false;
  bool has_sign = consume("+");
  if (!has_sign && (consume("-") || consume("\xE2\x88\x92"))) {
    negative = true;
    has_sign = true;
  }
  // An unsigned leading 'i' falls through to the character check below.
  const bool imaginary = has_sign && consume("i");
  const unsigned phase = (negative ? 2u : 0u) + (imaginary ? 1u : 0u);

  std::vector<bool> x;
  std::vector<bool> z;
  x.reserve(rest.size());
  z.reserve(rest.size());
  for (char c : rest) {
    switch (c) {
      case 'I': x.push_back(false); z.push_back(false); break;
      case 'X': x.push_back(true); z.push_back(false); break;
      case 'Y': x.push_back(true); z.push_back(true); break;
      case 'Z': x.push_back(false); z.push_back(true); break;
      default:
        throw ParseError("invalid character '" + std::string(1, c) + "' in Pauli string '" +
                         std::string(text) + "'");
    }
  }
  if (x.empty()) throw ParseError("empty Pauli string '" + std::string(text) + "'");
  return PauliString(std::move(x), std::move(z), phase);
}

PauliString PauliString::single(std::size_t n, std::size_t q, char op) {
  if (q >= n) throw InputError("qubit index out of range");
  PauliString p(n);
  switch (op) {
    case 'I': break;
    case 'X': p.x_[q] = true; break;
    case 'Y': p.x_[q] = true; p.z_[q] = true; break;
    case 'Z': p.z_[q] = true; break;
    default: throw ParseError("invalid Pauli operator '" + std::string(1, op) + "'");
  }
  return p;
}

Complex PauliString::phase_value() const { return i_power(phase_); }

char PauliString::op(std::size_t q) const {
  if (x_[q]) return z_[q] ? 'Y' : 'X';
  return z_[q] ? 'Z' : 'I';
}

bool PauliString::is_identity() const {
  for (std::size_t q = 0; q < size(); ++q) {
    if (x_[q] || z_[q]) return false;
  }
  return true;
}

std::size_t PauliString::weight() const { return support().size(); }

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> s;
  for (std::size_t q = 0; q < size(); ++q) {
    if (x_[q] || z_[q]) s.push_back(q);
  }
  return s;
}

PauliString PauliString::inverse() const {
  // Each factor squares to identity, so only the phase inverts.
  return with_phase((4 - phase_) % 4);
}

PauliString PauliString::with_phase(unsigned phase) const {
  PauliString p = *this;
  p.phase_ = phase % 4;
  return p;
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[] = {"", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  for (std::size_t q = 0; q < size(); ++q) s.push_back(op(q));
  return s;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  std::vector<bool> x(n);
  std::vector<bool> z(n);
  // sigma(x,z) = i^{x.z} X^x Z^z, and Z^z1 X^x2 = (-1)^{z1.x2} X^x2 Z^z1.
  long k = static_cast<long>(a.phase()) + static_cast<long>(b.phase());
  for (std::size_t q = 0; q < n; ++q) {
    const bool x1 = a.x(q), z1 = a.z(q), x2 = b.x(q), z2 = b.z(q);
    x[q] = x1 != x2;
    z[q] = z1 != z2;
    k += (x1 && z1) + (x2 && z2) + 2 * (z1 && x2) - (x[q] && z[q]);
  }
  return PauliString(std::move(x), std::move(z), static_cast<unsigned>(((k % 4) + 4) % 4));
}

bool symplectic_product(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  bool parity = false;
  for (std::size_t q = 0; q < a.size(); ++q) {
    parity ^= (a.x(q) && b.z(q)) != (a.z(q) && b.x(q));
  }
  return parity;
}

bool commutes(const PauliString& a, const PauliString& b) { return !symplectic_product(a, b); }

Matrix to_dense(const PauliString& p, int dense_limit) {
  if (p.size() > static_cast<std::size_t>(dense_limit)) {
    throw CapacityError("Pauli string on " + std::to_string(p.size()) +
                        " qubits exceeds the dense limit of " + std::to_string(dense_limit));
  }
  const Eigen::Index dim = Eigen::Index{1} << p.size();
  const Masks m = masks_of(p);
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    out(static_cast<Eigen::Index>(ub ^ m.x), b) = basis_phase(p, m, ub);
  }
  return out;
}

Vector apply(const PauliString& p, const Vector& psi) {
  require_dim(p, psi.size());
  const Masks m = masks_of(p);
  Vector out(psi.size());
  for (Eigen::Index b = 0; b < psi.size(); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    out(static_cast<Eigen::Index>(ub ^ m.x)) = basis_phase(p, m, ub) * psi(b);
  }
  return out;
}

Matrix conjugate(const PauliString& p, const Matrix& rho) {
  require_dim(p, rho.rows());
  require_dim(p, rho.cols());
  const Masks m = masks_of(p);
  const Eigen::Index dim = rho.rows();
  Matrix out(dim, dim);
  // Global phases cancel; only the (-1)^{z.b} signs survive.
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto uc = static_cast<std::uint64_t>(c);
    const int sc = std::popcount(m.z & uc) % 2;
    for (Eigen::Index r = 0; r < dim; ++r) {
      const auto ur = static_cast<std::uint64_t>(r);
      const int sr = std::popcount(m.z & ur) % 2;
      const Complex v = rho(r, c);
      out(static_cast<Eigen::Index>(ur ^ m.x), static_cast<Eigen::Index>(uc ^ m.x)) =
          (sr == sc) ? v : -v;
    }
  }
  return out;
}

PauliString embed(const PauliString& p, std::size_t n, const std::vector<std::size_t>& positions) {
  if (positions.size() != p.size()) {
    throw DimensionError("embedding needs one position per qubit");
  }
  std::vector<bool> x(n, false);
  std::vector<bool> z(n, false);
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (positions[q] >= n) throw InputError("embedding position out of range");
    x[positions[q]] = p.x(q);
    z[positions[q]] = p.z(q);
  }
  return PauliString(std::move(x), std::move(z), p.phase());
}

}  // namespace entshare
