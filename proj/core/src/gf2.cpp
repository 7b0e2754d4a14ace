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

#include "entshare/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace entshare::gf2 {

void BitMatrix::append_row(const std::vector<std::uint8_t>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("gf2: row length mismatch");
  for (auto v : row) data_.push_back(v & 1u);
  ++rows_;
}

std::vector<std::uint8_t> BitMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

BitMatrix BitMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  BitMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

std::size_t rank(BitMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != rank && m(r, c) != 0) {
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) ^= m(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::uint8_t>> left_kernel(const BitMatrix& m) {
  // Row-reduce [M | I]; rows whose M part vanishes carry kernel vectors.
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BitMatrix aug(rows, cols + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols + r) = 1;
  }
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && aug(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(pivot, j), aug(lead, j));
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != lead && aug(r, c) != 0) {
        for (std::size_t j = 0; j < aug.cols(); ++j) aug(r, j) ^= aug(lead, j);
      }
    }
    ++lead;
  }
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t r = lead; r < rows; ++r) {
    std::vector<std::uint8_t> v(rows);
    for (std::size_t j = 0; j < rows; ++j) v[j] = aug(r, cols + j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint8_t> combine_rows(const BitMatrix& m, const std::vector<std::uint8_t>& c) {
  if (c.size() != m.rows()) throw std::invalid_argument("gf2: coefficient length mismatch");
  std::vector<std::uint8_t> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (c[r] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] ^= m(r, j);
  }
  return out;
}

}  // namespace entshare::gf2
