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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace entshare::gf2 {

/** Dense matrix over GF(2), one byte per entry. Sizes here are tiny. */
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  void append_row(const std::vector<std::uint8_t>& row);
  std::vector<std::uint8_t> row(std::size_t r) const;

  /** Sub-matrix built from the listed columns, in order. */
  BitMatrix select_columns(const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

std::size_t rank(BitMatrix m);

/**
 * Basis of the left null space { c : c^T M = 0 }, each vector of length
 * m.rows().
 */
std::vector<std::vector<std::uint8_t>> left_kernel(const BitMatrix& m);

/** Row combination sum_i c_i * row_i. */
std::vector<std::uint8_t> combine_rows(const BitMatrix& m, const std::vector<std::uint8_t>& c);

}  // namespace entshare::gf2
