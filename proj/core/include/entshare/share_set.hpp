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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace entshare {

/**
 * A set of player shares, numbered from 1 as in the share labels P1..Pn.
 * Backed by a bit mask, so at most 32 shares.
 */
class ShareSet {
 public:
  static constexpr int kMaxShares = 32;

  constexpr ShareSet() = default;
  constexpr explicit ShareSet(std::uint32_t mask) : mask_(mask) {}
  ShareSet(std::initializer_list<int> shares);

  static ShareSet from_members(const std::vector<int>& shares);
  static constexpr ShareSet all(int n) {
    return ShareSet(n >= kMaxShares ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int share) const { return ((mask_ >> (share - 1)) & 1u) != 0; }
  constexpr bool subset_of(ShareSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool disjoint(ShareSet other) const { return (mask_ & other.mask_) == 0; }

  ShareSet with(int share) const;
  ShareSet without(int share) const;
  constexpr ShareSet complement(int n) const { return ShareSet(all(n).mask_ & ~mask_); }

  /** Members in ascending order. */
  std::vector<int> members() const;

  /** "{1,2,4}" */
  std::string to_string() const;

  friend constexpr ShareSet operator|(ShareSet a, ShareSet b) { return ShareSet(a.mask_ | b.mask_); }
  friend constexpr ShareSet operator&(ShareSet a, ShareSet b) { return ShareSet(a.mask_ & b.mask_); }
  friend constexpr bool operator==(ShareSet, ShareSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/** Ascending size, then lexicographic on the sorted members. */
bool report_order(ShareSet a, ShareSet b);

/** All subsets of {1..n} in report order. */
std::vector<ShareSet> enumerate_subsets(int n);

}  // namespace entshare
