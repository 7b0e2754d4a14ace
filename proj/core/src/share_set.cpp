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

#include "entshare/share_set.hpp"

#include <algorithm>

#include "entshare/error.hpp"

namespace entshare {
namespace {

void check_share(int share) {
  if (share < 1 || share > ShareSet::kMaxShares) {
    throw InputError("share index " + std::to_string(share) + " out of range");
  }
}

}  // namespace

ShareSet::ShareSet(std::initializer_list<int> shares) {
  for (int s : shares) {
    check_share(s);
    mask_ |= std::uint32_t{1} << (s - 1);
  }
}

ShareSet ShareSet::from_members(const std::vector<int>& shares) {
  ShareSet out;
  for (int s : shares) out = out.with(s);
  return out;
}

ShareSet ShareSet::with(int share) const {
  check_share(share);
  return ShareSet(mask_ | (std::uint32_t{1} << (share - 1)));
}

ShareSet ShareSet::without(int share) const {
  check_share(share);
  return ShareSet(mask_ & ~(std::uint32_t{1} << (share - 1)));
}

std::vector<int> ShareSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < kMaxShares; ++i) {
    if ((mask_ >> i) & 1u) out.push_back(i + 1);
  }
  return out;
}

std::string ShareSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int m : members()) {
    if (!first) s += ",";
    s += std::to_string(m);
    first = false;
  }
  return s + "}";
}

bool report_order(ShareSet a, ShareSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

std::vector<ShareSet> enumerate_subsets(int n) {
  if (n < 0 || n > 20) throw CapacityError("subset enumeration limited to 20 shares");
  std::vector<ShareSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end(), report_order);
  return out;
}

}  // namespace entshare
