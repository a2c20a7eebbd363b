// Copyright 2026 The Centering Authors.
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

/// \file
/// Brute-force reference implementations for small carriers. They share no
/// code with the partial-order builders or with combine, and exist to be
/// compared against them.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "centering/core/errors.hpp"
#include "centering/core/types.hpp"
#include "centering/resolver/result.hpp"

namespace centering {

inline constexpr std::size_t kOracleReverseLimit = 5;
inline constexpr std::size_t kOracleCombineLimit = 4;

// Reversal by testing every ordered pair.
inline StrictPartialOrder oracle_reverse(const StrictPartialOrder &order) {
  if (order.size() > kOracleReverseLimit) {
    throw CarrierTooLarge("oracle_reverse handles at most 5 elements");
  }
  StrictPartialOrder::PairMap pairs;
  for (const EntityId &x : order.carrier()) {
    for (const EntityId &y : order.carrier()) {
      if (x != y && order.precedes(y, x)) pairs[{x, y}] = order.support(y, x);
    }
  }
  return StrictPartialOrder::FromClosedPairs(order.carrier(), std::move(pairs));
}

namespace detail {

using PairSet = std::set<std::pair<EntityId, EntityId>>;

// Depth-first search over the direct edges.
inline bool Reachable(const PairSet &edges, const EntityId &from, const EntityId &to) {
  std::vector<EntityId> stack{from};
  std::set<EntityId> seen{from};
  while (!stack.empty()) {
    EntityId at = stack.back();
    stack.pop_back();
    for (const auto &[a, b] : edges) {
      if (a != at) continue;
      if (b == to) return true;
      if (seen.insert(b).second) stack.push_back(b);
    }
  }
  return false;
}

}  // namespace detail

// Applies the override lattice to the raw pairs of each class, then returns
// the intersection of every linear ordering of the candidates that respects
// the surviving pairs. Support tags are not reproduced.
inline StrictPartialOrder oracle_combine(const std::vector<ClassConclusion> &conclusions,
                                         const EntitySet &candidates) {
  if (candidates.size() > kOracleCombineLimit) {
    throw CarrierTooLarge("oracle_combine handles at most 4 candidates");
  }
  detail::PairSet accepted;
  for (int rank = 0; rank < 3; ++rank) {
    detail::PairSet proposed;
    for (const ClassConclusion &c : conclusions) {
      if (static_cast<int>(c.cls) != rank) continue;
      for (const auto &[pair, s] : c.order.pairs()) proposed.insert(pair);
    }
    detail::PairSet survivors;
    for (const auto &[a, b] : proposed) {
      if (!detail::Reachable(accepted, b, a)) survivors.insert({a, b});
    }
    detail::PairSet both = accepted;
    both.insert(survivors.begin(), survivors.end());
    detail::PairSet added;
    for (const auto &[a, b] : survivors) {
      if (!detail::Reachable(both, b, a)) added.insert({a, b});
    }
    accepted.insert(added.begin(), added.end());
  }

  std::vector<EntityId> perm(candidates.begin(), candidates.end());
  std::map<std::pair<EntityId, EntityId>, int> before;
  int consistent = 0;
  do {
    std::map<EntityId, std::size_t> pos;
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    bool ok = std::all_of(accepted.begin(), accepted.end(),
                          [&](const auto &p) { return pos[p.first] < pos[p.second]; });
    if (!ok) continue;
    ++consistent;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) ++before[{perm[i], perm[j]}];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  StrictPartialOrder::PairMap pairs;
  for (const auto &[pair, n] : before) {
    if (n == consistent) pairs[pair] = SupportSet{};
  }
  return StrictPartialOrder::FromClosedPairs(candidates, std::move(pairs));
}

// Same pairs, ignoring support tags.
inline bool SamePairs(const StrictPartialOrder &a, const StrictPartialOrder &b) {
  if (a.carrier() != b.carrier() || a.pairs().size() != b.pairs().size()) return false;
  for (const auto &[pair, s] : a.pairs()) {
    if (!b.precedes(pair.first, pair.second)) return false;
  }
  return true;
}

}  // namespace centering
