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
/// Strict partial orders over a finite carrier, stored transitively closed.
///
/// Salience orders and preference orders share this representation. Every
/// pair additionally carries the set of preference classes that support it,
/// which lets the resolver tell an ordinary preference from one backed only
/// by parallelism. Salience orders leave the support empty.

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "centering/core/errors.hpp"

namespace centering {

// The three defeasible preference classes. Declaration order is the override
// order: a class can override every class declared after it.
enum class PreferenceClass : std::uint8_t { kWK = 0, kATT = 1, kLF = 2 };

inline const char *ClassName(PreferenceClass c) {
  switch (c) {
    case PreferenceClass::kWK: return "WK";
    case PreferenceClass::kATT: return "ATT";
    case PreferenceClass::kLF: return "LF";
  }
  return "?";
}

// Small bit set of preference classes.
class SupportSet {
 public:
  constexpr SupportSet() = default;
  constexpr SupportSet(std::initializer_list<PreferenceClass> classes) {
    for (PreferenceClass c : classes) bits_ |= Bit(c);
  }

  constexpr bool contains(PreferenceClass c) const { return bits_ & Bit(c); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr SupportSet operator|(SupportSet other) const {
    SupportSet result;
    result.bits_ = bits_ | other.bits_;
    return result;
  }
  constexpr SupportSet &operator|=(SupportSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  constexpr bool operator==(const SupportSet &) const = default;

  std::string ToString() const {
    std::string out;
    for (PreferenceClass c :
         {PreferenceClass::kWK, PreferenceClass::kATT, PreferenceClass::kLF}) {
      if (!contains(c)) continue;
      if (!out.empty()) out += "+";
      out += ClassName(c);
    }
    return out;
  }

 private:
  static constexpr std::uint8_t Bit(PreferenceClass c) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
  }

  std::uint8_t bits_ = 0;
};

// A strict partial order. The pair (x, y) reads "x outranks y" (more salient,
// or preferred over). Values are immutable; every mutation returns a copy.
template <typename Id>
class BasicStrictPartialOrder {
 public:
  using Pair = std::pair<Id, Id>;
  using PairMap = std::map<Pair, SupportSet>;

  BasicStrictPartialOrder() = default;
  explicit BasicStrictPartialOrder(std::set<Id> carrier)
      : carrier_(std::move(carrier)) {}

  // Builds an order from pairs that are already transitively closed. Throws
  // if the pairs are not closed, reflexive, cyclic, or mention an element
  // outside the carrier. Used by code that computes closures independently.
  static BasicStrictPartialOrder FromClosedPairs(std::set<Id> carrier,
                                                 PairMap pairs) {
    BasicStrictPartialOrder order(std::move(carrier));
    for (const auto &[pair, support] : pairs) {
      if (!order.carrier_.count(pair.first) ||
          !order.carrier_.count(pair.second)) {
        throw UnknownEntity("pair mentions an element outside the carrier");
      }
      if (pair.first == pair.second) throw CycleError("reflexive pair");
      if (pairs.count({pair.second, pair.first})) {
        throw CycleError("antisymmetry violated");
      }
    }
    for (const auto &[ab, s1] : pairs) {
      for (const auto &[cd, s2] : pairs) {
        if (ab.second == cd.first && !pairs.count({ab.first, cd.second})) {
          throw CycleError("pairs are not transitively closed");
        }
      }
    }
    order.pairs_ = std::move(pairs);
    return order;
  }

  const std::set<Id> &carrier() const { return carrier_; }
  const PairMap &pairs() const { return pairs_; }
  bool empty() const { return carrier_.empty(); }
  std::size_t size() const { return carrier_.size(); }

  bool precedes(const Id &x, const Id &y) const {
    return pairs_.count({x, y}) > 0;
  }

  bool comparable(const Id &x, const Id &y) const {
    return precedes(x, y) || precedes(y, x);
  }

  // Support of (x, y); empty when the pair is absent.
  SupportSet support(const Id &x, const Id &y) const {
    auto it = pairs_.find({x, y});
    return it == pairs_.end() ? SupportSet{} : it->second;
  }

  // Adds an element with no relations to anything.
  BasicStrictPartialOrder WithElement(const Id &x) const {
    BasicStrictPartialOrder result = *this;
    result.carrier_.insert(x);
    return result;
  }

  // Adds (x, y) and every pair it induces by transitivity. The support of an
  // induced pair (a, b) through a >= x > y >= b is the union of the supports
  // along that path.
  BasicStrictPartialOrder WithPair(const Id &x, const Id &y,
                                   SupportSet support = {}) const {
    if (!carrier_.count(x) || !carrier_.count(y)) {
      throw UnknownEntity("pair (" + Describe(x) + ", " + Describe(y) +
                          ") mentions an element outside the carrier");
    }
    if (x == y) throw CycleError("reflexive pair " + Describe(x));
    if (precedes(y, x)) {
      throw CycleError("adding " + Describe(x) + " > " + Describe(y) +
                       " would create a cycle");
    }

    // Elements at or above x, and at or below y, with the support of the
    // path connecting them.
    std::vector<std::pair<Id, SupportSet>> above{{x, SupportSet{}}};
    std::vector<std::pair<Id, SupportSet>> below{{y, SupportSet{}}};
    for (const auto &[pair, s] : pairs_) {
      if (pair.second == x) above.emplace_back(pair.first, s);
      if (pair.first == y) below.emplace_back(pair.second, s);
    }

    BasicStrictPartialOrder result = *this;
    for (const auto &[a, sa] : above) {
      for (const auto &[b, sb] : below) {
        result.pairs_[{a, b}] |= sa | support | sb;
      }
    }
    return result;
  }

  // Every (x, y) becomes (y, x); support travels with the pair.
  BasicStrictPartialOrder Reversed() const {
    BasicStrictPartialOrder result(carrier_);
    for (const auto &[pair, s] : pairs_) {
      result.pairs_.emplace(Pair{pair.second, pair.first}, s);
    }
    return result;
  }

  // Elements that nothing outranks.
  std::set<Id> Maximal() const {
    if (carrier_.empty()) throw EmptyCarrier("maximal of an empty order");
    std::set<Id> result = carrier_;
    for (const auto &[pair, s] : pairs_) result.erase(pair.second);
    return result;
  }

  BasicStrictPartialOrder Restricted(const std::set<Id> &subset) const {
    for (const Id &x : subset) {
      if (!carrier_.count(x)) {
        throw NotASubset(Describe(x) + " is not in the carrier");
      }
    }
    BasicStrictPartialOrder result(subset);
    for (const auto &[pair, s] : pairs_) {
      if (subset.count(pair.first) && subset.count(pair.second)) {
        result.pairs_.emplace(pair, s);
      }
    }
    return result;
  }

  // Same carrier, every support tag replaced by `support`.
  BasicStrictPartialOrder Retagged(SupportSet support) const {
    BasicStrictPartialOrder result = *this;
    for (auto &[pair, s] : result.pairs_) s = support;
    return result;
  }

  // Pairs not implied by any other pair (the Hasse diagram).
  std::vector<Pair> CoveringPairs() const {
    std::vector<Pair> result;
    for (const auto &[pair, s] : pairs_) {
      bool covered = false;
      for (const Id &z : carrier_) {
        if (precedes(pair.first, z) && precedes(z, pair.second)) {
          covered = true;
          break;
        }
      }
      if (!covered) result.push_back(pair);
    }
    return result;
  }

  bool operator==(const BasicStrictPartialOrder &) const = default;

 private:
  static std::string Describe(const Id &x) {
    std::ostringstream out;
    out << x;
    return out.str();
  }

  std::set<Id> carrier_;
  PairMap pairs_;
};

// Free-function spellings of the order algebra.

template <typename Id>
BasicStrictPartialOrder<Id> add_pair(const BasicStrictPartialOrder<Id> &order,
                                     const Id &x, const Id &y,
                                     SupportSet support = {}) {
  return order.WithPair(x, y, support);
}

template <typename Id>
BasicStrictPartialOrder<Id> reverse(const BasicStrictPartialOrder<Id> &order) {
  return order.Reversed();
}

template <typename Id>
std::set<Id> maximal(const BasicStrictPartialOrder<Id> &order) {
  return order.Maximal();
}

template <typename Id>
BasicStrictPartialOrder<Id> restrict(const BasicStrictPartialOrder<Id> &order,
                                     const std::set<Id> &subset) {
  return order.Restricted(subset);
}

}  // namespace centering
