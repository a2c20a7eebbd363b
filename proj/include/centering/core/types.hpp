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
/// Domain vocabulary: entities, mentions, logical forms, utterances and the
/// ground propositions they contribute to the discourse model.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "centering/core/errors.hpp"
#include "centering/core/partial_order.hpp"

namespace centering {

// Opaque entity identifier, unique within a discourse run.
struct EntityId {
  std::string value;

  EntityId() = default;
  explicit EntityId(std::string v) : value(std::move(v)) {}
  explicit EntityId(const char *v) : value(v) {}

  auto operator<=>(const EntityId &) const = default;
  bool operator==(const EntityId &) const = default;
};

inline std::ostream &operator<<(std::ostream &out, const EntityId &id) {
  return out << id.value;
}

using EntitySet = std::set<EntityId>;
using StrictPartialOrder = BasicStrictPartialOrder<EntityId>;

enum class Gender { kMasc, kFem, kNeut, kUnknown };
enum class Number { kSg, kPl };

struct Agreement {
  Gender gender = Gender::kUnknown;
  Number number = Number::kSg;
  int person = 3;

  bool operator==(const Agreement &) const = default;
};

// Sort tags used by the built-in filters.
inline constexpr const char *kPersonSort = "PERSON";
inline constexpr const char *kGroupSort = "GROUP";

struct Entity {
  EntityId id;
  std::string name;
  std::string sort;
  Agreement agreement;
  bool accommodated = false;
  std::vector<EntityId> members;  // GROUP only

  bool is_group() const { return sort == kGroupSort; }

  bool operator==(const Entity &) const = default;
};

// Throws BadAgreement if a GROUP entity is not plural.
inline void ValidateEntity(const Entity &e) {
  if (e.is_group() && e.agreement.number != Number::kPl) {
    throw BadAgreement("group entity " + e.id.value + " must be plural");
  }
  if (!e.is_group() && !e.members.empty()) {
    throw BadAgreement("only GROUP entities may list members (" + e.id.value +
                       ")");
  }
  if (e.agreement.person < 1 || e.agreement.person > 3) {
    throw BadAgreement("person of " + e.id.value + " must be 1, 2 or 3");
  }
}

// Nominal expression types, highest ranked first.
enum class MentionKind { kZeroPronominal, kPronoun, kDefiniteNp, kIndefiniteNp };

inline bool IsPronominal(MentionKind kind) {
  return kind == MentionKind::kZeroPronominal || kind == MentionKind::kPronoun;
}

// Grammatical functions, highest ranked first.
enum class GrammaticalFunction { kSubject = 0, kObject = 1, kObject2 = 2, kOther = 3 };

inline int Rank(GrammaticalFunction gf) { return static_cast<int>(gf); }

inline const char *GfName(GrammaticalFunction gf) {
  switch (gf) {
    case GrammaticalFunction::kSubject: return "Subj";
    case GrammaticalFunction::kObject: return "Obj";
    case GrammaticalFunction::kObject2: return "Obj2";
    case GrammaticalFunction::kOther: return "Other";
  }
  return "?";
}

// Role labels map onto grammatical functions; any unrecognised label (Loc,
// Obl, ...) lands in the "Others" bucket.
inline GrammaticalFunction GfForRole(const std::string &role) {
  if (role == "Subj") return GrammaticalFunction::kSubject;
  if (role == "Obj") return GrammaticalFunction::kObject;
  if (role == "Obj2") return GrammaticalFunction::kObject2;
  return GrammaticalFunction::kOther;
}

struct Mention {
  std::string surface;
  MentionKind kind = MentionKind::kDefiniteNp;
  bool stressed = false;
  GrammaticalFunction gf = GrammaticalFunction::kOther;
  Agreement agreement;
  std::optional<EntityId> referent;

  // A pronominal mention still waiting for its referent.
  bool needs_resolution() const {
    return IsPronominal(kind) && !referent.has_value();
  }

  bool operator==(const Mention &) const = default;
};

inline void ValidateMention(const Mention &m) {
  if (m.stressed && m.kind != MentionKind::kPronoun) {
    throw Error("only overt pronouns can be stressed: " + m.surface);
  }
  if (!IsPronominal(m.kind) && !m.referent) {
    throw UnresolvedMention("non-pronominal mention '" + m.surface +
                            "' has no referent");
  }
}

enum class Polarity { kPos, kNeg };

struct Argument {
  std::string role;
  Mention mention;

  bool operator==(const Argument &) const = default;
};

struct LogicalForm {
  std::string predicate;
  std::vector<Argument> args;
  Polarity polarity = Polarity::kPos;

  bool operator==(const LogicalForm &) const = default;

  bool resolved() const {
    return std::none_of(args.begin(), args.end(), [](const Argument &a) {
      return a.mention.needs_resolution();
    });
  }
};

// Each of Subj, Obj and Obj2 may appear at most once.
inline void ValidateLogicalForm(const LogicalForm &lf) {
  std::set<GrammaticalFunction> seen;
  for (const Argument &a : lf.args) {
    if (a.mention.gf == GrammaticalFunction::kOther) continue;
    if (!seen.insert(a.mention.gf).second) {
      throw Error(std::string("grammatical function ") + GfName(a.mention.gf) +
                  " appears twice in " + lf.predicate);
    }
  }
}

struct Utterance {
  std::size_t index = 1;
  std::string label;  // e.g. "U2"
  LogicalForm lf;
  bool segment_initial = false;
  std::optional<std::string> coherence;  // fixture-supplied relation label

  bool operator==(const Utterance &) const = default;
};

// Ground proposition. Arguments are entity ids in grammatical-function order
// (subject, object, object2); obliques are not arguments of the proposition.
struct Proposition {
  std::string predicate;
  std::vector<EntityId> args;
  Polarity polarity = Polarity::kPos;

  auto operator<=>(const Proposition &) const = default;
  bool operator==(const Proposition &) const = default;

  Proposition Negated() const {
    Proposition p = *this;
    p.polarity = polarity == Polarity::kPos ? Polarity::kNeg : Polarity::kPos;
    return p;
  }

  std::string ToString() const {
    std::string out = polarity == Polarity::kNeg ? "not " : "";
    out += predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i].value;
    }
    return out + ")";
  }
};

// Indices into lf.args of the core arguments, in grammatical-function order.
inline std::vector<std::size_t> CoreArgumentOrder(const LogicalForm &lf) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < lf.args.size(); ++i) {
    if (lf.args[i].mention.gf != GrammaticalFunction::kOther) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return Rank(lf.args[a].mention.gf) < Rank(lf.args[b].mention.gf);
  });
  return order;
}

// The proposition a fully resolved logical form asserts.
inline Proposition PropositionOf(const LogicalForm &lf) {
  Proposition p{lf.predicate, {}, lf.polarity};
  for (std::size_t i : CoreArgumentOrder(lf)) {
    const Mention &m = lf.args[i].mention;
    if (!m.referent) {
      throw UnresolvedMention("mention '" + m.surface + "' in " + lf.predicate +
                              " is unresolved");
    }
    p.args.push_back(*m.referent);
  }
  return p;
}

}  // namespace centering
