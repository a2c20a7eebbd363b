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
/// Single-step defeasible derivation over the discourse model, and the
/// commonsense (WK) preference class built on it.
///
/// A goal is derivable when it is asserted, or when one rule instance has an
/// asserted antecedent and a consequent matching the goal. Rules do not chain
/// and never defeat each other.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "centering/core/types.hpp"
#include "centering/knowledge/model.hpp"
#include "centering/knowledge/rules.hpp"

namespace centering {

enum class DerivationStatus { kAsserted, kDefeasiblyDerived, kUnderivable };

inline const char *StatusName(DerivationStatus s) {
  switch (s) {
    case DerivationStatus::kAsserted: return "asserted";
    case DerivationStatus::kDefeasiblyDerived: return "defeasibly-derived";
    case DerivationStatus::kUnderivable: return "underivable";
  }
  return "?";
}

using Binding = std::map<std::string, EntityId>;

struct Derivation {
  Proposition goal;
  DerivationStatus status = DerivationStatus::kUnderivable;
  std::optional<std::string> via;  // rule id
  Binding binding;
  std::optional<Proposition> premise;

  bool supported() const { return status != DerivationStatus::kUnderivable; }

  bool operator==(const Derivation &) const = default;

  std::string ToString() const {
    std::string out = goal.ToString() + " " + StatusName(status);
    if (via) out += " via " + *via;
    if (premise) out += " from " + premise->ToString();
    return out;
  }
};

// A proposition with some argument slots left open. An open slot matches any
// entity.
struct PropositionPattern {
  std::string predicate;
  std::vector<std::optional<EntityId>> args;
  Polarity polarity = Polarity::kPos;

  bool operator==(const PropositionPattern &) const = default;

  static PropositionPattern Of(const Proposition &p) {
    PropositionPattern pattern{p.predicate, {}, p.polarity};
    for (const EntityId &a : p.args) pattern.args.emplace_back(a);
    return pattern;
  }

  PropositionPattern With(std::size_t slot, const EntityId &value) const {
    PropositionPattern out = *this;
    out.args.at(slot) = value;
    return out;
  }

  bool ground() const {
    for (const auto &a : args) {
      if (!a) return false;
    }
    return true;
  }

  std::string ToString() const {
    std::string out = polarity == Polarity::kNeg ? "not " : "";
    out += predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i] ? args[i]->value : "_";
    }
    return out + ")";
  }
};

namespace detail {

inline bool MatchesPattern(const RuleSet &rules, const PropositionPattern &pattern,
                           const Proposition &p) {
  if (p.polarity != pattern.polarity || p.args.size() != pattern.args.size() ||
      !rules.SamePredicate(p.predicate, pattern.predicate)) {
    return false;
  }
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (pattern.args[i] && *pattern.args[i] != p.args[i]) return false;
  }
  return true;
}

// Extends `binding` so that `atom` matches the ground proposition.
inline bool Unify(const RuleSet &rules, const Atom &atom, const Proposition &p,
                  Binding &binding) {
  if (p.polarity != Polarity::kPos || atom.args.size() != p.args.size() ||
      !rules.SamePredicate(atom.predicate, p.predicate)) {
    return false;
  }
  for (std::size_t i = 0; i < atom.args.size(); ++i) {
    const Term &t = atom.args[i];
    if (!t.variable) {
      if (t.name != p.args[i].value) return false;
      continue;
    }
    auto [it, inserted] = binding.emplace(t.name, p.args[i]);
    if (!inserted && it->second != p.args[i]) return false;
  }
  return true;
}

inline Proposition Instantiate(const Atom &atom, const Binding &binding) {
  Proposition p{atom.predicate, {}, Polarity::kPos};
  for (const Term &t : atom.args) {
    p.args.push_back(t.variable ? binding.at(t.name) : EntityId(t.name));
  }
  return p;
}

}  // namespace detail

// Derives some instance of `pattern`. The first asserted match wins, then the
// first rule instance in rule order.
inline Derivation derive_pattern(const DiscourseModel &model, const RuleSet &rules,
                                 const PropositionPattern &pattern) {
  Derivation d;
  d.goal = Proposition{pattern.predicate, {}, pattern.polarity};
  for (const auto &a : pattern.args) d.goal.args.push_back(a.value_or(EntityId("_")));

  const std::vector<Proposition> asserted = model.AssertedPropositions();
  for (const Proposition &fact : asserted) {
    if (detail::MatchesPattern(rules, pattern, fact)) {
      d.goal = fact;
      d.status = DerivationStatus::kAsserted;
      return d;
    }
  }
  // Rules only conclude positive consequents.
  if (pattern.polarity != Polarity::kPos) return d;

  std::vector<DefeasibleRule> all_rules = rules.rules();
  for (const DefeasibleRule &r : model.AccommodatedRules()) all_rules.push_back(r);
  for (const DefeasibleRule &rule : all_rules) {
    for (const Proposition &fact : asserted) {
      Binding binding;
      if (!detail::Unify(rules, rule.antecedent, fact, binding)) continue;
      Proposition conclusion = detail::Instantiate(rule.consequent, binding);
      if (!detail::MatchesPattern(rules, pattern, conclusion)) continue;
      d.goal = conclusion;
      d.status = DerivationStatus::kDefeasiblyDerived;
      d.via = rule.id;
      d.binding = std::move(binding);
      d.premise = fact;
      return d;
    }
  }
  return d;
}

inline Derivation derive(const DiscourseModel &model, const RuleSet &rules,
                         const Proposition &goal) {
  Derivation d = derive_pattern(model, rules, PropositionPattern::Of(goal));
  d.goal = goal;
  return d;
}

// WK conclusion together with the derivations behind it.
struct WkAssessment {
  StrictPartialOrder order;
  std::map<EntityId, Derivation> derivations;
  std::string note;
};

// Fills `hole` with each candidate in turn. A candidate whose instance is
// supported is preferred over every candidate whose instance is not.
inline WkAssessment AssessWk(const EntitySet &candidates,
                             const PropositionPattern &content, std::size_t hole,
                             const DiscourseModel &model, const RuleSet &rules) {
  WkAssessment out;
  out.order = StrictPartialOrder(candidates);
  std::vector<EntityId> supported;
  std::vector<EntityId> unsupported;
  for (const EntityId &x : candidates) {
    Derivation d = derive_pattern(model, rules, content.With(hole, x));
    (d.supported() ? supported : unsupported).push_back(x);
    out.derivations.emplace(x, std::move(d));
  }
  for (const EntityId &x : supported) {
    for (const EntityId &y : unsupported) {
      out.order = out.order.WithPair(x, y, {PreferenceClass::kWK});
    }
  }
  if (supported.empty()) {
    out.note = "no candidate instance of " + content.ToString() + " is derivable";
  } else if (unsupported.empty()) {
    out.note = "every candidate instance of " + content.ToString() +
               " is derivable; WK does not distinguish them";
  } else {
    out.note = "derivable for";
    for (const EntityId &x : supported) out.note += " " + x.value;
  }
  return out;
}

inline StrictPartialOrder wk_preference(const EntitySet &candidates,
                                        const PropositionPattern &content,
                                        std::size_t hole,
                                        const DiscourseModel &model,
                                        const RuleSet &rules) {
  return AssessWk(candidates, content, hole, model, rules).order;
}

}  // namespace centering
