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
/// Stressed pronoun resolution.
///
/// A stressed pronoun draws its values from the same candidates as its
/// unstressed counterpart and takes the complementary preference: every
/// base-preference pair is reversed, incomparable pairs stay incomparable.
/// The focus constraint on the utterance must then be discharged, by a
/// contrasting proposition about another candidate, by a contrasting
/// individual elsewhere in the local attentional state, or by accommodating
/// a question. Failing all three the stressed pronoun is infelicitous.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centering/attention/attention.hpp"
#include "centering/core/types.hpp"
#include "centering/knowledge/derive.hpp"
#include "centering/knowledge/model.hpp"
#include "centering/resolver/resolver.hpp"
#include "centering/resolver/result.hpp"

namespace centering {

struct DischargeOptions {
  // Number of anonymous individuals accommodated along with a question.
  int accommodated_entity_count = 1;
  // Label used to name accommodated bridging rules.
  std::string label = "U";
};

enum class FocusScope { kPhrase, kUtterance };

struct FocusSlot {
  std::size_t slot = 0;    // position in the pattern
  EntitySet alternatives;  // F
};

// The utterance proposition with every focused position abstracted.
struct FocusConstraint {
  FocusScope scope = FocusScope::kUtterance;
  PropositionPattern pattern;
  std::vector<FocusSlot> foci;
};

namespace detail {

inline std::string VariableName(std::size_t i) {
  static const char *kNames[] = {"X", "Y", "Z", "W", "V", "U"};
  return i < 6 ? kNames[i] : "X" + std::to_string(i);
}

// A bridging rule from `premise` to `goal`, generalizing entities to
// variables. Requires every argument of `goal` to occur in `premise`.
inline std::optional<DefeasibleRule> BridgeRule(const Proposition &premise,
                                                const Proposition &goal,
                                                const std::string &id) {
  std::vector<EntityId> order;
  for (const EntityId &a : premise.args) {
    if (std::find(order.begin(), order.end(), a) == order.end()) order.push_back(a);
  }
  auto var_of = [&](const EntityId &e) -> std::optional<Term> {
    auto it = std::find(order.begin(), order.end(), e);
    if (it == order.end()) return std::nullopt;
    return Term{true, VariableName(static_cast<std::size_t>(it - order.begin()))};
  };
  DefeasibleRule rule;
  rule.id = id;
  rule.kind = RuleKind::kBridging;
  rule.antecedent.predicate = premise.predicate;
  for (const EntityId &a : premise.args) rule.antecedent.args.push_back(*var_of(a));
  rule.consequent.predicate = goal.predicate;
  for (const EntityId &a : goal.args) {
    auto t = var_of(a);
    if (!t) return std::nullopt;
    rule.consequent.args.push_back(*t);
  }
  return rule;
}

inline Proposition Ground(const PropositionPattern &p) {
  Proposition out{p.predicate, {}, p.polarity};
  for (const auto &a : p.args) out.args.push_back(a.value_or(EntityId("_")));
  return out;
}

inline PropositionPattern Fill(PropositionPattern pattern,
                               const std::vector<FocusSlot> &foci,
                               const std::vector<EntityId> &values) {
  for (std::size_t i = 0; i < foci.size(); ++i) pattern.args.at(foci[i].slot) = values[i];
  return pattern;
}

// Assignments of alternatives to the focused slots other than `chosen`, with
// pairwise distinct referents across all filled slots.
inline std::vector<std::vector<EntityId>> AlternativeAssignments(
    const FocusConstraint &c, const std::vector<EntityId> &chosen) {
  std::vector<std::vector<EntityId>> out;
  std::vector<EntityId> current;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == c.foci.size()) {
      if (current != chosen) out.push_back(current);
      return;
    }
    for (const EntityId &x : c.foci[i].alternatives) {
      if (std::find(current.begin(), current.end(), x) != current.end()) continue;
      bool clash = false;
      for (std::size_t s = 0; s < c.pattern.args.size(); ++s) {
        bool focused = std::any_of(c.foci.begin(), c.foci.end(),
                                   [&](const FocusSlot &f) { return f.slot == s; });
        if (!focused && c.pattern.args[s] == x) clash = true;
      }
      if (clash) continue;
      current.push_back(x);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

}  // namespace detail

// Discharges the focus constraint given the chosen values, one per focus.
// Sources are tried in order; the first that succeeds wins:
//   (a) a contrasting proposition about another candidate is asserted or
//       derivable, possibly after accommodating a bridging rule from an
//       asserted proposition that involves all of its participants;
//   (b) the local attentional state holds a non-candidate of the chosen
//       referent's sort: accommodate the negated proposition about it;
//   (c) the local attentional state holds no other individual of that sort:
//       accommodate the question and a set of individuals;
//   (d) otherwise the constraint cannot be discharged.
inline DischargeOutcome discharge(const FocusConstraint &constraint,
                                  const std::vector<EntityId> &chosen,
                                  const Context &ctx, const RuleSet &rules,
                                  const DischargeOptions &options = {}) {
  if (chosen.size() != constraint.foci.size()) {
    throw Error("discharge needs one chosen value per focus");
  }
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (!constraint.foci[i].alternatives.count(chosen[i])) {
      throw Error(chosen[i].value + " is not among its focus alternatives");
    }
  }
  DischargeOutcome out;
  const EntitySet local = local_state(ctx).first;

  // (a) contrast within the candidates.
  const auto alternatives = detail::AlternativeAssignments(constraint, chosen);
  for (const auto &alt : alternatives) {
    PropositionPattern p = detail::Fill(constraint.pattern, constraint.foci, alt);
    for (const PropositionPattern &q : {p, PropositionPattern{p.predicate, p.args,
                                                             p.polarity == Polarity::kPos
                                                                 ? Polarity::kNeg
                                                                 : Polarity::kPos}}) {
      Derivation d = derive_pattern(ctx.model, rules, q);
      if (!d.supported()) continue;
      out.status = DischargeStatus::kContrastInCandidates;
      out.contrasting_proposition = d.goal;
      out.support = d;
      for (const FocusSlot &f : constraint.foci) {
        out.alternatives.insert(f.alternatives.begin(), f.alternatives.end());
      }
      out.note = "contrast " + d.ToString();
      return out;
    }
  }
  for (const auto &alt : alternatives) {
    PropositionPattern p = detail::Fill(constraint.pattern, constraint.foci, alt);
    if (!p.ground() || p.polarity != Polarity::kPos) continue;
    const Proposition goal = detail::Ground(p);
    for (const Proposition &fact : ctx.model.facts) {
      if (fact.polarity != Polarity::kPos ||
          rules.SamePredicate(fact.predicate, goal.predicate)) {
        continue;
      }
      auto rule = detail::BridgeRule(fact, goal, "BRIDGE-" + options.label);
      if (!rule) continue;
      BridgingRecord record{*rule};
      DiscourseModel extended = accommodate(ctx.model, record);
      Derivation d = derive(extended, rules, goal);
      if (!d.supported()) continue;
      out.status = DischargeStatus::kContrastInCandidates;
      out.contrasting_proposition = goal;
      out.support = d;
      out.accommodations.push_back(record);
      for (const FocusSlot &f : constraint.foci) {
        out.alternatives.insert(f.alternatives.begin(), f.alternatives.end());
      }
      out.note = "contrast " + d.ToString() + " after accommodating " +
                 rule->ToString();
      return out;
    }
  }

  // (b) contrasting individuals elsewhere in the local attentional state.
  for (std::size_t i = 0; i < constraint.foci.size(); ++i) {
    const FocusSlot &focus = constraint.foci[i];
    const std::string &sort = ctx.model.entity(chosen[i]).sort;
    std::vector<EntityId> contrast;
    for (const EntityId &y : local) {
      if (focus.alternatives.count(y) || y == chosen[i]) continue;
      const Entity &e = ctx.model.entity(y);
      if (e.sort == sort && !e.accommodated) contrast.push_back(y);
    }
    if (contrast.empty()) continue;
    out.status = DischargeStatus::kContrastInLocal;
    out.alternatives = focus.alternatives;
    for (const EntityId &y : contrast) {
      std::vector<EntityId> values = chosen;
      values[i] = y;
      Proposition p = detail::Ground(
          detail::Fill(constraint.pattern, constraint.foci, values)).Negated();
      if (!out.contrasting_proposition) out.contrasting_proposition = p;
      out.accommodations.push_back(ContrastRecord{p});
      out.alternatives.insert(y);
    }
    out.note = "contrasting individual(s) in the local attentional state";
    return out;
  }

  // (c) no same-sort individual at all: accommodate a question.
  for (std::size_t i = 0; i < constraint.foci.size(); ++i) {
    const std::string &sort = ctx.model.entity(chosen[i]).sort;
    bool found = std::any_of(local.begin(), local.end(), [&](const EntityId &y) {
      return y != chosen[i] && ctx.model.entity(y).sort == sort;
    });
    if (found) continue;
    QuestionRecord question{constraint.pattern.predicate, {},
                            constraint.pattern.polarity};
    std::vector<EntityId> values = chosen;
    PropositionPattern filled = detail::Fill(constraint.pattern, constraint.foci, values);
    question.args = filled.args;
    question.args.at(constraint.foci[i].slot).reset();

    EntitySetRecord people;
    int next = 1;
    std::string base = "someone";
    for (int k = 0; k < options.accommodated_entity_count; ++k) {
      EntityId id;
      do {
        id = EntityId(base + "-" + std::to_string(next++));
      } while (ctx.model.has_entity(id));
      Entity e;
      e.id = id;
      e.name = base;
      e.sort = sort;
      e.accommodated = true;
      people.entities.push_back(std::move(e));
    }
    out.status = DischargeStatus::kAccommodatedQuestion;
    out.alternatives = {chosen[i]};
    for (const Entity &e : people.entities) out.alternatives.insert(e.id);
    out.accommodations.push_back(question);
    out.accommodations.push_back(std::move(people));
    out.note = "no contrasting " + sort + " in the local attentional state";
    return out;
  }

  out.status = DischargeStatus::kInfelicitous;
  for (const FocusSlot &f : constraint.foci) {
    out.alternatives.insert(f.alternatives.begin(), f.alternatives.end());
  }
  out.note = "no derivable contrast and no accommodation source";
  return out;
}

// Single-focus form.
inline DischargeOutcome discharge(const FocusConstraint &constraint,
                                  const EntityId &chosen, const Context &ctx,
                                  const RuleSet &rules,
                                  const DischargeOptions &options = {}) {
  return discharge(constraint, std::vector<EntityId>{chosen}, ctx, rules, options);
}

// Steps 1-3: locate, base preference of the unstressed counterpart, reversal.
inline ResolutionResult StressedPreference(const PronounSite &site,
                                           const Context &ctx,
                                           const RuleSet &rules) {
  if (!site.pronoun().stressed) {
    throw Error("resolve_stressed called on unstressed pronoun at " +
                site.position());
  }
  BaseComputation b = ComputeBase(site, ctx, rules);
  ResolutionResult r;
  r.position = site.position();
  r.pronoun = site.pronoun();
  r.local = b.selection.local;
  r.candidates = b.selection.candidates;
  r.excluded = b.selection.excluded;
  r.base = b.base;
  r.final_order = reverse(b.base.order);
  r.value = r.final_order.Maximal();
  r.trace = b.trace;
  r.trace.push_back({"CPH-REVERSE", detail::JoinPairs(b.base.order) + " => " +
                                        detail::JoinPairs(r.final_order)});
  AddCoherence(site, b, r.value, r.trace);
  r.felicity = r.value.size() > 1 ? Felicity::kAmbiguous : Felicity::kOk;
  return r;
}

inline void ApplyDischarge(ResolutionResult &r, const DischargeOutcome &d) {
  r.discharge = d;
  r.trace.push_back({"DISCHARGE", std::string(DischargeName(d.status)) + ": " + d.note});
  for (const AccommodationRecord &a : d.accommodations) {
    r.trace.push_back({"ACCOMMODATE", Describe(a)});
  }
  if (d.status == DischargeStatus::kInfelicitous) r.felicity = Felicity::kInfelicitous;
}

inline void FinishStressed(ResolutionResult &r) {
  if (!r.discharge && r.value.size() > 1) {
    r.trace.push_back({"DISCHARGE", "skipped: indeterminate value"});
  }
  r.trace.push_back({"VALUE", detail::Join(r.value) + " " + FelicityName(r.felicity)});
}

// The constraint for the focused sites of one utterance. `values` holds the
// chosen referent of each site. Sites outside the core arguments have no
// slot and are skipped.
inline std::optional<FocusConstraint> BuildConstraint(
    const Utterance &utterance, const std::vector<std::size_t> &focused_args,
    const std::vector<EntitySet> &alternatives) {
  FocusConstraint c;
  c.scope = FocusScope::kUtterance;
  c.pattern = PropositionPattern{utterance.lf.predicate, {}, utterance.lf.polarity};
  const auto core = CoreArgumentOrder(utterance.lf);
  for (std::size_t i : core) c.pattern.args.push_back(utterance.lf.args[i].mention.referent);
  for (std::size_t f = 0; f < focused_args.size(); ++f) {
    auto it = std::find(core.begin(), core.end(), focused_args[f]);
    if (it == core.end()) continue;
    std::size_t slot = static_cast<std::size_t>(it - core.begin());
    c.pattern.args[slot].reset();
    c.foci.push_back({slot, alternatives[f]});
  }
  if (c.foci.empty()) return std::nullopt;
  return c;
}

// All five steps for a single stressed pronoun.
inline ResolutionResult resolve_stressed(const PronounSite &site, const Context &ctx,
                                         const RuleSet &rules,
                                         const DischargeOptions &options = {}) {
  ResolutionResult r = StressedPreference(site, ctx, rules);
  if (r.determinate()) {
    EntitySet f = r.candidates;
    f.insert(r.excluded.begin(), r.excluded.end());
    if (auto c = BuildConstraint(site.utterance, {site.arg}, {f})) {
      c->scope = FocusScope::kPhrase;
      ApplyDischarge(r, discharge(*c, *r.value.begin(), ctx, rules, options));
    } else {
      r.trace.push_back({"DISCHARGE", "skipped: pronoun is not a core argument"});
    }
  }
  FinishStressed(r);
  return r;
}

// Hypothesis check on one position: a stressed pronoun must not be felicitous
// where its unstressed counterpart is not.
inline bool check_asymmetry(const ResolutionResult &unstressed,
                            const ResolutionResult &stressed) {
  return !(stressed.felicity == Felicity::kOk &&
           unstressed.felicity == Felicity::kInfelicitous);
}

struct ResolutionError {
  std::string position;
  std::string message;
};

struct UtteranceResolution {
  Utterance resolved;  // indeterminate or failed pronouns are dropped
  std::vector<ResolutionResult> results;
  std::vector<ResolutionError> errors;
  std::optional<DischargeOutcome> discharge;
};

// Resolves every pronoun of an utterance against the input context, in
// grammatical-function order. Each resolved pronoun is bound before the next
// is located, so co-argument pronouns get disjoint referents. Stressed
// pronouns share a single discharge of the utterance's focus constraint.
inline UtteranceResolution resolve_utterance(const Utterance &utterance,
                                             const Context &ctx,
                                             const RuleSet &rules,
                                             DischargeOptions options = {}) {
  options.label = utterance.label;
  UtteranceResolution out;
  out.resolved = utterance;
  LogicalForm &lf = out.resolved.lf;

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < lf.args.size(); ++i) {
    if (lf.args[i].mention.needs_resolution()) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return Rank(lf.args[a].mention.gf) < Rank(lf.args[b].mention.gf);
  });

  std::vector<std::size_t> dropped;
  std::vector<std::size_t> focused_args;
  std::vector<EntitySet> focus_alternatives;
  std::vector<std::size_t> focused_results;
  for (std::size_t arg : order) {
    PronounSite site{out.resolved, arg};
    try {
      ResolutionResult r = site.pronoun().stressed
                               ? StressedPreference(site, ctx, rules)
                               : resolve_unstressed(site, ctx, rules);
      if (r.determinate()) {
        lf.args[arg].mention.referent = *r.value.begin();
        if (r.pronoun.stressed) {
          EntitySet f = r.candidates;
          f.insert(r.excluded.begin(), r.excluded.end());
          focused_args.push_back(arg);
          focus_alternatives.push_back(std::move(f));
          focused_results.push_back(out.results.size());
        }
      } else {
        dropped.push_back(arg);
      }
      out.results.push_back(std::move(r));
    } catch (const Error &e) {
      out.errors.push_back({site.position(), e.what()});
      dropped.push_back(arg);
    }
  }

  if (!focused_args.empty()) {
    if (auto c = BuildConstraint(out.resolved, focused_args, focus_alternatives)) {
      std::vector<EntityId> chosen;
      for (const FocusSlot &f : c->foci) {
        chosen.push_back(*lf.args[CoreArgumentOrder(lf)[f.slot]].mention.referent);
      }
      out.discharge = discharge(*c, chosen, ctx, rules, options);
      for (std::size_t i : focused_results) ApplyDischarge(out.results[i], *out.discharge);
    }
  }
  for (ResolutionResult &r : out.results) {
    if (r.pronoun.stressed) FinishStressed(r);
  }

  std::sort(dropped.rbegin(), dropped.rend());
  for (std::size_t arg : dropped) lf.args.erase(lf.args.begin() + static_cast<long>(arg));
  return out;
}

struct Interpretation {
  UtteranceResolution resolution;
  Context output;
};

// One discourse step: resolve against the input context, accommodate what
// discharge requires into it, then register the utterance.
inline Interpretation interpret(const Context &input, const Utterance &utterance,
                                const RuleSet &rules,
                                const DischargeOptions &options = {}) {
  Interpretation out;
  out.resolution = resolve_utterance(utterance, input, rules, options);
  Context ctx = input;
  if (out.resolution.discharge) {
    for (const AccommodationRecord &a : out.resolution.discharge->accommodations) {
      ctx = accommodate_into(std::move(ctx), a);
    }
  }
  out.output = advance(ctx, out.resolution.resolved);
  return out;
}

}  // namespace centering
