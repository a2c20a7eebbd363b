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
/// Unstressed pronoun resolution.
///
/// Candidates are the members of the input local attentional state that pass
/// the indefeasible agreement and disjoint-reference filters (SYN+SEM). Three
/// defeasible preference classes then rank them independently:
///
///   WK   commonsense rules over the discourse model
///   ATT  salience: a pronoun realizes a maximally salient entity
///   LF   parallelism with the logical form of the previous utterance
///
/// and their conclusions are combined under the override order
/// SYN+SEM >= WK >= ATT >= LF.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "centering/attention/attention.hpp"
#include "centering/core/types.hpp"
#include "centering/knowledge/derive.hpp"
#include "centering/resolver/result.hpp"

namespace centering {

// Center chain length at which attentional preference becomes too strong to
// be overridden silently.
inline constexpr int kGardenPathThreshold = 2;

// A pronoun inside the utterance being interpreted. Co-argument pronouns that
// were already resolved carry their referents in `utterance`.
struct PronounSite {
  Utterance utterance;
  std::size_t arg = 0;

  const Mention &pronoun() const { return utterance.lf.args.at(arg).mention; }
  const std::string &role() const { return utterance.lf.args.at(arg).role; }
  std::string position() const { return utterance.label + "." + role(); }
};

inline PronounSite SiteOf(const LogicalForm &lf, std::size_t arg,
                          std::string label = "U") {
  Utterance u;
  u.label = std::move(label);
  u.lf = lf;
  return PronounSite{std::move(u), arg};
}

namespace detail {

inline std::string Join(const EntitySet &ids) {
  std::string out = "{";
  bool first = true;
  for (const EntityId &id : ids) {
    if (!first) out += ",";
    out += id.value;
    first = false;
  }
  return out + "}";
}

inline std::string JoinPairs(const StrictPartialOrder &order) {
  if (order.pairs().empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto &[pair, s] : order.pairs()) {
    if (!first) out += ", ";
    out += pair.first.value + ">" + pair.second.value;
    first = false;
  }
  return out + "}";
}

}  // namespace detail

// Agreement (gender, number, person) plus personhood for he/she.
inline bool AgreementAdmits(const Agreement &pronoun, const Entity &e) {
  const Gender g = e.agreement.gender;
  if (pronoun.gender != Gender::kUnknown && g != Gender::kUnknown &&
      pronoun.gender != g) {
    return false;
  }
  if (pronoun.number != e.agreement.number) return false;
  if (pronoun.person != e.agreement.person) return false;
  if ((pronoun.gender == Gender::kMasc || pronoun.gender == Gender::kFem) &&
      !e.sort.empty() && e.sort != kPersonSort) {
    return false;
  }
  return true;
}

struct CandidateSelection {
  EntitySet local;
  EntitySet candidates;
  EntitySet excluded;
  std::vector<std::pair<EntityId, std::string>> rejected;
};

inline CandidateSelection SelectCandidates(const PronounSite &site,
                                           const Context &ctx) {
  const Mention &pronoun = site.pronoun();
  CandidateSelection sel;
  sel.local = local_state(ctx).first;
  if (sel.local.empty()) {
    throw EmptyLocalState("no local attentional state for " + site.position());
  }
  EntitySet bound;
  for (std::size_t j = 0; j < site.utterance.lf.args.size(); ++j) {
    const Mention &m = site.utterance.lf.args[j].mention;
    if (j != site.arg && IsPronominal(m.kind) && m.referent) bound.insert(*m.referent);
  }
  for (const EntityId &id : sel.local) {
    const Entity &e = ctx.model.entity(id);
    if (!AgreementAdmits(pronoun.agreement, e)) {
      sel.rejected.emplace_back(id, "agreement");
    } else if (bound.count(id)) {
      sel.excluded.insert(id);
      sel.rejected.emplace_back(id, "bound to a co-argument pronoun");
    } else {
      sel.candidates.insert(id);
    }
  }
  if (sel.candidates.empty()) {
    throw NoCandidates("no candidate in " + detail::Join(sel.local) +
                       " agrees with '" + pronoun.surface + "' at " +
                       site.position());
  }
  return sel;
}

inline EntitySet candidate_set(const PronounSite &site, const Context &ctx) {
  return SelectCandidates(site, ctx).candidates;
}

// ATT: each maximally salient candidate is preferred over each other one.
inline ClassConclusion att_preference(const PronounSite & /*site*/, const Context &ctx,
                                      const EntitySet &candidates) {
  ClassConclusion out;
  out.cls = PreferenceClass::kATT;
  out.order = StrictPartialOrder(candidates);
  const StrictPartialOrder salience = local_state(ctx).second.Restricted(candidates);
  const EntitySet top = salience.Maximal();
  for (const EntityId &m : top) {
    for (const EntityId &n : candidates) {
      if (!top.count(n)) out.order = out.order.WithPair(m, n, {PreferenceClass::kATT});
    }
  }
  const auto &center = ctx.attention.center;
  if (center && center->chain_length >= kGardenPathThreshold &&
      candidates.count(center->entity)) {
    out.strength = Strength::kExtreme;
  }
  if (top.size() == candidates.size() && candidates.size() > 1) {
    out.note = "salience indeterminate among " + detail::Join(candidates);
  } else {
    out.note = "maximally salient " + detail::Join(top);
  }
  if (center) {
    out.note += "; Center " + center->entity.value + " (" +
                GfName(center->realized_gf) + ", chain " +
                std::to_string(center->chain_length) + ")";
  }
  if (out.strength == Strength::kExtreme) out.note += "; extreme strength";
  return out;
}

// LF: a candidate realized in the LF register at the pronoun's grammatical
// function is preferred over candidates realized at other functions.
inline ClassConclusion lf_preference(const PronounSite &site, const Context &ctx,
                                     const EntitySet &candidates) {
  ClassConclusion out;
  out.cls = PreferenceClass::kLF;
  out.order = StrictPartialOrder(candidates);
  const GrammaticalFunction gf = site.pronoun().gf;
  if (!ctx.lf_register) {
    out.note = "no LF register";
    return out;
  }
  if (gf == GrammaticalFunction::kOther) {
    out.note = "pronoun is not at a core grammatical function";
    return out;
  }
  EntitySet parallel;
  EntitySet elsewhere;
  for (const Argument &arg : ctx.lf_register->args) {
    for (const EntityId &id : RealizedBy(arg.mention, ctx.model)) {
      if (!candidates.count(id)) continue;
      (arg.mention.gf == gf ? parallel : elsewhere).insert(id);
    }
  }
  for (const EntityId &p : parallel) elsewhere.erase(p);
  for (const EntityId &p : parallel) {
    for (const EntityId &o : elsewhere) {
      out.order = out.order.WithPair(p, o, {PreferenceClass::kLF});
    }
  }
  out.note = parallel.empty()
                 ? std::string("no candidate realized at ") + GfName(gf)
                 : detail::Join(parallel) + " realized at " + GfName(gf);
  return out;
}

// Combines class conclusions under the override order. Classes are applied
// strongest first. A pair that contradicts what stronger classes already
// established is overridden; pairs of one class that contradict each other
// given the established order cancel out.
inline BasePreference combine(const std::vector<ClassConclusion> &conclusions,
                              const EntitySet &candidates) {
  BasePreference out;
  out.candidates = candidates;
  out.order = StrictPartialOrder(candidates);
  for (const ClassConclusion &c : conclusions) {
    for (const EntityId &id : c.order.carrier()) {
      if (!candidates.count(id)) {
        throw NotASubset(std::string(ClassName(c.cls)) + " conclusion mentions " +
                         id.value + " outside the candidate set");
      }
    }
  }

  for (PreferenceClass cls :
       {PreferenceClass::kWK, PreferenceClass::kATT, PreferenceClass::kLF}) {
    std::set<StrictPartialOrder::Pair> proposed;
    bool extreme = false;
    for (const ClassConclusion &c : conclusions) {
      if (c.cls != cls) continue;
      for (const auto &[pair, s] : c.order.pairs()) proposed.insert(pair);
      extreme = extreme || c.strength == Strength::kExtreme;
    }

    std::set<StrictPartialOrder::Pair> kept;
    for (const auto &pair : proposed) {
      if (!out.order.precedes(pair.second, pair.first)) {
        kept.insert(pair);
        continue;
      }
      const SupportSet winner = out.order.support(pair.second, pair.first);
      out.trace.push_back(
          {"OVERRIDE", winner.ToString() + " " + pair.second.value + ">" +
                           pair.first.value + " overrides " + ClassName(cls) + " " +
                           pair.first.value + ">" + pair.second.value});
      if (cls == PreferenceClass::kATT && extreme &&
          winner.contains(PreferenceClass::kWK)) {
        out.garden_path = true;
        out.trace.push_back({"GARDEN-PATH", pair.first.value +
                                                " is first chosen but retracted"});
      }
    }

    // Reachability in the established order plus the surviving pairs.
    std::map<EntityId, EntitySet> reach;
    for (const auto &[pair, s] : out.order.pairs()) reach[pair.first].insert(pair.second);
    for (const auto &pair : kept) reach[pair.first].insert(pair.second);
    for (const EntityId &k : candidates) {
      for (const EntityId &i : candidates) {
        if (!reach[i].count(k)) continue;
        for (const EntityId &j : EntitySet(reach[k])) reach[i].insert(j);
      }
    }
    for (const auto &pair : kept) {
      if (reach[pair.second].count(pair.first)) {
        out.trace.push_back({"CANCEL", std::string(ClassName(cls)) + " " +
                                           pair.first.value + ">" +
                                           pair.second.value +
                                           " contradicts an equally strong pair"});
        continue;
      }
      out.order = out.order.WithPair(pair.first, pair.second, SupportSet{cls});
    }
  }

  for (const auto &[pair, s] : out.order.pairs()) {
    if (s == SupportSet{PreferenceClass::kLF}) out.weak_pairs.insert(pair);
  }
  return out;
}

// Pattern of the utterance's proposition with the pronoun's slot left open,
// plus that slot. Unresolved co-argument pronouns are open as well. Returns
// nullopt when the pronoun is not a core argument.
inline std::optional<std::pair<PropositionPattern, std::size_t>> ContentPattern(
    const PronounSite &site) {
  const LogicalForm &lf = site.utterance.lf;
  PropositionPattern pattern{lf.predicate, {}, lf.polarity};
  std::optional<std::size_t> hole;
  for (std::size_t i : CoreArgumentOrder(lf)) {
    if (i == site.arg) hole = pattern.args.size();
    pattern.args.push_back(lf.args[i].mention.referent);
  }
  if (!hole) return std::nullopt;
  return std::make_pair(std::move(pattern), *hole);
}

// Everything computed for the unstressed counterpart at a site. Shared by
// both resolvers so that stressed and unstressed pronouns at the same
// position see identical candidates and base preferences.
struct BaseComputation {
  CandidateSelection selection;
  ClassConclusion wk;
  ClassConclusion att;
  ClassConclusion lf;
  std::map<EntityId, Derivation> wk_derivations;
  BasePreference base;
  Trace trace;
};

inline BaseComputation ComputeBase(const PronounSite &site, const Context &ctx,
                                   const RuleSet &rules) {
  BaseComputation out;
  out.selection = SelectCandidates(site, ctx);
  const EntitySet &h = out.selection.candidates;
  Trace &trace = out.trace;

  std::string filter = "B=" + detail::Join(out.selection.local) + " H=" +
                       detail::Join(h);
  for (const auto &[id, why] : out.selection.rejected) {
    filter += "; " + id.value + " rejected (" + why + ")";
  }
  trace.push_back({"SYN+SEM", filter});

  out.wk.cls = PreferenceClass::kWK;
  out.wk.order = StrictPartialOrder(h);
  if (auto content = ContentPattern(site)) {
    WkAssessment wk = AssessWk(h, content->first, content->second, ctx.model, rules);
    out.wk.order = wk.order;
    out.wk.note = wk.note;
    out.wk_derivations = wk.derivations;
    for (const auto &[id, d] : wk.derivations) {
      if (d.via) trace.push_back({"WK:" + *d.via, d.ToString()});
    }
  } else {
    out.wk.note = "pronoun is not a core argument";
  }
  trace.push_back({"WK", detail::JoinPairs(out.wk.order) + " " + out.wk.note});

  out.att = att_preference(site, ctx, h);
  trace.push_back({"ATT", detail::JoinPairs(out.att.order) + " " + out.att.note});

  out.lf = lf_preference(site, ctx, h);
  trace.push_back({"PARA", detail::JoinPairs(out.lf.order) + " " + out.lf.note});

  out.base = combine({out.wk, out.att, out.lf}, h);
  trace.insert(trace.end(), out.base.trace.begin(), out.base.trace.end());
  trace.push_back({"BASE", detail::JoinPairs(out.base.order)});
  return out;
}

// Records the coherence relation the fixture supplies and any commonsense
// derivation supporting the chosen value.
inline void AddCoherence(const PronounSite &site, const BaseComputation &b,
                         const EntitySet &value, Trace &trace) {
  std::string detail = site.utterance.coherence.value_or("");
  for (const EntityId &v : value) {
    auto it = b.wk_derivations.find(v);
    if (it == b.wk_derivations.end() || !it->second.supported()) continue;
    if (!detail.empty()) detail += "; ";
    detail += it->second.ToString();
  }
  if (!detail.empty()) trace.push_back({"COHERENCE", detail});
}

inline ResolutionResult resolve_unstressed(const PronounSite &site,
                                           const Context &ctx,
                                           const RuleSet &rules) {
  if (site.pronoun().stressed) {
    throw Error("resolve_unstressed called on stressed pronoun at " +
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
  r.final_order = b.base.order;
  r.value = r.final_order.Maximal();
  r.trace = b.trace;
  AddCoherence(site, b, r.value, r.trace);
  if (r.value.size() > 1) {
    r.felicity = Felicity::kAmbiguous;
  } else if (r.base.garden_path) {
    r.felicity = Felicity::kGardenPath;
  }
  r.trace.push_back({"VALUE", detail::Join(r.value) + " " + FelicityName(r.felicity)});
  return r;
}

}  // namespace centering
