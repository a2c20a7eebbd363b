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
/// Salience dynamics and the discourse context.
///
/// Each utterance maps an input context to an output context. The output
/// attentional state ranks the entities realized by the utterance by
/// grammatical function (subject > object > object2 > others) and by
/// Centerhood; only pronominals can output the Center. Entities of earlier
/// utterances in the segment drop into the background, strictly below the
/// local attentional state.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centering/core/types.hpp"
#include "centering/knowledge/model.hpp"

namespace centering {

enum class CenterTransition { kEstablish, kChain };

struct CenterRecord {
  EntityId entity;
  GrammaticalFunction realized_gf = GrammaticalFunction::kSubject;
  int chain_length = 1;
  CenterTransition transition = CenterTransition::kEstablish;

  bool operator==(const CenterRecord &) const = default;
};

struct AttentionalState {
  std::vector<EntityId> local;  // realization order
  StrictPartialOrder salience;  // over local and background
  std::optional<CenterRecord> center;
  EntitySet background;

  EntitySet local_set() const { return EntitySet(local.begin(), local.end()); }

  bool operator==(const AttentionalState &) const = default;
};

struct Context {
  std::optional<LogicalForm> lf_register;
  AttentionalState attention;
  DiscourseModel model;

  // Empty context over a declared entity registry.
  static Context Initial(const std::vector<Entity> &entities) {
    Context ctx;
    for (const Entity &e : entities) ctx.model.entities[e.id] = e;
    return ctx;
  }

  bool operator==(const Context &) const = default;
};

// Entities a mention realizes: its referent, plus the members of a group.
inline std::vector<EntityId> RealizedBy(const Mention &m,
                                        const DiscourseModel &model) {
  std::vector<EntityId> out;
  if (!m.referent) return out;
  out.push_back(*m.referent);
  if (model.has_entity(*m.referent)) {
    for (const EntityId &member : model.entity(*m.referent).members) {
      out.push_back(member);
    }
  }
  return out;
}

namespace detail {

// Best (lowest) grammatical-function rank at which each entity is realized,
// in order of first realization.
inline std::vector<std::pair<EntityId, int>> RealizationRanks(
    const LogicalForm &lf, const DiscourseModel &model) {
  std::vector<std::pair<EntityId, int>> ranks;
  for (const Argument &arg : lf.args) {
    if (!arg.mention.referent) {
      throw UnresolvedMention("mention '" + arg.mention.surface + "' (" +
                              arg.role + ") is unresolved");
    }
    for (const EntityId &id : RealizedBy(arg.mention, model)) {
      auto it = std::find_if(ranks.begin(), ranks.end(),
                             [&](const auto &r) { return r.first == id; });
      int rank = Rank(arg.mention.gf);
      if (it == ranks.end()) {
        ranks.emplace_back(id, rank);
      } else {
        it->second = std::min(it->second, rank);
      }
    }
  }
  return ranks;
}

}  // namespace detail

// Output salience over the entities a resolved logical form realizes.
// Higher-ranked grammatical functions outrank lower ones. A Center realized
// at a non-subject position competes with the subject: the two become
// incomparable, both above the rest.
inline StrictPartialOrder project_salience(const LogicalForm &lf,
                                           const std::optional<CenterRecord> &center,
                                           const DiscourseModel &model = {}) {
  auto ranks = detail::RealizationRanks(lf, model);
  if (center && center->realized_gf != GrammaticalFunction::kSubject) {
    for (auto &[id, rank] : ranks) {
      if (id == center->entity) rank = 0;
    }
  }
  EntitySet carrier;
  for (const auto &[id, rank] : ranks) carrier.insert(id);
  StrictPartialOrder order(carrier);
  for (const auto &[a, ra] : ranks) {
    for (const auto &[b, rb] : ranks) {
      if (ra < rb) order = order.WithPair(a, b);
    }
  }
  return order;
}

// Center of the output attentional state: the entity of the highest-ranked
// pronominal, or none when the utterance has no pronominals.
inline std::optional<CenterRecord> update_center(const LogicalForm &lf,
                                                 const AttentionalState &input) {
  const Mention *best = nullptr;
  for (const Argument &arg : lf.args) {
    const Mention &m = arg.mention;
    if (!IsPronominal(m.kind) || !m.referent) continue;
    if (!best || Rank(m.gf) < Rank(best->gf)) best = &m;
  }
  if (!best) return std::nullopt;

  CenterRecord record{*best->referent, best->gf, 1, CenterTransition::kEstablish};
  if (input.center && input.center->entity == record.entity) {
    record.transition = CenterTransition::kChain;
    if (best->gf == GrammaticalFunction::kSubject &&
        input.center->realized_gf == GrammaticalFunction::kSubject) {
      record.chain_length = input.center->chain_length + 1;
    }
  }
  return record;
}

// Places `background` strictly below every element of `order`, keeping the
// relative salience the background already had in `previous`.
inline StrictPartialOrder WithBackground(StrictPartialOrder order,
                                         const EntitySet &background,
                                         const StrictPartialOrder &previous) {
  const EntitySet local = order.carrier();
  for (const EntityId &b : background) order = order.WithElement(b);
  for (const auto &[pair, s] : previous.pairs()) {
    if (background.count(pair.first) && background.count(pair.second) &&
        !order.precedes(pair.first, pair.second)) {
      order = order.WithPair(pair.first, pair.second);
    }
  }
  for (const EntityId &l : local) {
    for (const EntityId &b : background) {
      if (!order.precedes(l, b)) order = order.WithPair(l, b);
    }
  }
  return order;
}

// Registers a resolved utterance: the transition from the input context to
// the output context.
inline Context advance(const Context &ctx, const Utterance &resolved) {
  const LogicalForm &lf = resolved.lf;
  if (!lf.resolved()) {
    throw UnresolvedMention("utterance " + resolved.label +
                            " still has unresolved pronouns");
  }
  AttentionalState input = ctx.attention;
  if (resolved.segment_initial) {
    input.center.reset();
    input.background.clear();
    input.local.clear();
    input.salience = StrictPartialOrder();
  }

  Context out;
  out.lf_register = lf;
  out.model = WithFact(ctx.model, PropositionOf(lf));

  AttentionalState &att = out.attention;
  att.center = update_center(lf, input);
  for (const auto &[id, rank] : detail::RealizationRanks(lf, ctx.model)) {
    att.local.push_back(id);
  }
  const EntitySet local = att.local_set();
  for (const EntityId &e : input.local) {
    if (!local.count(e)) att.background.insert(e);
  }
  for (const EntityId &e : input.background) {
    if (!local.count(e)) att.background.insert(e);
  }
  att.salience = WithBackground(project_salience(lf, att.center, ctx.model),
                                att.background, input.salience);
  return out;
}

// The input local attentional state and its salience order. This is the only
// candidate source for both stressed and unstressed pronouns.
inline std::pair<EntitySet, StrictPartialOrder> local_state(const Context &ctx) {
  EntitySet local = ctx.attention.local_set();
  return {local, ctx.attention.salience.Restricted(local)};
}

// Accommodates a record into the input context. Accommodated entities join
// the background of the attentional state, never the local state.
inline Context accommodate_into(Context ctx, const AccommodationRecord &record) {
  ctx.model = accommodate(std::move(ctx.model), record);
  if (const auto *set = std::get_if<EntitySetRecord>(&record)) {
    EntitySet added;
    for (const Entity &e : set->entities) {
      if (!ctx.attention.salience.carrier().count(e.id)) added.insert(e.id);
    }
    StrictPartialOrder sal = ctx.attention.salience;
    for (const EntityId &id : added) {
      sal = sal.WithElement(id);
      ctx.attention.background.insert(id);
    }
    for (const EntityId &l : ctx.attention.local) {
      for (const EntityId &id : added) sal = sal.WithPair(l, id);
    }
    ctx.attention.salience = std::move(sal);
  }
  return ctx;
}

}  // namespace centering
