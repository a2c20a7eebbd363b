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

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "centering/core/types.hpp"
#include "centering/knowledge/rules.hpp"

namespace centering {

// A presupposed proposition added to license a contrast, e.g.
// "Mary is not from Louisiana".
struct ContrastRecord {
  Proposition proposition;
  bool operator==(const ContrastRecord &) const = default;
};

// A pending question, e.g. "Who is from Louisiana?". Empty slots are the
// questioned positions.
struct QuestionRecord {
  std::string predicate;
  std::vector<std::optional<EntityId>> args;
  Polarity polarity = Polarity::kPos;

  bool operator==(const QuestionRecord &) const = default;

  std::string ToString() const {
    std::string out = polarity == Polarity::kNeg ? "not " : "";
    out += predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i] ? args[i]->value : "?";
    }
    return out + ")?";
  }
};

// Entities introduced without a mention.
struct EntitySetRecord {
  std::vector<Entity> entities;
  bool operator==(const EntitySetRecord &) const = default;
};

// A rule the discourse silently acquires so that a contrast becomes
// derivable.
struct BridgingRecord {
  DefeasibleRule rule;
  bool operator==(const BridgingRecord &) const = default;
};

using AccommodationRecord =
    std::variant<ContrastRecord, QuestionRecord, EntitySetRecord, BridgingRecord>;

inline std::string Describe(const AccommodationRecord &record) {
  struct Visitor {
    std::string operator()(const ContrastRecord &r) const {
      return "contrast " + r.proposition.ToString();
    }
    std::string operator()(const QuestionRecord &r) const {
      return "question " + r.ToString();
    }
    std::string operator()(const EntitySetRecord &r) const {
      std::string out = "entities {";
      for (std::size_t i = 0; i < r.entities.size(); ++i) {
        if (i) out += ",";
        out += r.entities[i].id.value + ":" + r.entities[i].sort;
      }
      return out + "}";
    }
    std::string operator()(const BridgingRecord &r) const {
      return "bridging " + r.rule.ToString();
    }
  };
  return std::visit(Visitor{}, record);
}

// The discourse model D: what the discourse has been about.
struct DiscourseModel {
  std::set<Proposition> facts;
  std::vector<AccommodationRecord> accommodated;
  std::map<EntityId, Entity> entities;

  bool operator==(const DiscourseModel &) const = default;

  const Entity &entity(const EntityId &id) const {
    auto it = entities.find(id);
    if (it == entities.end()) throw UnknownEntity("unknown entity " + id.value);
    return it->second;
  }

  bool has_entity(const EntityId &id) const { return entities.count(id) > 0; }

  // Facts asserted by utterances plus accommodated contrast propositions.
  std::vector<Proposition> AssertedPropositions() const {
    std::vector<Proposition> out(facts.begin(), facts.end());
    for (const AccommodationRecord &r : accommodated) {
      if (auto *c = std::get_if<ContrastRecord>(&r)) out.push_back(c->proposition);
    }
    return out;
  }

  std::vector<DefeasibleRule> AccommodatedRules() const {
    std::vector<DefeasibleRule> out;
    for (const AccommodationRecord &r : accommodated) {
      if (auto *b = std::get_if<BridgingRecord>(&r)) out.push_back(b->rule);
    }
    return out;
  }
};

inline DiscourseModel WithFact(DiscourseModel model, Proposition fact) {
  model.facts.insert(std::move(fact));
  return model;
}

// Extends the model with an accommodation record. Accommodated entities are
// registered with accommodated = true. Re-accommodating a record already
// present is a no-op.
inline DiscourseModel accommodate(DiscourseModel model,
                                  const AccommodationRecord &record) {
  AccommodationRecord stored = record;
  auto *set = std::get_if<EntitySetRecord>(&stored);
  if (set) {
    for (Entity &e : set->entities) e.accommodated = true;
  }
  if (std::find(model.accommodated.begin(), model.accommodated.end(), stored) !=
      model.accommodated.end()) {
    return model;
  }
  if (set) {
    for (const Entity &e : set->entities) model.entities[e.id] = e;
  }
  model.accommodated.push_back(std::move(stored));
  return model;
}

}  // namespace centering
