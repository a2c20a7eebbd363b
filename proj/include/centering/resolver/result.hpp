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

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "centering/core/types.hpp"
#include "centering/knowledge/derive.hpp"
#include "centering/knowledge/model.hpp"

namespace centering {

// One rule firing in a derivation trace. `rule` names the principle
// (GF-ORDER, EXP-ORDER, CENTER, PARA, a WK rule id, OVERRIDE, ...).
struct TraceStep {
  std::string rule;
  std::string detail;

  bool operator==(const TraceStep &) const = default;
};

using Trace = std::vector<TraceStep>;

enum class Strength { kNormal, kExtreme };

// What one preference class concludes on its own.
struct ClassConclusion {
  PreferenceClass cls = PreferenceClass::kLF;
  StrictPartialOrder order;
  Strength strength = Strength::kNormal;
  std::string note;
};

struct BasePreference {
  EntitySet candidates;
  StrictPartialOrder order;
  bool garden_path = false;
  std::set<StrictPartialOrder::Pair> weak_pairs;  // supported by LF only
  Trace trace;                                    // overrides and cancellations
};

enum class DischargeStatus {
  kContrastInCandidates,
  kContrastInLocal,
  kAccommodatedQuestion,
  kInfelicitous,
};

inline const char *DischargeName(DischargeStatus s) {
  switch (s) {
    case DischargeStatus::kContrastInCandidates: return "contrast-in-candidates";
    case DischargeStatus::kContrastInLocal: return "contrast-in-local";
    case DischargeStatus::kAccommodatedQuestion: return "accommodated-question";
    case DischargeStatus::kInfelicitous: return "infelicitous";
  }
  return "?";
}

struct DischargeOutcome {
  DischargeStatus status = DischargeStatus::kInfelicitous;
  std::optional<Proposition> contrasting_proposition;
  std::vector<AccommodationRecord> accommodations;
  std::optional<Derivation> support;
  EntitySet alternatives;  // focus alternatives F once discharged
  std::string note;
};

enum class Felicity { kOk, kAmbiguous, kInfelicitous, kGardenPath };

inline const char *FelicityName(Felicity f) {
  switch (f) {
    case Felicity::kOk: return "ok";
    case Felicity::kAmbiguous: return "ambiguous";
    case Felicity::kInfelicitous: return "infelicitous";
    case Felicity::kGardenPath: return "garden-path";
  }
  return "?";
}

struct ResolutionResult {
  std::string position;  // "U2.Subj"
  Mention pronoun;
  EntitySet local;       // B: input local attentional state
  EntitySet candidates;  // H
  EntitySet excluded;    // agreeing entities bound to a co-argument pronoun
  BasePreference base;
  StrictPartialOrder final_order;
  EntitySet value;
  std::optional<DischargeOutcome> discharge;
  Felicity felicity = Felicity::kOk;
  Trace trace;

  bool determinate() const { return value.size() == 1; }

  // The chosen value outranks the others only by parallelism.
  bool weakly_preferred() const {
    if (!determinate()) return false;
    const EntityId &v = *value.begin();
    bool any = false;
    for (const auto &[pair, support] : final_order.pairs()) {
      if (pair.first != v) continue;
      any = true;
      if (!(support == SupportSet{PreferenceClass::kLF})) return false;
    }
    return any;
  }
};

}  // namespace centering
