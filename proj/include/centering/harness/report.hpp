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
/// Runs a discourse document and reports on it.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "centering/attention/attention.hpp"
#include "centering/focus/focus.hpp"
#include "centering/harness/document.hpp"
#include "centering/resolver/result.hpp"

namespace centering {

// Attentional state after an utterance.
struct Snapshot {
  std::vector<EntityId> local;
  StrictPartialOrder salience;
  std::optional<CenterRecord> center;
  EntitySet background;
  std::vector<std::string> accommodated;
};

struct UtteranceReport {
  std::string label;
  std::string proposition;  // as registered
  std::vector<ResolutionResult> results;
  std::vector<ResolutionError> errors;
  std::optional<DischargeOutcome> discharge;
  Snapshot after;
};

struct ExpectationCheck {
  Expectation expectation;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<UtteranceReport> utterances;
  std::vector<ExpectationCheck> checks;

  bool passed() const {
    for (const ExpectationCheck &c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  const ResolutionResult *Find(const std::string &position) const {
    for (const UtteranceReport &u : utterances) {
      for (const ResolutionResult &r : u.results) {
        if (r.position == position) return &r;
      }
    }
    return nullptr;
  }
};

namespace detail {

inline Snapshot TakeSnapshot(const Context &ctx) {
  Snapshot s;
  s.local = ctx.attention.local;
  s.salience = ctx.attention.salience;
  s.center = ctx.attention.center;
  s.background = ctx.attention.background;
  for (const AccommodationRecord &a : ctx.model.accommodated) s.accommodated.push_back(Describe(a));
  return s;
}

inline ExpectationCheck Check(const Expectation &e, const Report &report) {
  ExpectationCheck c{e, true, ""};
  auto fail = [&](const std::string &why) {
    c.passed = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += why;
  };
  const ResolutionResult *r = report.Find(e.position);
  if (!r) {
    for (const UtteranceReport &u : report.utterances) {
      for (const ResolutionError &err : u.errors) {
        if (err.position == e.position) {
          fail("resolution failed: " + err.message);
          return c;
        }
      }
    }
    fail("no pronoun at " + e.position);
    return c;
  }
  if (e.value && *e.value != r->value) {
    fail("value " + Join(r->value) + ", expected " + Join(*e.value));
  }
  if (e.felicity && *e.felicity != r->felicity) {
    fail(std::string("felicity ") + FelicityName(r->felicity) + ", expected " +
         FelicityName(*e.felicity));
  }
  if (e.discharge) {
    if (!r->discharge) {
      fail(std::string("no discharge, expected ") + DischargeName(*e.discharge));
    } else if (r->discharge->status != *e.discharge) {
      fail(std::string("discharge ") + DischargeName(r->discharge->status) +
           ", expected " + DischargeName(*e.discharge));
    }
  }
  if (e.expect_no_discharge && r->discharge) fail("unexpected discharge");
  if (e.garden_path && *e.garden_path != r->base.garden_path) {
    fail(std::string("garden-path ") + (r->base.garden_path ? "true" : "false"));
  }
  if (e.weak && *e.weak != r->weakly_preferred()) {
    fail(std::string("weak ") + (r->weakly_preferred() ? "true" : "false"));
  }
  return c;
}

inline std::string PairsWithSupport(const StrictPartialOrder &order) {
  std::string out = "{";
  bool first = true;
  for (const auto &[pair, s] : order.pairs()) {
    out += (first ? "" : ", ") + pair.first.value + ">" + pair.second.value;
    if (!s.empty()) out += "[" + s.ToString() + "]";
    first = false;
  }
  return out + "}";
}

inline std::string Covering(const StrictPartialOrder &order) {
  std::string out = "{";
  bool first = true;
  for (const auto &[a, b] : order.CoveringPairs()) {
    out += (first ? "" : ", ") + a.value + ">" + b.value;
    first = false;
  }
  return out + "}";
}

inline std::string IdList(const std::vector<EntityId> &ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + ids[i].value;
  return out + "]";
}

}  // namespace detail

struct RunOptions {
  DischargeOptions discharge;
};

// Folds the utterances through the context. Pronouns are resolved against
// the context before their utterance is registered; resolution errors are
// reported and the run continues.
inline Report run(const DiscourseDocument &doc, const RuleSet &rules,
                  const RunOptions &options = {}) {
  Report report;
  report.title = doc.title;
  Context ctx = Context::Initial(doc.entities);
  for (const Utterance &u : doc.utterances) {
    UtteranceReport ur;
    ur.label = u.label;
    Interpretation step = interpret(ctx, u, rules, options.discharge);
    ur.results = std::move(step.resolution.results);
    ur.errors = std::move(step.resolution.errors);
    ur.discharge = std::move(step.resolution.discharge);
    ur.proposition = PropositionOf(step.resolution.resolved.lf).ToString();
    ur.after = detail::TakeSnapshot(step.output);
    ctx = std::move(step.output);
    report.utterances.push_back(std::move(ur));
  }
  for (const Expectation &e : doc.expectations) {
    report.checks.push_back(detail::Check(e, report));
  }
  return report;
}

// Runs with the document's own rules; rule files resolve against `base_dir`.
inline Report run(const DiscourseDocument &doc, const std::string &base_dir = "",
                  const RunOptions &options = {}) {
  return run(doc, LoadRules(doc, base_dir), options);
}

struct RenderOptions {
  bool snapshots = false;
  bool trace = true;
};

inline std::string render_text(const Report &report, const RenderOptions &opts = {}) {
  std::ostringstream out;
  out << "== " << report.title << "\n";
  for (const UtteranceReport &u : report.utterances) {
    out << u.label << " " << u.proposition << "\n";
    for (const ResolutionResult &r : u.results) {
      out << "  " << r.position << " " << r.pronoun.surface << " := "
          << detail::Join(r.value) << " " << FelicityName(r.felicity);
      if (r.base.garden_path) out << " garden-path";
      if (r.weakly_preferred()) out << " weak";
      if (r.discharge) out << " discharge=" << DischargeName(r.discharge->status);
      out << "\n";
      out << "    B=" << detail::Join(r.local) << " H=" << detail::Join(r.candidates)
          << " order=" << detail::PairsWithSupport(r.final_order) << "\n";
      if (opts.trace) {
        for (const TraceStep &t : r.trace) out << "    " << t.rule << ": " << t.detail << "\n";
      }
    }
    for (const ResolutionError &e : u.errors) {
      out << "  " << e.position << " error: " << e.message << "\n";
    }
    if (opts.snapshots) {
      const Snapshot &s = u.after;
      out << "  A^LOC=" << detail::IdList(s.local)
          << " salience=" << detail::Covering(s.salience) << " center=";
      if (s.center) {
        out << s.center->entity.value << "/" << GfName(s.center->realized_gf) << "/"
            << (s.center->transition == CenterTransition::kChain ? "chain" : "establish")
            << "/" << s.center->chain_length;
      } else {
        out << "-";
      }
      out << " background=" << detail::Join(s.background) << "\n";
      for (const std::string &a : s.accommodated) out << "  accommodated " << a << "\n";
    }
  }
  for (const ExpectationCheck &c : report.checks) {
    out << (c.passed ? "PASS" : "FAIL") << " expect " << c.expectation.position;
    if (!c.passed) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

inline nlohmann::ordered_json ToJson(const ResolutionResult &r) {
  using J = nlohmann::ordered_json;
  J j;
  j["position"] = r.position;
  j["pronoun"] = r.pronoun.surface;
  j["stressed"] = r.pronoun.stressed;
  auto ids = [](const EntitySet &s) {
    J a = J::array();
    for (const EntityId &id : s) a.push_back(id.value);
    return a;
  };
  auto pairs = [](const StrictPartialOrder &o) {
    J a = J::array();
    for (const auto &[pair, s] : o.pairs()) {
      a.push_back({{"above", pair.first.value},
                   {"below", pair.second.value},
                   {"support", s.ToString()}});
    }
    return a;
  };
  j["local"] = ids(r.local);
  j["candidates"] = ids(r.candidates);
  j["excluded"] = ids(r.excluded);
  j["base"] = pairs(r.base.order);
  j["final"] = pairs(r.final_order);
  j["value"] = ids(r.value);
  j["felicity"] = FelicityName(r.felicity);
  j["garden_path"] = r.base.garden_path;
  j["weak"] = r.weakly_preferred();
  if (r.discharge) {
    J d;
    d["status"] = DischargeName(r.discharge->status);
    if (r.discharge->contrasting_proposition) {
      d["contrast"] = r.discharge->contrasting_proposition->ToString();
    }
    d["accommodations"] = J::array();
    for (const AccommodationRecord &a : r.discharge->accommodations) {
      d["accommodations"].push_back(Describe(a));
    }
    d["alternatives"] = ids(r.discharge->alternatives);
    j["discharge"] = d;
  }
  j["trace"] = J::array();
  for (const TraceStep &t : r.trace) j["trace"].push_back({{"rule", t.rule}, {"detail", t.detail}});
  return j;
}

inline nlohmann::ordered_json ToJson(const Report &report) {
  using J = nlohmann::ordered_json;
  J j;
  j["title"] = report.title;
  j["utterances"] = J::array();
  for (const UtteranceReport &u : report.utterances) {
    J ju;
    ju["label"] = u.label;
    ju["proposition"] = u.proposition;
    ju["pronouns"] = J::array();
    for (const ResolutionResult &r : u.results) ju["pronouns"].push_back(ToJson(r));
    ju["errors"] = J::array();
    for (const ResolutionError &e : u.errors) {
      ju["errors"].push_back({{"position", e.position}, {"message", e.message}});
    }
    J s;
    s["local"] = J::array();
    for (const EntityId &id : u.after.local) s["local"].push_back(id.value);
    s["salience"] = detail::Covering(u.after.salience);
    if (u.after.center) {
      s["center"] = {{"entity", u.after.center->entity.value},
                     {"gf", GfName(u.after.center->realized_gf)},
                     {"chain_length", u.after.center->chain_length}};
    } else {
      s["center"] = nullptr;
    }
    s["background"] = J::array();
    for (const EntityId &id : u.after.background) s["background"].push_back(id.value);
    s["accommodated"] = u.after.accommodated;
    ju["after"] = s;
    j["utterances"].push_back(ju);
  }
  j["checks"] = J::array();
  for (const ExpectationCheck &c : report.checks) {
    j["checks"].push_back({{"position", c.expectation.position},
                           {"passed", c.passed},
                           {"detail", c.detail}});
  }
  j["passed"] = report.passed();
  return j;
}

inline std::string render_structured(const Report &report) {
  return ToJson(report).dump(2) + "\n";
}

}  // namespace centering
