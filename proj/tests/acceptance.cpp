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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "properties.hpp"

namespace centering {
namespace {

using testing::Ids;
using testing::LoadFixture;
using testing::PropertyOutcome;
using testing::RunFixture;

// Collects the first few reasons a criterion failed.
class Verdict {
 public:
  void Require(bool ok, const std::string &why) {
    if (!ok) reasons_.push_back(why);
  }
  bool passed() const { return reasons_.empty(); }
  std::string Reasons() const {
    std::string out;
    for (std::size_t i = 0; i < reasons_.size() && i < 3; ++i) {
      out += (i ? "; " : "") + reasons_[i];
    }
    return out;
  }

 private:
  std::vector<std::string> reasons_;
};

const ResolutionResult &At(const Report &r, const std::string &position) {
  const ResolutionResult *p = r.Find(position);
  if (!p) throw Error("no result at " + position + " in '" + r.title + "'");
  return *p;
}

void RequireFixture(Verdict &v, const Report &r) {
  for (const ExpectationCheck &c : r.checks) {
    v.Require(c.passed, r.title + " " + c.expectation.position + ": " + c.detail);
  }
}

// Index of the first trace step whose rule starts with `rule` and whose detail
// contains `text`, searching from `from`.
std::size_t StepIndex(const Trace &t, const std::string &rule, const std::string &text = "",
                      std::size_t from = 0) {
  for (std::size_t i = from; i < t.size(); ++i) {
    if (t[i].rule.rfind(rule, 0) == 0 && t[i].detail.find(text) != std::string::npos) return i;
  }
  return t.size();
}

Context FinalContext(const std::string &fixture) {
  DiscourseDocument d = LoadFixture(fixture);
  RuleSet rules = LoadRules(d, CENTERING_FIXTURES);
  Context ctx = Context::Initial(d.entities);
  for (const Utterance &u : d.utterances) ctx = interpret(ctx, u, rules).output;
  return ctx;
}

void Criterion1(Verdict &v) {
  Report he = RunFixture("hit-he.disc");
  Report HE = RunFixture("hit-HE.disc");
  RequireFixture(v, he);
  RequireFixture(v, HE);
  v.Require(At(he, "U2.Subj").value == Ids({"Bill"}), "he is not Bill");
  const ResolutionResult &s = At(HE, "U2.Subj");
  v.Require(s.value == Ids({"John"}), "HE is not John");
  const std::size_t wk = StepIndex(s.trace, "WK:HIT");
  const std::size_t over = StepIndex(s.trace, "OVERRIDE", "WK", wk);
  const std::size_t rev = StepIndex(s.trace, "CPH-REVERSE", "", over);
  v.Require(wk < s.trace.size() && over < s.trace.size() && rev < s.trace.size(),
            "trace lacks WK(HIT) override followed by reversal");
  v.Require(s.discharge && s.discharge->status == DischargeStatus::kContrastInCandidates,
            "HE discharge is not contrast-in-candidates");
}

bool HasBridging(const ResolutionResult &r) {
  if (!r.discharge) return false;
  for (const AccommodationRecord &a : r.discharge->accommodations) {
    if (std::holds_alternative<BridgingRecord>(a)) return true;
  }
  return false;
}

void Criterion2(Verdict &v) {
  Report he = RunFixture("repub-he.disc");
  Report he_rep = RunFixture("repub-he-rep.disc");
  Report HE = RunFixture("repub-HE.disc");
  Report HE_rep = RunFixture("repub-HE-rep.disc");
  for (const Report *r : {&he, &he_rep, &HE, &HE_rep}) RequireFixture(v, *r);
  for (const Report *r : {&he, &he_rep}) {
    v.Require(At(*r, "U2.Subj").value == Ids({"Paul"}) && At(*r, "U2.Obj").value == Ids({"Jim"}),
              r->title + ": unstressed is not (Paul, Jim)");
  }
  for (const Report *r : {&HE, &HE_rep}) {
    const ResolutionResult &subj = At(*r, "U2.Subj");
    const ResolutionResult &obj = At(*r, "U2.Obj");
    v.Require(subj.value == Ids({"Jim"}) && obj.value == Ids({"Paul"}),
              r->title + ": stressed is not (Jim, Paul)");
    v.Require(subj.discharge && subj.discharge->status == DischargeStatus::kContrastInCandidates,
              r->title + ": discharge is not contrast-in-candidates");
  }
  v.Require(!HasBridging(At(HE_rep, "U2.Subj")), "bridging accommodated although REP is loaded");
  v.Require(HasBridging(At(HE, "U2.Subj")), "no bridging accommodation without REP");
}

void Criterion3(Verdict &v) {
  Report he = RunFixture("babar4-he.disc");
  Report HE = RunFixture("babar4-HE.disc");
  RequireFixture(v, he);
  RequireFixture(v, HE);
  const ResolutionResult &u = At(he, "U3.Subj");
  const ResolutionResult &s = At(HE, "U3.Subj");
  v.Require(u.felicity == Felicity::kOk && u.value == Ids({"Babar"}), "he is not an ok Babar");
  v.Require(s.felicity == Felicity::kInfelicitous, "HE is not infelicitous");
  v.Require(check_asymmetry(u, s), "check_asymmetry is false");
}

void Criterion4(Verdict &v) {
  Report r = RunFixture("home.disc");
  RequireFixture(v, r);
  const ResolutionResult &him = At(r, "U2.Obj");
  v.Require(him.value == Ids({"John"}), "him is not John");
  v.Require(StepIndex(him.trace, "PARA", "{Bill>John}") < him.trace.size(),
            "LF does not prefer Bill");
  v.Require(StepIndex(him.trace, "OVERRIDE", "ATT John>Bill overrides LF Bill>John") <
                him.trace.size(),
            "trace lacks ATT overriding LF");
}

void Criterion5(Verdict &v) {
  Report b1 = RunFixture("babar1.disc");
  Report b2 = RunFixture("babar2.disc");
  RequireFixture(v, b1);
  RequireFixture(v, b2);
  const ResolutionResult &he1 = At(b1, "U3.Subj");
  v.Require(he1.value == Ids({"Babar"}) && he1.determinate(), "babar1 he is not Babar");
  const ResolutionResult &he2 = At(b2, "U3.Subj");
  v.Require(he2.value == Ids({"baker"}), "babar2 he is not the baker");
  v.Require(he2.weakly_preferred() && !he2.base.weak_pairs.empty(), "babar2 lacks weak marker");
  for (const auto &p : he2.base.weak_pairs) {
    v.Require(he2.base.order.support(p.first, p.second) == SupportSet{PreferenceClass::kLF},
              "weak pair not LF-only");
  }
}

void Criterion6(Verdict &v) {
  for (const char *f : {"jackbob-he.disc", "jackbob-HE.disc"}) {
    Report r = RunFixture(f);
    RequireFixture(v, r);
    const ResolutionResult &x = At(r, "U2.Subj");
    v.Require(x.felicity == Felicity::kAmbiguous, std::string(f) + " not ambiguous");
    v.Require(maximal(x.final_order) == Ids({"Jack", "Bob"}) && x.value == Ids({"Jack", "Bob"}),
              std::string(f) + " maximal set is not {Jack, Bob}");
  }
}

void Criterion7(Verdict &v) {
  for (const char *f : {"jackmary-he.disc", "jackmary-HE.disc", "jackphysicist-he.disc",
                        "jackphysicist-HE.disc"}) {
    Report r = RunFixture(f);
    RequireFixture(v, r);
    v.Require(At(r, "U2.Subj").value == Ids({"Jack"}), std::string(f) + " is not Jack");
  }
  const ResolutionResult mary = At(RunFixture("jackmary-HE.disc"), "U2.Subj");
  v.Require(mary.discharge && mary.discharge->status == DischargeStatus::kContrastInLocal,
            "(9) discharge is not contrast-in-local");
  bool contrast = false;
  if (mary.discharge) {
    for (const AccommodationRecord &a : mary.discharge->accommodations) {
      if (const auto *c = std::get_if<ContrastRecord>(&a)) {
        contrast = contrast || c->proposition.ToString() == "not from_louisiana(Mary)";
      }
    }
  }
  v.Require(contrast, "(9) did not accommodate that Mary is not from Louisiana");

  const ResolutionResult phys = At(RunFixture("jackphysicist-HE.disc"), "U2.Subj");
  v.Require(phys.discharge && phys.discharge->status == DischargeStatus::kAccommodatedQuestion,
            "(10) discharge is not accommodated-question");
  Context after = FinalContext("jackphysicist-HE.disc");
  int persons = 0;
  for (const EntityId &id : after.attention.background) {
    const Entity &e = after.model.entity(id);
    if (e.accommodated && e.sort == kPersonSort) ++persons;
  }
  v.Require(persons >= 1, "(10) no accommodated PERSON in the background");
}

void Criterion8(Verdict &v) {
  Report r = RunFixture("hit-mary-HE.disc");
  RequireFixture(v, r);
  const ResolutionResult &x = At(r, "U2.Subj");
  v.Require(x.candidates == Ids({"John", "Bill"}), "H is not {John, Bill}");
  v.Require(x.local == Ids({"John", "Bill", "Mary"}), "B is not {John, Bill, Mary}");
  v.Require(x.value == Ids({"John"}), "HE is not John");
}

void Criterion9(Verdict &v) {
  Report tommy = RunFixture("tommy.disc");
  Report jb = RunFixture("johnbill-severely.disc");
  RequireFixture(v, tommy);
  RequireFixture(v, jb);
  const ResolutionResult &t = At(tommy, "U4.Subj");
  v.Require(t.value == Ids({"Billy"}) && t.base.garden_path, "Tommy/Billy is not a Billy garden path");
  const ResolutionResult &j = At(jb, "U2.Subj");
  v.Require(j.value == Ids({"Bill"}) && !j.base.garden_path, "John/Bill is not a plain Bill");
}

std::string Criterion10(Verdict &v) {
  using namespace centering::testing;  // NOLINT
  constexpr std::uint64_t seed = 7919;
  const std::vector<PropertyOutcome> suites = {
      ReversalInvolution(seed),
      IncomparabilityPreserved(seed + 1),
      SingletonFixpoint(seed + 2),
      IndeterminacyPreserved(seed + 3),
      OracleReverseAgrees(seed + 4),
      OracleCombineAgrees(seed + 5),
      HardFilterSound(seed + 6),
      CphIdentity(seed + 7),
  };
  int least = suites.front().cases;
  for (const PropertyOutcome &p : suites) {
    least = std::min(least, p.cases);
    v.Require(p.failures == 0, p.name + " failed: " + p.example);
    v.Require(p.cases >= kMinCases, p.name + " ran only " + std::to_string(p.cases) + " cases");
  }
  return std::to_string(suites.size()) + " suites, >= " + std::to_string(least) + " cases each";
}

struct Criterion {
  int number;
  std::string title;
  std::function<std::string(Verdict &)> check;
};

std::function<std::string(Verdict &)> Plain(void (*f)(Verdict &)) {
  return [f](Verdict &v) {
    f(v);
    return std::string();
  };
}

}  // namespace
}  // namespace centering

int main() {
  using namespace centering;  // NOLINT
  const std::vector<Criterion> criteria = {
      {1, "hit: he = Bill, HE = John via WK override and reversal", Plain(Criterion1)},
      {2, "republican: (Paul, Jim) vs (Jim, Paul), bridging accommodation", Plain(Criterion2)},
      {3, "babar: he ok, HE infelicitous, asymmetry holds", Plain(Criterion3)},
      {4, "home: ATT overrides LF, him = John", Plain(Criterion4)},
      {5, "babar chains: determinate Babar, weak baker", Plain(Criterion5)},
      {6, "Jack and Bob: he and HE ambiguous over {Jack, Bob}", Plain(Criterion6)},
      {7, "Jack: contrast-in-local and accommodated question", Plain(Criterion7)},
      {8, "in front of Mary: H within B, HE = John", Plain(Criterion8)},
      {9, "Tommy/Billy garden path vs John/Bill", Plain(Criterion9)},
      {10, "property suites", Criterion10},
  };
  int failed = 0;
  for (const Criterion &c : criteria) {
    Verdict v;
    std::string note;
    try {
      note = c.check(v);
    } catch (const std::exception &e) {
      v.Require(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.passed() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title;
    if (!note.empty()) std::cout << " (" << note << ")";
    if (!v.passed()) std::cout << " -- " << v.Reasons();
    std::cout << "\n";
    if (!v.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
