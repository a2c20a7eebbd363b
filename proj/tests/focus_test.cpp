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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace centering {
namespace {

using testing::Bind;
using testing::Id;
using testing::Ids;
using testing::MakeEntity;
using testing::MakeUtterance;
using testing::Named;
using testing::Pronoun;

class FocusTest : public ::testing::Test {
 protected:
  Entity john = MakeEntity("John");
  Entity bill = MakeEntity("Bill");
  Entity mary = MakeEntity("Mary", Gender::kFem);
  Entity jack = MakeEntity("Jack");
  Entity babar = MakeEntity("Babar");
  Entity baker = MakeEntity("baker");
  Entity bakery = MakeEntity("bakery", Gender::kNeut, "PLACE");
  Entity pie = MakeEntity("pie", Gender::kNeut, "THING");

  Context HitContext() {
    return advance(Context::Initial({john, bill}),
                   MakeUtterance(1, "hit", {Named("Subj", john), Named("Obj", bill)}));
  }

  Context JackMaryContext() {
    Entity group = MakeEntity("JackMary", Gender::kUnknown, kGroupSort, Number::kPl);
    group.members = {jack.id, mary.id};
    return advance(Context::Initial({jack, mary, group}),
                   MakeUtterance(1, "good_friends", {Named("Subj", group)}));
  }

  Context BabarContext() {
    Context c = Context::Initial({babar, baker, bakery, pie});
    c = advance(c, MakeUtterance(1, "go_to", {Named("Subj", babar), Named("Goal", bakery)}));
    return advance(c, Bind(MakeUtterance(2, "greet", {Pronoun("Subj", "he"),
                                                      Named("Obj", baker)}),
                           0, "Babar"));
  }

  FocusConstraint SubjectFocus(const std::string &pred, EntitySet alternatives) {
    FocusConstraint c;
    c.scope = FocusScope::kPhrase;
    c.pattern = PropositionPattern{pred, {std::nullopt}, Polarity::kPos};
    c.foci = {FocusSlot{0, std::move(alternatives)}};
    return c;
  }
};

TEST_F(FocusTest, StressedHitReversesBase) {
  Utterance u = MakeUtterance(2, "injured", {Pronoun("Subj", "HE", true)});
  PronounSite site{u, 0};
  ResolutionResult r = resolve_stressed(site, HitContext(), testing::CommonsenseRules());
  EXPECT_EQ(r.value, Ids({"John"}));
  EXPECT_EQ(r.final_order, reverse(r.base.order));
  ASSERT_TRUE(r.discharge.has_value());
  EXPECT_EQ(r.discharge->status, DischargeStatus::kContrastInCandidates);
  ASSERT_TRUE(r.discharge->support.has_value());
  EXPECT_TRUE(r.discharge->support->supported());
  EXPECT_EQ(r.felicity, Felicity::kOk);
}

TEST_F(FocusTest, StressedRejectsUnstressed) {
  Utterance u = MakeUtterance(2, "injured", {Pronoun("Subj", "he")});
  EXPECT_THROW(resolve_stressed(PronounSite{u, 0}, HitContext(), RuleSet{}), Error);
}

TEST_F(FocusTest, DischargeContrastInLocal) {
  Context c = JackMaryContext();
  DischargeOutcome d =
      discharge(SubjectFocus("from_louisiana", Ids({"Jack"})), Id("Jack"), c, RuleSet{});
  EXPECT_EQ(d.status, DischargeStatus::kContrastInLocal);
  ASSERT_TRUE(d.contrasting_proposition.has_value());
  EXPECT_EQ(d.contrasting_proposition->ToString(), "not from_louisiana(Mary)");
  ASSERT_EQ(d.accommodations.size(), 1u);
  EXPECT_EQ(Describe(d.accommodations[0]), "contrast not from_louisiana(Mary)");
  EXPECT_EQ(d.alternatives, Ids({"Jack", "Mary"}));
}

TEST_F(FocusTest, DischargeAccommodatedQuestion) {
  Context c = advance(Context::Initial({jack}),
                      MakeUtterance(1, "physicist", {Named("Subj", jack)}));
  DischargeOutcome d =
      discharge(SubjectFocus("from_louisiana", Ids({"Jack"})), Id("Jack"), c, RuleSet{});
  EXPECT_EQ(d.status, DischargeStatus::kAccommodatedQuestion);
  ASSERT_EQ(d.accommodations.size(), 2u);
  EXPECT_EQ(Describe(d.accommodations[0]), "question from_louisiana(?)?");
  const auto &set = std::get<EntitySetRecord>(d.accommodations[1]);
  ASSERT_EQ(set.entities.size(), 1u);
  EXPECT_EQ(set.entities[0].sort, kPersonSort);
  EXPECT_GE(d.alternatives.size(), 2u);
}

TEST_F(FocusTest, AccommodatedPersonCountIsConfigurable) {
  Context c = advance(Context::Initial({jack}),
                      MakeUtterance(1, "physicist", {Named("Subj", jack)}));
  DischargeOptions opts;
  opts.accommodated_entity_count = 3;
  DischargeOutcome d = discharge(SubjectFocus("from_louisiana", Ids({"Jack"})), Id("Jack"), c,
                                 RuleSet{}, opts);
  EXPECT_EQ(std::get<EntitySetRecord>(d.accommodations[1]).entities.size(), 3u);
}

TEST_F(FocusTest, DischargeInfelicitousBabar) {
  Context c = BabarContext();
  FocusConstraint fc;
  fc.scope = FocusScope::kPhrase;
  fc.pattern = PropositionPattern{"point_at", {std::nullopt, Id("pie")}, Polarity::kPos};
  fc.foci = {FocusSlot{0, Ids({"Babar", "baker"})}};
  DischargeOutcome d = discharge(fc, Id("baker"), c, RuleSet{});
  EXPECT_EQ(d.status, DischargeStatus::kInfelicitous);
  EXPECT_TRUE(d.accommodations.empty());
}

TEST_F(FocusTest, DischargeRequiresChosenAmongAlternatives) {
  EXPECT_THROW(discharge(SubjectFocus("p", Ids({"Jack"})), Id("Mary"), JackMaryContext(),
                         RuleSet{}),
               Error);
}

TEST_F(FocusTest, DischargeByAssertedNegation) {
  Context c = HitContext();
  c.model = WithFact(c.model, Proposition{"tall", {Id("Bill")}, Polarity::kNeg});
  DischargeOutcome d = discharge(SubjectFocus("tall", Ids({"John", "Bill"})), Id("John"), c,
                                 RuleSet{});
  EXPECT_EQ(d.status, DischargeStatus::kContrastInCandidates);
  EXPECT_EQ(d.support->status, DerivationStatus::kAsserted);
}

TEST_F(FocusTest, DischargeIsPure) {
  Context c = JackMaryContext();
  Context copy = c;
  discharge(SubjectFocus("from_louisiana", Ids({"Jack"})), Id("Jack"), c, RuleSet{});
  EXPECT_EQ(c, copy);
}

TEST_F(FocusTest, UnambiguousStressedKeepsValue) {
  Utterance stressed = MakeUtterance(2, "from_louisiana", {Pronoun("Subj", "HE", true)});
  Utterance plain = MakeUtterance(2, "from_louisiana", {Pronoun("Subj", "he")});
  Context c = JackMaryContext();
  ResolutionResult s = resolve_stressed(PronounSite{stressed, 0}, c, RuleSet{});
  ResolutionResult p = resolve_unstressed(PronounSite{plain, 0}, c, RuleSet{});
  EXPECT_EQ(s.value, p.value);
  EXPECT_EQ(s.value, Ids({"Jack"}));
}

TEST_F(FocusTest, UtteranceResolutionRepublican) {
  Entity paul = MakeEntity("Paul");
  Entity jim = MakeEntity("Jim");
  Context c = advance(Context::Initial({paul, jim}),
                      MakeUtterance(1, "call_republican",
                                    {Named("Subj", paul), Named("Obj", jim)}));
  Utterance u = MakeUtterance(2, "insult", {Pronoun("Subj", "HE", true),
                                            Pronoun("Obj", "HIM", true)});
  UtteranceResolution res = resolve_utterance(u, c, RuleSet{});
  ASSERT_EQ(res.results.size(), 2u);
  EXPECT_EQ(res.results[0].value, Ids({"Jim"}));
  EXPECT_EQ(res.results[1].value, Ids({"Paul"}));
  ASSERT_TRUE(res.discharge.has_value());
  EXPECT_EQ(res.discharge->status, DischargeStatus::kContrastInCandidates);
  ASSERT_EQ(res.discharge->accommodations.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<BridgingRecord>(res.discharge->accommodations[0]));
  EXPECT_EQ(PropositionOf(res.resolved.lf).ToString(), "insult(Jim,Paul)");
}

TEST_F(FocusTest, UtteranceResolutionDropsFailures) {
  Utterance u = MakeUtterance(2, "see", {Pronoun("Subj", "he"),
                                         Pronoun("Obj", "she", false, Gender::kFem)});
  UtteranceResolution res = resolve_utterance(u, HitContext(), RuleSet{});
  ASSERT_EQ(res.errors.size(), 1u);
  EXPECT_EQ(res.errors[0].position, "U2.Obj");
  EXPECT_EQ(res.resolved.lf.args.size(), 1u);
  EXPECT_TRUE(res.resolved.lf.resolved());
}

TEST_F(FocusTest, InterpretAccommodatesIntoBackground) {
  Context c = advance(Context::Initial({jack}),
                      MakeUtterance(1, "physicist", {Named("Subj", jack)}));
  Utterance u = MakeUtterance(2, "from_louisiana", {Pronoun("Subj", "HE", true)});
  Interpretation i = interpret(c, u, RuleSet{});
  EXPECT_EQ(i.output.attention.local_set(), Ids({"Jack"}));
  bool found = false;
  for (const EntityId &b : i.output.attention.background) {
    if (i.output.model.entity(b).accommodated && i.output.model.entity(b).sort == kPersonSort) {
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST_F(FocusTest, AsymmetryCheck) {
  ResolutionResult ok;
  ok.felicity = Felicity::kOk;
  ResolutionResult bad;
  bad.felicity = Felicity::kInfelicitous;
  EXPECT_TRUE(check_asymmetry(ok, bad));
  EXPECT_TRUE(check_asymmetry(ok, ok));
  EXPECT_FALSE(check_asymmetry(bad, ok));
}

}  // namespace
}  // namespace centering
