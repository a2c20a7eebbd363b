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

using testing::Id;
using testing::Ids;
using testing::Order;

using Pairs = std::set<StrictPartialOrder::Pair>;

Pairs PairKeys(const StrictPartialOrder &o) {
  Pairs out;
  for (const auto &[p, s] : o.pairs()) out.insert(p);
  return out;
}

TEST(AddPair, SingleEdge) {
  StrictPartialOrder o(Ids({"a", "b"}));
  EXPECT_EQ(PairKeys(add_pair(o, Id("a"), Id("b"))), (Pairs{{Id("a"), Id("b")}}));
}

TEST(AddPair, ClosesTransitively) {
  auto o = add_pair(Order({"a", "b", "c"}, {{"a", "b"}}), Id("b"), Id("c"));
  EXPECT_EQ(PairKeys(o), (Pairs{{Id("a"), Id("b")}, {Id("b"), Id("c")}, {Id("a"), Id("c")}}));
}

TEST(AddPair, RejectsCycle) {
  EXPECT_THROW(add_pair(Order({"a", "b"}, {{"a", "b"}}), Id("b"), Id("a")), CycleError);
  EXPECT_THROW(add_pair(Order({"a", "b"}, {}), Id("a"), Id("a")), CycleError);
}

TEST(AddPair, RejectsUnknownElement) {
  EXPECT_THROW(add_pair(Order({"a", "b"}, {}), Id("a"), Id("z")), UnknownEntity);
}

TEST(AddPair, InducedPairsCarryPathSupport) {
  auto o = Order({"a", "b", "c"}, {{"a", "b"}}, {PreferenceClass::kATT});
  o = o.WithPair(Id("b"), Id("c"), {PreferenceClass::kLF});
  EXPECT_EQ(o.support(Id("a"), Id("c")),
            (SupportSet{PreferenceClass::kATT, PreferenceClass::kLF}));
  EXPECT_EQ(o.support(Id("b"), Id("c")), SupportSet{PreferenceClass::kLF});
}

TEST(Reverse, SwapsPairs) {
  auto o = Order({"Bill", "John"}, {{"Bill", "John"}}, {PreferenceClass::kWK});
  auto r = reverse(o);
  EXPECT_EQ(PairKeys(r), (Pairs{{Id("John"), Id("Bill")}}));
  EXPECT_EQ(r.support(Id("John"), Id("Bill")), SupportSet{PreferenceClass::kWK});
}

TEST(Reverse, SingletonIsFixed) {
  StrictPartialOrder o(Ids({"Jack"}));
  EXPECT_EQ(reverse(o), o);
}

TEST(Reverse, Involution) {
  auto o = Order({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"d", "c"}});
  EXPECT_EQ(reverse(reverse(o)), o);
}

TEST(Maximal, TopOfChain) {
  EXPECT_EQ(maximal(Order({"John", "Bill"}, {{"John", "Bill"}})), Ids({"John"}));
}

TEST(Maximal, IncomparableElementsAreAllMaximal) {
  EXPECT_EQ(maximal(Order({"Jack", "Bob"}, {})), Ids({"Jack", "Bob"}));
}

TEST(Maximal, Fork) {
  EXPECT_EQ(maximal(Order({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}})), Ids({"a"}));
}

TEST(Maximal, EmptyCarrierThrows) {
  EXPECT_THROW(maximal(StrictPartialOrder()), EmptyCarrier);
}

TEST(Restrict, DropsFilteredElement) {
  auto o = Order({"John", "Bill", "Mary"}, {{"John", "Bill"}, {"Bill", "Mary"}});
  auto r = restrict(o, Ids({"John", "Bill"}));
  EXPECT_EQ(r.carrier(), Ids({"John", "Bill"}));
  EXPECT_EQ(PairKeys(r), (Pairs{{Id("John"), Id("Bill")}}));
}

TEST(Restrict, FullCarrierIsIdentity) {
  auto o = Order({"a", "b", "c"}, {{"a", "b"}});
  EXPECT_EQ(restrict(o, o.carrier()), o);
}

TEST(Restrict, EmptySubset) {
  auto r = restrict(Order({"a", "b"}, {{"a", "b"}}), EntitySet{});
  EXPECT_TRUE(r.empty());
  EXPECT_TRUE(r.pairs().empty());
}

TEST(Restrict, NotASubset) {
  EXPECT_THROW(restrict(Order({"a"}, {}), Ids({"z"})), NotASubset);
}

TEST(FromClosedPairs, RejectsOpenPairs) {
  StrictPartialOrder::PairMap pairs{{{Id("a"), Id("b")}, {}}, {{Id("b"), Id("c")}, {}}};
  EXPECT_THROW(StrictPartialOrder::FromClosedPairs(Ids({"a", "b", "c"}), pairs), CycleError);
}

TEST(CoveringPairs, HasseDiagram) {
  auto o = Order({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(o.CoveringPairs().size(), 2u);
}

TEST(SupportSet, Spelling) {
  EXPECT_EQ((SupportSet{PreferenceClass::kLF, PreferenceClass::kWK}).ToString(), "WK+LF");
  EXPECT_EQ(SupportSet{}.ToString(), "");
}

TEST(Entity, GroupMustBePlural) {
  Entity g = testing::MakeEntity("JB", Gender::kUnknown, kGroupSort, Number::kSg);
  EXPECT_THROW(ValidateEntity(g), BadAgreement);
  g.agreement.number = Number::kPl;
  g.members = {Id("Jack"), Id("Bob")};
  EXPECT_NO_THROW(ValidateEntity(g));
}

TEST(Entity, OnlyGroupsHaveMembers) {
  Entity e = testing::MakeEntity("Jack");
  e.members = {Id("Bob")};
  EXPECT_THROW(ValidateEntity(e), BadAgreement);
}

TEST(Mention, OnlyPronounsTakeStress) {
  Mention m;
  m.surface = "John";
  m.kind = MentionKind::kDefiniteNp;
  m.referent = Id("John");
  m.stressed = true;
  EXPECT_THROW(ValidateMention(m), Error);
  m.stressed = false;
  EXPECT_NO_THROW(ValidateMention(m));
  m.referent.reset();
  EXPECT_THROW(ValidateMention(m), UnresolvedMention);
}

TEST(LogicalForm, CoreFunctionsAppearOnce) {
  auto john = testing::MakeEntity("John");
  auto bill = testing::MakeEntity("Bill");
  LogicalForm lf{"hit", {testing::Named("Subj", john), testing::Named("Subj", bill)}};
  EXPECT_THROW(ValidateLogicalForm(lf), Error);
  lf.args[1] = testing::Named("Loc", bill);
  lf.args.push_back(testing::Named("Loc", john));
  EXPECT_NO_THROW(ValidateLogicalForm(lf));
}

TEST(Proposition, CoreArgumentsInFunctionOrder) {
  auto john = testing::MakeEntity("John");
  auto bill = testing::MakeEntity("Bill");
  auto mary = testing::MakeEntity("Mary", Gender::kFem);
  LogicalForm lf{"hit",
                 {testing::Named("Obj", bill), testing::Named("Loc", mary),
                  testing::Named("Subj", john)}};
  Proposition p = PropositionOf(lf);
  EXPECT_EQ(p.ToString(), "hit(John,Bill)");
  EXPECT_EQ(p.Negated().ToString(), "not hit(John,Bill)");
}

TEST(Proposition, UnresolvedPronounThrows) {
  LogicalForm lf{"injured", {testing::Pronoun("Subj", "he")}};
  EXPECT_THROW(PropositionOf(lf), UnresolvedMention);
}

TEST(GrammaticalFunction, RolesOutsideTheCoreAreOthers) {
  EXPECT_EQ(GfForRole("Subj"), GrammaticalFunction::kSubject);
  EXPECT_EQ(GfForRole("Obj2"), GrammaticalFunction::kObject2);
  EXPECT_EQ(GfForRole("Loc"), GrammaticalFunction::kOther);
  EXPECT_LT(Rank(GrammaticalFunction::kObject), Rank(GrammaticalFunction::kObject2));
}

}  // namespace
}  // namespace centering
