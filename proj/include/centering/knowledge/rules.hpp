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
/// Defeasible commonsense rules ("if p then normally q") and their text form.
///
/// Grammar, one statement per line, '#' starts a comment:
///
///     rule HIT: hit(X,Y) ~> hurt(Y).
///     rule REP bridging: call_republican(X,Y) ~> insult(X,Y).
///     synonym hurt injured.
///
/// Variables start with an uppercase letter, predicates and constants with a
/// lowercase one. The optional word after the rule id is the rule kind
/// (causal, the default, or bridging).

#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centering/core/errors.hpp"

namespace centering {

struct Term {
  bool variable = false;
  std::string name;

  auto operator<=>(const Term &) const = default;
  bool operator==(const Term &) const = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool operator==(const Atom &) const = default;

  std::string ToString() const {
    std::string out = predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i].name;
    }
    return out + ")";
  }
};

enum class RuleKind { kCausal, kBridging };

struct DefeasibleRule {
  std::string id;
  Atom antecedent;
  Atom consequent;
  RuleKind kind = RuleKind::kCausal;

  bool operator==(const DefeasibleRule &) const = default;

  std::string ToString() const {
    std::string out = "rule " + id;
    if (kind == RuleKind::kBridging) out += " bridging";
    return out + ": " + antecedent.ToString() + " ~> " + consequent.ToString() +
           ".";
  }
};

// Rules plus the predicate synonymy declared alongside them.
class RuleSet {
 public:
  RuleSet() = default;

  const std::vector<DefeasibleRule> &rules() const { return rules_; }
  const std::vector<std::pair<std::string, std::string>> &synonyms() const {
    return synonyms_;
  }
  bool empty() const { return rules_.empty() && synonyms_.empty(); }

  void AddRule(DefeasibleRule rule) {
    for (const DefeasibleRule &r : rules_) {
      if (r.id == rule.id) throw DuplicateRuleId("duplicate rule id " + rule.id);
    }
    rules_.push_back(std::move(rule));
  }

  void AddSynonym(std::string a, std::string b) {
    synonyms_.emplace_back(std::move(a), std::move(b));
  }

  void Merge(const RuleSet &other) {
    for (const DefeasibleRule &r : other.rules_) AddRule(r);
    for (const auto &[a, b] : other.synonyms_) AddSynonym(a, b);
  }

  // Representative of the predicate's synonym class: the lexicographically
  // smallest predicate reachable through synonym declarations.
  std::string Canonical(const std::string &predicate) const {
    std::set<std::string> seen{predicate};
    std::vector<std::string> frontier{predicate};
    while (!frontier.empty()) {
      std::string p = frontier.back();
      frontier.pop_back();
      for (const auto &[a, b] : synonyms_) {
        const std::string *next = p == a ? &b : (p == b ? &a : nullptr);
        if (next && seen.insert(*next).second) frontier.push_back(*next);
      }
    }
    return *seen.begin();
  }

  bool SamePredicate(const std::string &a, const std::string &b) const {
    return a == b || Canonical(a) == Canonical(b);
  }

  std::string ToString() const {
    std::string out;
    for (const DefeasibleRule &r : rules_) out += r.ToString() + "\n";
    for (const auto &[a, b] : synonyms_) out += "synonym " + a + " " + b + ".\n";
    return out;
  }

  bool operator==(const RuleSet &) const = default;

 private:
  std::vector<DefeasibleRule> rules_;
  std::vector<std::pair<std::string, std::string>> synonyms_;
};

namespace detail {

class RuleLexer {
 public:
  enum class Kind { kIdent, kPunct, kArrow, kEnd };

  struct Token {
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
  };

  RuleLexer(std::string_view text, std::size_t first_line)
      : text_(text), line_(first_line) {}

  Token Next() {
    SkipSpaceAndComments();
    Token tok{Kind::kEnd, "", line_, column_};
    if (pos_ >= text_.size()) return tok;
    const std::size_t begin = pos_;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) Advance();
      tok.kind = Kind::kIdent;
      tok.text = std::string(text_.substr(begin, pos_ - begin));
      return tok;
    }
    if (c == '~' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      Advance();
      Advance();
      tok.kind = Kind::kArrow;
      tok.text = "~>";
      return tok;
    }
    if (c == '(' || c == ')' || c == ',' || c == ':' || c == '.') {
      Advance();
      tok.kind = Kind::kPunct;
      tok.text = std::string(1, c);
      return tok;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", line_,
                      column_);
  }

 private:
  static bool IsIdentChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else {
        break;
      }
    }
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
};

class RuleParser {
 public:
  RuleParser(std::string_view text, std::size_t first_line)
      : lexer_(text, first_line) {
    tok_ = lexer_.Next();
  }

  RuleSet Parse() {
    RuleSet rules;
    while (tok_.kind != RuleLexer::Kind::kEnd) {
      if (IsWord("rule")) {
        RuleLexer::Token at = tok_;
        DefeasibleRule rule = ParseRule();
        try {
          rules.AddRule(std::move(rule));
        } catch (const DuplicateRuleId &e) {
          throw DuplicateRuleId(std::to_string(at.line) + ": " + e.what());
        }
      } else if (IsWord("synonym")) {
        Consume();
        std::string a = ExpectPredicate();
        std::string b = ExpectPredicate();
        ExpectPunct(".");
        rules.AddSynonym(std::move(a), std::move(b));
      } else {
        Fail("expected 'rule' or 'synonym'");
      }
    }
    return rules;
  }

 private:
  DefeasibleRule ParseRule() {
    Consume();  // rule
    DefeasibleRule rule;
    if (tok_.kind != RuleLexer::Kind::kIdent) Fail("expected rule id");
    rule.id = tok_.text;
    Consume();
    if (tok_.kind == RuleLexer::Kind::kIdent) {
      if (tok_.text == "bridging") {
        rule.kind = RuleKind::kBridging;
      } else if (tok_.text != "causal") {
        Fail("unknown rule kind '" + tok_.text + "'");
      }
      Consume();
    }
    ExpectPunct(":");
    std::vector<RuleLexer::Token> antecedent_vars;
    rule.antecedent = ParseAtom(&antecedent_vars);
    if (tok_.kind != RuleLexer::Kind::kArrow) Fail("expected '~>'");
    Consume();
    std::vector<RuleLexer::Token> consequent_vars;
    rule.consequent = ParseAtom(&consequent_vars);
    ExpectPunct(".");

    std::set<std::string> bound;
    for (const auto &v : antecedent_vars) bound.insert(v.text);
    for (const auto &v : consequent_vars) {
      if (!bound.count(v.text)) {
        throw SyntaxError("variable " + v.text + " in rule " + rule.id +
                              " is not bound by the antecedent",
                          v.line, v.column);
      }
    }
    return rule;
  }

  Atom ParseAtom(std::vector<RuleLexer::Token> *variables) {
    Atom atom;
    atom.predicate = ExpectPredicate();
    ExpectPunct("(");
    if (!IsPunct(")")) {
      while (true) {
        if (tok_.kind != RuleLexer::Kind::kIdent) Fail("expected a term");
        Term term{std::isupper(static_cast<unsigned char>(tok_.text[0])) != 0,
                  tok_.text};
        if (term.variable) variables->push_back(tok_);
        atom.args.push_back(std::move(term));
        Consume();
        if (IsPunct(",")) {
          Consume();
          continue;
        }
        break;
      }
    }
    ExpectPunct(")");
    return atom;
  }

  std::string ExpectPredicate() {
    if (tok_.kind != RuleLexer::Kind::kIdent ||
        !std::islower(static_cast<unsigned char>(tok_.text[0]))) {
      Fail("expected a lowercase predicate");
    }
    std::string name = tok_.text;
    Consume();
    return name;
  }

  void ExpectPunct(const char *p) {
    if (!IsPunct(p)) Fail(std::string("expected '") + p + "'");
    Consume();
  }

  bool IsWord(const char *w) const {
    return tok_.kind == RuleLexer::Kind::kIdent && tok_.text == w;
  }
  bool IsPunct(const char *p) const {
    return tok_.kind == RuleLexer::Kind::kPunct && tok_.text == p;
  }
  void Consume() { tok_ = lexer_.Next(); }

  [[noreturn]] void Fail(const std::string &message) const {
    std::string found = tok_.kind == RuleLexer::Kind::kEnd
                            ? "end of input"
                            : "'" + tok_.text + "'";
    throw SyntaxError(message + ", found " + found, tok_.line, tok_.column);
  }

  RuleLexer lexer_;
  RuleLexer::Token tok_;
};

}  // namespace detail

// Parses rule-DSL source. `first_line` offsets reported positions when the
// rules are embedded in a larger file.
inline RuleSet parse_rules(std::string_view text, std::size_t first_line = 1) {
  return detail::RuleParser(text, first_line).Parse();
}

}  // namespace centering
