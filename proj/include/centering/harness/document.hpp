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
/// Annotated discourse documents.
///
/// Line format, '#' starts a comment:
///
///     title John hit Bill
///     entity John masc sg PERSON
///     entity JB neut pl GROUP members=Jack,Bob name=Jack-and-Bob
///     rule HIT: hit(X,Y) ~> hurt(Y).
///     rules-file commonsense.rules
///     segment
///     utterance U1 pred=hit Subj=John:name Obj=Bill:name
///     utterance U2 pred=injured Subj=?HE:pron:masc:sg:stressed coherence=Cause-Effect
///     expect U2.Subj = John felicity=ok discharge=contrast-in-candidates
///
/// Non-pronominal arguments are `Role=<entity>:<name|def|indef>`. Pronominal
/// ones are `Role=?<surface>:<pron|zero>:<gender>:<number>[:<person>][:stressed]`.
/// A document whose first character is '{' is read as the JSON mirror of the
/// same schema (see ToJson).

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "centering/core/errors.hpp"
#include "centering/core/types.hpp"
#include "centering/knowledge/rules.hpp"
#include "centering/resolver/result.hpp"

namespace centering {

struct Expectation {
  std::string position;  // "U2.Subj"
  std::optional<EntitySet> value;
  std::optional<Felicity> felicity;
  std::optional<DischargeStatus> discharge;  // nullopt: not checked
  bool expect_no_discharge = false;          // discharge=none
  std::optional<bool> garden_path;
  std::optional<bool> weak;

  bool operator==(const Expectation &) const = default;
};

struct DiscourseDocument {
  std::string title;
  std::vector<Entity> entities;
  std::vector<Utterance> utterances;
  RuleSet rules;                        // inline rules
  std::vector<std::string> rule_files;  // relative to the document
  std::vector<Expectation> expectations;

  bool operator==(const DiscourseDocument &) const = default;
};

namespace detail {

inline const char *GenderWord(Gender g) {
  switch (g) {
    case Gender::kMasc: return "masc";
    case Gender::kFem: return "fem";
    case Gender::kNeut: return "neut";
    case Gender::kUnknown: return "unknown";
  }
  return "?";
}

inline std::optional<Gender> ParseGender(std::string_view w) {
  if (w == "masc") return Gender::kMasc;
  if (w == "fem") return Gender::kFem;
  if (w == "neut") return Gender::kNeut;
  if (w == "unknown") return Gender::kUnknown;
  return std::nullopt;
}

inline std::optional<Number> ParseNumber(std::string_view w) {
  if (w == "sg") return Number::kSg;
  if (w == "pl") return Number::kPl;
  return std::nullopt;
}

inline const char *KindWord(MentionKind k) {
  switch (k) {
    case MentionKind::kZeroPronominal: return "zero";
    case MentionKind::kPronoun: return "pron";
    case MentionKind::kDefiniteNp: return "def";
    case MentionKind::kIndefiniteNp: return "indef";
  }
  return "?";
}

// "name" is accepted as a synonym of "def" on input.
inline std::optional<MentionKind> ParseKind(std::string_view w) {
  if (w == "zero") return MentionKind::kZeroPronominal;
  if (w == "pron") return MentionKind::kPronoun;
  if (w == "def" || w == "name") return MentionKind::kDefiniteNp;
  if (w == "indef") return MentionKind::kIndefiniteNp;
  return std::nullopt;
}

inline std::optional<Felicity> ParseFelicity(std::string_view w) {
  for (Felicity f : {Felicity::kOk, Felicity::kAmbiguous, Felicity::kInfelicitous,
                     Felicity::kGardenPath}) {
    if (w == FelicityName(f)) return f;
  }
  return std::nullopt;
}

inline std::optional<DischargeStatus> ParseDischarge(std::string_view w) {
  for (DischargeStatus s :
       {DischargeStatus::kContrastInCandidates, DischargeStatus::kContrastInLocal,
        DischargeStatus::kAccommodatedQuestion, DischargeStatus::kInfelicitous}) {
    if (w == DischargeName(s)) return s;
  }
  return std::nullopt;
}

inline std::vector<std::string> SplitOn(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    std::size_t end = s.find(sep, begin);
    out.emplace_back(s.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return out;
}

struct Word {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Word> Words(std::string_view line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t begin = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(begin, i - begin)), begin + 1});
  }
  return out;
}

class DocumentParser {
 public:
  DiscourseDocument Parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t begin = 0;
    bool next_segment = false;
    while (begin <= text.size()) {
      std::size_t end = text.find('\n', begin);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(begin, end - begin);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      line_ = line_no;
      ParseLine(line, next_segment);
      begin = end + 1;
    }
    if (doc_.utterances.empty()) {
      throw SyntaxError("document has no utterances", line_no, 0);
    }
    if (next_segment) throw SyntaxError("segment marker after the last utterance", line_no, 0);
    return std::move(doc_);
  }

 private:
  [[noreturn]] void Fail(const std::string &msg, std::size_t column = 0) const {
    throw SyntaxError(msg, line_, column);
  }

  void ParseLine(std::string_view line, bool &next_segment) {
    std::vector<Word> w = Words(line);
    if (w.empty()) return;
    const std::string &head = w[0].text;
    if (head == "title") {
      std::size_t start = w.size() > 1 ? w[1].column - 1 : line.size();
      std::string_view rest = line.substr(start);
      std::size_t hash = rest.find('#');
      rest = rest.substr(0, hash);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) {
        rest.remove_suffix(1);
      }
      doc_.title = std::string(rest);
    } else if (head == "entity") {
      ParseEntity(w);
    } else if (head == "rule" || head == "synonym") {
      doc_.rules.Merge(parse_rules(line, line_));
    } else if (head == "rules-file") {
      if (w.size() != 2) Fail("rules-file takes one path", w[0].column);
      doc_.rule_files.push_back(w[1].text);
    } else if (head == "segment") {
      if (w.size() != 1) Fail("segment takes no arguments", w[1].column);
      next_segment = true;
    } else if (head == "utterance") {
      ParseUtterance(w, next_segment);
      next_segment = false;
    } else if (head == "expect") {
      ParseExpectation(w);
    } else {
      Fail("unknown statement '" + head + "'", w[0].column);
    }
  }

  void ParseEntity(const std::vector<Word> &w) {
    if (w.size() < 5) Fail("entity needs <id> <gender> <number> <SORT>", w[0].column);
    Entity e;
    e.id = EntityId(w[1].text);
    e.name = w[1].text;
    if (declared_.count(e.id)) Fail("entity " + e.id.value + " declared twice", w[1].column);
    auto g = ParseGender(w[2].text);
    if (!g) throw BadAgreement(Where(w[2]) + "unknown gender '" + w[2].text + "'");
    auto n = ParseNumber(w[3].text);
    if (!n) throw BadAgreement(Where(w[3]) + "unknown number '" + w[3].text + "'");
    e.agreement.gender = *g;
    e.agreement.number = *n;
    e.sort = w[4].text;
    for (std::size_t i = 5; i < w.size(); ++i) {
      auto [key, value] = KeyValue(w[i]);
      if (key == "person") {
        e.agreement.person = ParsePerson(w[i], value);
      } else if (key == "members") {
        for (const std::string &m : SplitOn(value, ',')) {
          EntityId id(m);
          if (!declared_.count(id)) {
            throw UndeclaredEntity(Where(w[i]) + "member " + m + " is not declared");
          }
          e.members.push_back(id);
        }
      } else if (key == "name") {
        e.name = value;
      } else {
        Fail("unknown entity attribute '" + key + "'", w[i].column);
      }
    }
    try {
      ValidateEntity(e);
    } catch (const BadAgreement &err) {
      throw BadAgreement(Where(w[1]) + err.what());
    }
    declared_[e.id] = e;
    doc_.entities.push_back(std::move(e));
  }

  void ParseUtterance(const std::vector<Word> &w, bool segment) {
    if (w.size() < 3) Fail("utterance needs a label and pred=", w[0].column);
    Utterance u;
    u.index = doc_.utterances.size() + 1;
    u.label = w[1].text;
    u.segment_initial = segment;
    for (const Utterance &prev : doc_.utterances) {
      if (prev.label == u.label) Fail("utterance " + u.label + " declared twice", w[1].column);
    }
    bool have_pred = false;
    for (std::size_t i = 2; i < w.size(); ++i) {
      if (w[i].text == "neg") {
        u.lf.polarity = Polarity::kNeg;
        continue;
      }
      auto [key, value] = KeyValue(w[i]);
      if (key == "pred") {
        if (value.empty()) Fail("empty predicate", w[i].column);
        u.lf.predicate = value;
        have_pred = true;
      } else if (key == "coherence") {
        u.coherence = value;
      } else {
        u.lf.args.push_back(ParseArgument(w[i], key, value));
      }
    }
    if (!have_pred) Fail("utterance " + u.label + " has no pred=", w[0].column);
    try {
      ValidateLogicalForm(u.lf);
    } catch (const SyntaxError &) {
      throw;
    } catch (const Error &err) {
      Fail(err.what(), w[0].column);
    }
    doc_.utterances.push_back(std::move(u));
  }

  Argument ParseArgument(const Word &word, const std::string &role,
                         const std::string &value) {
    Argument arg;
    arg.role = role;
    Mention &m = arg.mention;
    m.gf = GfForRole(role);
    std::vector<std::string> parts = SplitOn(value, ':');
    if (parts.size() < 2) Fail("argument needs <ref>:<kind>", word.column);
    auto kind = ParseKind(parts[1]);
    if (!kind) Fail("unknown mention kind '" + parts[1] + "'", word.column);
    m.kind = *kind;
    if (!parts[0].empty() && parts[0][0] == '?') {
      if (!IsPronominal(m.kind)) Fail("'?' marks pronominals only", word.column);
      m.surface = parts[0].substr(1);
      if (parts.size() < 4) {
        throw BadAgreement(Where(word) + "pronoun needs gender and number");
      }
      auto g = ParseGender(parts[2]);
      if (!g) throw BadAgreement(Where(word) + "unknown gender '" + parts[2] + "'");
      auto n = ParseNumber(parts[3]);
      if (!n) throw BadAgreement(Where(word) + "unknown number '" + parts[3] + "'");
      m.agreement = Agreement{*g, *n, 3};
      for (std::size_t i = 4; i < parts.size(); ++i) {
        if (parts[i] == "stressed") {
          if (m.kind != MentionKind::kPronoun) Fail("only overt pronouns take stress", word.column);
          m.stressed = true;
        } else {
          m.agreement.person = ParsePerson(word, parts[i]);
        }
      }
      return arg;
    }
    if (IsPronominal(m.kind)) Fail("pronominal argument must start with '?'", word.column);
    if (parts.size() != 2) Fail("unexpected features on a non-pronominal", word.column);
    EntityId id(parts[0]);
    auto it = declared_.find(id);
    if (it == declared_.end()) {
      throw UndeclaredEntity(Where(word) + "entity " + parts[0] + " is not declared");
    }
    m.surface = it->second.name;
    m.agreement = it->second.agreement;
    m.referent = id;
    return arg;
  }

  void ParseExpectation(const std::vector<Word> &w) {
    if (w.size() < 2) Fail("expect needs a position", w[0].column);
    Expectation e;
    e.position = w[1].text;
    std::size_t i = 2;
    if (i < w.size() && w[i].text == "=") {
      if (++i >= w.size()) Fail("expected value after '='", w[i - 1].column);
      EntitySet value;
      for (const std::string &v : SplitOn(w[i].text, ',')) {
        EntityId id(v);
        if (!declared_.count(id)) {
          throw UndeclaredEntity(Where(w[i]) + "entity " + v + " is not declared");
        }
        value.insert(id);
      }
      e.value = value;
      ++i;
    }
    for (; i < w.size(); ++i) {
      auto [key, value] = KeyValue(w[i]);
      if (key == "felicity") {
        e.felicity = ParseFelicity(value);
        if (!e.felicity) Fail("unknown felicity '" + value + "'", w[i].column);
      } else if (key == "discharge") {
        if (value == "none") {
          e.expect_no_discharge = true;
          continue;
        }
        e.discharge = ParseDischarge(value);
        if (!e.discharge) Fail("unknown discharge status '" + value + "'", w[i].column);
      } else if (key == "garden-path") {
        e.garden_path = ParseBool(w[i], value);
      } else if (key == "weak") {
        e.weak = ParseBool(w[i], value);
      } else {
        Fail("unknown expectation '" + key + "'", w[i].column);
      }
    }
    doc_.expectations.push_back(std::move(e));
  }

  std::pair<std::string, std::string> KeyValue(const Word &w) const {
    std::size_t eq = w.text.find('=');
    if (eq == std::string::npos || eq == 0) Fail("expected key=value", w.column);
    return {w.text.substr(0, eq), w.text.substr(eq + 1)};
  }

  int ParsePerson(const Word &w, const std::string &value) const {
    if (value == "1" || value == "2" || value == "3") return value[0] - '0';
    throw BadAgreement(Where(w) + "person must be 1, 2 or 3, got '" + value + "'");
  }

  bool ParseBool(const Word &w, const std::string &value) const {
    if (value == "true") return true;
    if (value == "false") return false;
    Fail("expected true or false", w.column);
  }

  std::string Where(const Word &w) const {
    return "line " + std::to_string(line_) + ":" + std::to_string(w.column) + ": ";
  }

  DiscourseDocument doc_;
  std::map<EntityId, Entity> declared_;
  std::size_t line_ = 0;
};

}  // namespace detail

// Renders the line format. parse_document(render_document(d)) == d.
inline std::string render_document(const DiscourseDocument &doc) {
  std::ostringstream out;
  if (!doc.title.empty()) out << "title " << doc.title << "\n";
  for (const Entity &e : doc.entities) {
    out << "entity " << e.id.value << " " << detail::GenderWord(e.agreement.gender)
        << " " << (e.agreement.number == Number::kSg ? "sg" : "pl") << " " << e.sort;
    if (e.agreement.person != 3) out << " person=" << e.agreement.person;
    if (!e.members.empty()) {
      out << " members=";
      for (std::size_t i = 0; i < e.members.size(); ++i) {
        out << (i ? "," : "") << e.members[i].value;
      }
    }
    if (e.name != e.id.value) out << " name=" << e.name;
    out << "\n";
  }
  out << doc.rules.ToString();
  for (const std::string &f : doc.rule_files) out << "rules-file " << f << "\n";
  for (const Utterance &u : doc.utterances) {
    if (u.segment_initial) out << "segment\n";
    out << "utterance " << u.label << " pred=" << u.lf.predicate;
    if (u.lf.polarity == Polarity::kNeg) out << " neg";
    for (const Argument &a : u.lf.args) {
      const Mention &m = a.mention;
      out << " " << a.role << "=";
      if (IsPronominal(m.kind)) {
        out << "?" << m.surface << ":" << detail::KindWord(m.kind) << ":"
            << detail::GenderWord(m.agreement.gender) << ":"
            << (m.agreement.number == Number::kSg ? "sg" : "pl");
        if (m.agreement.person != 3) out << ":" << m.agreement.person;
        if (m.stressed) out << ":stressed";
      } else {
        out << m.referent->value << ":" << detail::KindWord(m.kind);
      }
    }
    if (u.coherence) out << " coherence=" << *u.coherence;
    out << "\n";
  }
  for (const Expectation &e : doc.expectations) {
    out << "expect " << e.position;
    if (e.value) {
      out << " = ";
      bool first = true;
      for (const EntityId &id : *e.value) {
        out << (first ? "" : ",") << id.value;
        first = false;
      }
    }
    if (e.felicity) out << " felicity=" << FelicityName(*e.felicity);
    if (e.expect_no_discharge) out << " discharge=none";
    if (e.discharge) out << " discharge=" << DischargeName(*e.discharge);
    if (e.garden_path) out << " garden-path=" << (*e.garden_path ? "true" : "false");
    if (e.weak) out << " weak=" << (*e.weak ? "true" : "false");
    out << "\n";
  }
  return out.str();
}

// JSON mirror of the document. Arguments and expectations are stored in their
// line-format spelling; everything else is structured.
inline nlohmann::ordered_json ToJson(const DiscourseDocument &doc) {
  nlohmann::ordered_json j;
  j["title"] = doc.title;
  j["entities"] = nlohmann::ordered_json::array();
  for (const Entity &e : doc.entities) {
    nlohmann::ordered_json je;
    je["id"] = e.id.value;
    je["gender"] = detail::GenderWord(e.agreement.gender);
    je["number"] = e.agreement.number == Number::kSg ? "sg" : "pl";
    je["sort"] = e.sort;
    if (e.agreement.person != 3) je["person"] = e.agreement.person;
    if (!e.members.empty()) {
      je["members"] = nlohmann::ordered_json::array();
      for (const EntityId &m : e.members) je["members"].push_back(m.value);
    }
    if (e.name != e.id.value) je["name"] = e.name;
    j["entities"].push_back(je);
  }
  j["rules"] = doc.rules.ToString();
  j["rule_files"] = doc.rule_files;
  j["utterances"] = nlohmann::ordered_json::array();
  for (const Utterance &u : doc.utterances) {
    DiscourseDocument one;
    one.utterances.push_back(u);
    one.utterances.back().segment_initial = false;
    std::string line = render_document(one);
    line = line.substr(std::string("utterance ").size());
    line.pop_back();
    nlohmann::ordered_json ju;
    ju["segment"] = u.segment_initial;
    ju["line"] = line;
    j["utterances"].push_back(ju);
  }
  j["expectations"] = nlohmann::ordered_json::array();
  for (const Expectation &e : doc.expectations) {
    DiscourseDocument one;
    one.expectations.push_back(e);
    std::string line = render_document(one).substr(std::string("expect ").size());
    line.pop_back();
    j["expectations"].push_back(line);
  }
  return j;
}

namespace detail {

inline DiscourseDocument ParseJsonDocument(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw SyntaxError(e.what(), 1, 0);
  }
  // Rebuild the line format and parse that, so both spellings share one
  // validator.
  std::ostringstream lines;
  try {
    if (j.contains("title")) lines << "title " << j.at("title").get<std::string>() << "\n";
    for (const auto &je : j.value("entities", nlohmann::json::array())) {
      lines << "entity " << je.at("id").get<std::string>() << " "
            << je.at("gender").get<std::string>() << " "
            << je.at("number").get<std::string>() << " "
            << je.at("sort").get<std::string>();
      if (je.contains("person")) lines << " person=" << je.at("person").get<int>();
      if (je.contains("members")) {
        lines << " members=";
        bool first = true;
        for (const auto &m : je.at("members")) {
          lines << (first ? "" : ",") << m.get<std::string>();
          first = false;
        }
      }
      if (je.contains("name")) lines << " name=" << je.at("name").get<std::string>();
      lines << "\n";
    }
    if (j.contains("rules")) lines << j.at("rules").get<std::string>() << "\n";
    for (const auto &f : j.value("rule_files", nlohmann::json::array())) {
      lines << "rules-file " << f.get<std::string>() << "\n";
    }
    for (const auto &ju : j.value("utterances", nlohmann::json::array())) {
      if (ju.value("segment", false)) lines << "segment\n";
      lines << "utterance " << ju.at("line").get<std::string>() << "\n";
    }
    for (const auto &je : j.value("expectations", nlohmann::json::array())) {
      lines << "expect " << je.get<std::string>() << "\n";
    }
  } catch (const nlohmann::json::exception &e) {
    throw SyntaxError(std::string("malformed document: ") + e.what(), 1, 0);
  }
  return DocumentParser().Parse(lines.str());
}

}  // namespace detail

inline DiscourseDocument parse_document(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return detail::ParseJsonDocument(text);
  return detail::DocumentParser().Parse(text);
}

inline std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline rules plus every referenced rule file, resolved against `base_dir`.
inline RuleSet LoadRules(const DiscourseDocument &doc, const std::string &base_dir) {
  RuleSet rules = doc.rules;
  for (const std::string &f : doc.rule_files) {
    std::string path = (f.empty() || f[0] == '/' || base_dir.empty())
                           ? f
                           : base_dir + "/" + f;
    rules.Merge(parse_rules(ReadFile(path)));
  }
  return rules;
}

}  // namespace centering
