/* Copyright 2026 The modalhol Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "parser.hpp"

namespace modalhol::syntax {

namespace {

struct Statement {
  std::string text;
  int line;
};

// Splits the file into statements: a statement starts on a line whose first
// character is not blank and continues over following indented lines.
std::vector<Statement> statements(const std::string& text) {
  std::vector<Statement> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string content = line.substr(0, line.find('#'));
    bool blank = content.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) {
      if (!out.empty()) out.back().text += "\n";
      continue;
    }
    if ((line[0] == ' ' || line[0] == '\t') && !out.empty()) {
      out.back().text += "\n" + line;
    } else {
      out.push_back({line, no});
    }
  }
  return out;
}

bool valid_statement_name(const std::string& n) {
  if (n.empty()) return false;
  return std::all_of(n.begin(), n.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == '\'';
  });
}

const std::set<std::string>& frame_names() {
  static const std::set<std::string> names = {"K", "KB", "KT", "S4", "S5", "S5universal",
                                              "S5equiv", "custom"};
  return names;
}

const std::set<std::string>& frame_flags() {
  static const std::set<std::string> flags = {"reflexive", "symmetric", "transitive", "euclidean",
                                              "universal"};
  return flags;
}

class ProblemParser {
 public:
  ProblemFile run(const std::string& text) {
    for (const auto& st : statements(text)) statement(st);
    if (!have_logic_) throw Error(ErrorCode::UndeclaredLogic, "no 'logic' line");
    return std::move(p_);
  }

 private:
  void statement(const Statement& st) {
    size_t kw_end = st.text.find_first_of(" \t\n");
    std::string kw = st.text.substr(0, kw_end);
    std::string rest = kw_end == std::string::npos ? "" : st.text.substr(kw_end);
    int col = static_cast<int>(kw.size()) + 1;
    if (kw == "logic") logic(rest, st.line, col);
    else if (kw == "indices") indices(rest, st.line, col);
    else if (kw == "const") constant(rest, st.line, col);
    else if (kw == "def") definition(rest, st.line, col);
    else if (kw == "axiom" || kw == "conjecture" || kw == "schema") named(kw, rest, st.line, col);
    else if (kw == "subsumption") subsumption(rest, st.line, col);
    else throw SyntaxError(st.line, 1, "unknown statement '" + kw + "'");
  }

  void require_logic(int line) {
    if (!have_logic_) throw Error(ErrorCode::UndeclaredLogic, "line " + std::to_string(line) +
                                                                   ": formula before 'logic' line");
  }

  void logic(const std::string& rest, int line, int col) {
    if (have_logic_) throw SyntaxError(line, 1, "second 'logic' line");
    detail::Parser p(detail::tokenize(rest, line, col), p_.decls);
    const auto& frame = p.expect(detail::Tok::Ident, "a frame class");
    if (!frame_names().count(frame.text))
      throw Error(ErrorCode::UndeclaredLogic, "unknown logic '" + frame.text + "'");
    p_.logic.frame = frame.text == "S5universal" ? "S5" : frame.text;
    if (frame.text == "custom") {
      p.expect(detail::Tok::LParen, "'('");
      if (p.peek().kind != detail::Tok::RParen) {
        do {
          const auto& flag = p.expect(detail::Tok::Ident, "a frame condition");
          if (!frame_flags().count(flag.text))
            throw Error(ErrorCode::UndeclaredLogic, "unknown frame condition '" + flag.text + "'");
          p_.logic.flags.push_back(flag.text);
        } while (p.accept(detail::Tok::Comma));
      }
      p.expect(detail::Tok::RParen, "')'");
    }
    while (!p.at_end()) {
      const auto& w = p.expect(detail::Tok::Ident, "'constant', 'varying' or 'actual'");
      if (w.text == "constant" || w.text == "varying") {
        p_.logic.domain = w.text;
      } else if (w.text == "actual") {
        p_.logic.actual_world = p.expect(detail::Tok::Ident, "a world name").text;
      } else {
        p.fail(w, "unexpected '" + w.text + "'");
      }
    }
    have_logic_ = true;
  }

  void indices(const std::string& rest, int line, int col) {
    detail::Parser p(detail::tokenize(rest, line, col), p_.decls);
    std::vector<std::string> idx;
    while (!p.at_end()) {
      const auto& t = p.expect(detail::Tok::Ident, "an index name");
      if (std::find(idx.begin(), idx.end(), t.text) != idx.end())
        throw Error(ErrorCode::DuplicateName, "index '" + t.text + "' declared twice");
      idx.push_back(t.text);
    }
    if (idx.empty()) p.fail(p.peek(), "expected at least one index");
    if (used_formulas_) throw SyntaxError(line, 1, "'indices' must precede all formulas");
    p_.decls.indices = std::move(idx);
  }

  void constant(const std::string& rest, int line, int col) {
    detail::Parser p(detail::tokenize(rest, line, col), p_.decls);
    std::vector<detail::Token> names;
    do names.push_back(p.expect(detail::Tok::Ident, "a constant name"));
    while (p.peek().kind == detail::Tok::Ident);
    p.expect(detail::Tok::Colon, "':'");
    Sort s = p.sort();
    p.expect_end();
    for (const auto& n : names) p_.decls.declare_constant(n.text, s);
  }

  void definition(const std::string& rest, int line, int col) {
    require_logic(line);
    used_formulas_ = true;
    detail::Parser p(detail::tokenize(rest, line, col), p_.decls);
    const auto& name = p.expect(detail::Tok::Ident, "a definition name");
    if (is_keyword(name.text)) p.fail(name, "'" + name.text + "' is reserved");
    if (p_.decls.constant_sort(name.text) || p_.decls.definition(name.text))
      throw Error(ErrorCode::DuplicateName, "'" + name.text + "' declared twice");
    std::vector<std::pair<std::string, Sort>> params;
    if (p.peek().kind == detail::Tok::LParen) params = p.binders();
    p.expect(detail::Tok::Assign, "':='");
    Formula body = p.scoped_formula(params);
    p.expect_end();
    p_.decls.definitions.push_back({name.text, std::move(params), std::move(body)});
  }

  void subsumption(const std::string& rest, int line, int col) {
    require_logic(line);
    used_formulas_ = true;
    size_t colon = rest.find(':');
    if (colon == std::string::npos) throw SyntaxError(line, col, "expected 'name:'");
    std::string head = rest.substr(0, colon);
    head.erase(0, head.find_first_not_of(" \t\n"));
    head.erase(head.find_last_not_of(" \t\n") + 1);
    if (!valid_statement_name(head)) throw SyntaxError(line, col, "bad statement name '" + head + "'");
    if (!names_.insert(head).second)
      throw Error(ErrorCode::DuplicateName, "statement '" + head + "' declared twice");
    std::string text;
    std::istringstream lines(rest.substr(colon + 1));
    for (std::string l; std::getline(lines, l);) text += l.substr(0, l.find('#')) + " ";
    text.erase(0, text.find_first_not_of(" \t"));
    text.erase(text.find_last_not_of(" \t\r") + 1);
    p_.subsumptions.push_back({head, text, line});
  }

  void named(const std::string& kw, const std::string& rest, int line, int col) {
    require_logic(line);
    used_formulas_ = true;
    size_t colon = rest.find(':');
    if (colon == std::string::npos) throw SyntaxError(line, col, "expected 'name:'");
    std::string head = rest.substr(0, colon);
    head.erase(0, head.find_first_not_of(" \t\n"));
    head.erase(head.find_last_not_of(" \t\n") + 1);
    std::string hole;
    if (kw == "schema") {
      size_t lp = head.find('('), rp = head.find(')');
      if (lp == std::string::npos || rp == std::string::npos || rp < lp)
        throw SyntaxError(line, col, "expected 'schema name(hole):'");
      hole = head.substr(lp + 1, rp - lp - 1);
      head = head.substr(0, lp);
      head.erase(head.find_last_not_of(" \t") + 1);
      hole.erase(0, hole.find_first_not_of(" \t"));
      hole.erase(hole.find_last_not_of(" \t") + 1);
    }
    if (!valid_statement_name(head)) throw SyntaxError(line, col, "bad statement name '" + head + "'");
    if (!names_.insert(head).second)
      throw Error(ErrorCode::DuplicateName, "statement '" + head + "' declared twice");

    // Position of the formula text for error reporting.
    int fline = line, fcol = col;
    for (size_t i = 0; i <= colon; ++i) {
      if (rest[i] == '\n') {
        ++fline;
        fcol = 1;
      } else {
        ++fcol;
      }
    }
    std::string text = rest.substr(colon + 1);
    if (kw == "schema") {
      Declarations decls = p_.decls;
      decls.declare_constant(hole, Sort::prop());
      detail::Parser fp(detail::tokenize(text, fline, fcol), decls);
      Formula f = fp.formula();
      fp.expect_end();
      p_.schemas.push_back({head, hole, f});
      return;
    }
    detail::Parser fp(detail::tokenize(text, fline, fcol), p_.decls);
    Formula f = fp.formula();
    fp.expect_end();
    (kw == "axiom" ? p_.axioms : p_.conjectures).push_back({head, f});
  }

  ProblemFile p_;
  bool have_logic_ = false;
  bool used_formulas_ = false;
  std::set<std::string> names_;
};

}  // namespace

const NamedFormula* ProblemFile::find(const std::string& name) const {
  for (const auto& c : conjectures)
    if (c.name == name) return &c;
  for (const auto& a : axioms)
    if (a.name == name) return &a;
  return nullptr;
}

const Schema* ProblemFile::find_schema(const std::string& name) const {
  for (const auto& s : schemas)
    if (s.name == name) return &s;
  return nullptr;
}

ProblemFile parse_problem(const std::string& text) { return ProblemParser().run(text); }

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string print_problem(const ProblemFile& p) {
  std::ostringstream out;
  out << "logic " << p.logic.frame;
  if (p.logic.frame == "custom") {
    out << "(";
    for (size_t i = 0; i < p.logic.flags.size(); ++i) out << (i ? ", " : "") << p.logic.flags[i];
    out << ")";
  }
  out << " " << p.logic.domain;
  if (p.logic.actual_world) out << " actual " << *p.logic.actual_world;
  out << "\n";
  if (p.decls.indices != std::vector<std::string>{kDefaultIndex}) {
    out << "indices";
    for (const auto& i : p.decls.indices) out << " " << i;
    out << "\n";
  }
  for (const auto& [n, s] : p.decls.constants) out << "const " << n << " : " << to_string(s) << "\n";
  for (const auto& d : p.decls.definitions) {
    out << "def " << d.name;
    for (const auto& [n, s] : d.params) out << " (" << n << ": " << to_string(s) << ")";
    out << " := " << print_formula(d.body) << "\n";
  }
  for (const auto& a : p.axioms) out << "axiom " << a.name << ": " << print_formula(a.formula) << "\n";
  for (const auto& c : p.conjectures)
    out << "conjecture " << c.name << ": " << print_formula(c.formula) << "\n";
  for (const auto& s : p.schemas)
    out << "schema " << s.name << "(" << s.hole << "): " << print_formula(s.formula) << "\n";
  for (const auto& s : p.subsumptions) out << "subsumption " << s.name << ": " << s.text << "\n";
  return out.str();
}

}  // namespace modalhol::syntax
