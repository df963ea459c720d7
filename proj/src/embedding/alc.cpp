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

#include "../syntax/lexer.hpp"
#include "modalhol/embedding.hpp"

namespace modalhol::embedding {

using syntax::detail::Tok;
using syntax::detail::Token;

struct AlcConcept::Node {
  Kind kind;
  std::string name;
  std::optional<AlcConcept> lhs;
  std::optional<AlcConcept> rhs;
};

AlcConcept AlcConcept::top() { return AlcConcept(std::make_shared<const Node>(Node{Kind::Top})); }
AlcConcept AlcConcept::bottom() {
  return AlcConcept(std::make_shared<const Node>(Node{Kind::Bottom}));
}
AlcConcept AlcConcept::atomic(std::string name) {
  return AlcConcept(std::make_shared<const Node>(Node{Kind::Atomic, std::move(name)}));
}
AlcConcept AlcConcept::negation(AlcConcept c) {
  return AlcConcept(std::make_shared<const Node>(Node{Kind::Not, "", std::move(c)}));
}
AlcConcept AlcConcept::conj(AlcConcept c, AlcConcept d) {
  return AlcConcept(std::make_shared<const Node>(Node{Kind::And, "", std::move(c), std::move(d)}));
}
AlcConcept AlcConcept::disj(AlcConcept c, AlcConcept d) {
  return AlcConcept(std::make_shared<const Node>(Node{Kind::Or, "", std::move(c), std::move(d)}));
}
AlcConcept AlcConcept::exists(std::string role, AlcConcept c) {
  return AlcConcept(std::make_shared<const Node>(Node{Kind::Exists, std::move(role), std::move(c)}));
}
AlcConcept AlcConcept::forall(std::string role, AlcConcept c) {
  return AlcConcept(std::make_shared<const Node>(Node{Kind::Forall, std::move(role), std::move(c)}));
}

AlcConcept::Kind AlcConcept::kind() const { return node_->kind; }
const std::string& AlcConcept::name() const { return node_->name; }
const AlcConcept& AlcConcept::lhs() const { return *node_->lhs; }
const AlcConcept& AlcConcept::rhs() const { return *node_->rhs; }

namespace {

bool reserved_word(const std::string& w) {
  return w == "and" || w == "or" || w == "not" || w == "some" || w == "all" || w == "top" ||
         w == "bot";
}

class AlcParser {
 public:
  explicit AlcParser(const std::string& text) : toks_(syntax::detail::tokenize(text)) {}

  AlcConcept run() {
    AlcConcept c = disjunction();
    if (peek().kind != Tok::End) fail("unexpected trailing input");
    return c;
  }

 private:
  const Token& peek() const { return toks_[std::min(pos_, toks_.size() - 1)]; }
  bool word(const char* w) {
    if (peek().kind == Tok::Ident && peek().text == w) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(peek().line, peek().col, msg);
  }

  AlcConcept disjunction() {
    AlcConcept c = conjunction();
    while (word("or")) c = AlcConcept::disj(c, conjunction());
    return c;
  }

  AlcConcept conjunction() {
    AlcConcept c = unary();
    while (word("and")) c = AlcConcept::conj(c, unary());
    return c;
  }

  AlcConcept unary() {
    if (++depth_ > 256) fail("nesting too deep");
    AlcConcept c = unary_inner();
    --depth_;
    return c;
  }

  AlcConcept unary_inner() {
    if (word("not")) return AlcConcept::negation(unary());
    if (word("top")) return AlcConcept::top();
    if (word("bot")) return AlcConcept::bottom();
    bool some = word("some");
    if (some || word("all")) {
      if (peek().kind != Tok::Ident || reserved_word(peek().text)) fail("expected a role name");
      std::string role = toks_[pos_++].text;
      if (peek().kind != Tok::Dot) fail("expected '.'");
      ++pos_;
      AlcConcept body = unary();
      return some ? AlcConcept::exists(role, body) : AlcConcept::forall(role, body);
    }
    if (peek().kind == Tok::LParen) {
      ++pos_;
      AlcConcept c = disjunction();
      if (peek().kind != Tok::RParen) fail("expected ')'");
      ++pos_;
      return c;
    }
    if (peek().kind != Tok::Ident || reserved_word(peek().text)) fail("expected a concept");
    return AlcConcept::atomic(toks_[pos_++].text);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  int depth_ = 0;
};

std::string render(const AlcConcept& c, int ctx) {
  auto wrap = [&](std::string s, int own) { return own < ctx ? "(" + s + ")" : s; };
  switch (c.kind()) {
    case AlcConcept::Kind::Top: return "top";
    case AlcConcept::Kind::Bottom: return "bot";
    case AlcConcept::Kind::Atomic: return c.name();
    case AlcConcept::Kind::Not: return "not " + render(c.lhs(), 2);
    case AlcConcept::Kind::And: return wrap(render(c.lhs(), 1) + " and " + render(c.rhs(), 2), 1);
    case AlcConcept::Kind::Or: return wrap(render(c.lhs(), 0) + " or " + render(c.rhs(), 1), 0);
    case AlcConcept::Kind::Exists: return "some " + c.name() + ". " + render(c.lhs(), 2);
    case AlcConcept::Kind::Forall: return "all " + c.name() + ". " + render(c.lhs(), 2);
  }
  return "?";
}

}  // namespace

AlcConcept parse_alc(const std::string& text) { return AlcParser(text).run(); }

std::pair<AlcConcept, AlcConcept> parse_subsumption(const std::string& text) {
  size_t at = text.find("[=");
  if (at == std::string::npos) throw SyntaxError(1, 1, "expected 'C [= D'");
  return {parse_alc(text.substr(0, at)), parse_alc(text.substr(at + 2))};
}

std::string to_string(const AlcConcept& c) { return render(c, 0); }

syntax::Formula translate_alc(const AlcConcept& c) {
  using syntax::Formula;
  switch (c.kind()) {
    case AlcConcept::Kind::Top: return Formula::top();
    case AlcConcept::Kind::Bottom: return Formula::bottom();
    case AlcConcept::Kind::Atomic: return Formula::atom(c.name());
    case AlcConcept::Kind::Not: return Formula::negation(translate_alc(c.lhs()));
    case AlcConcept::Kind::And: return Formula::conj(translate_alc(c.lhs()), translate_alc(c.rhs()));
    case AlcConcept::Kind::Or: return Formula::disj(translate_alc(c.lhs()), translate_alc(c.rhs()));
    case AlcConcept::Kind::Exists: return Formula::dia(c.name(), translate_alc(c.lhs()));
    case AlcConcept::Kind::Forall: return Formula::box(c.name(), translate_alc(c.lhs()));
  }
  return Formula::top();
}

syntax::Formula translate_subsumption(const AlcConcept& sub, const AlcConcept& super) {
  return syntax::Formula::implies(translate_alc(sub), translate_alc(super));
}

namespace {

void check_symbols(const AlcConcept& c, const syntax::Declarations& d, const std::string& where) {
  switch (c.kind()) {
    case AlcConcept::Kind::Atomic: {
      auto s = d.constant_sort(c.name());
      if (!s) throw Error(ErrorCode::UnknownSymbol, where + ": concept '" + c.name() + "' not declared");
      if (*s != syntax::Sort::prop())
        throw Error(ErrorCode::SortError, where + ": concept '" + c.name() + "' must have sort o");
      return;
    }
    case AlcConcept::Kind::Exists:
    case AlcConcept::Kind::Forall:
      if (!d.has_index(c.name()))
        throw Error(ErrorCode::UnknownSymbol, where + ": role '" + c.name() + "' is not an index");
      check_symbols(c.lhs(), d, where);
      return;
    case AlcConcept::Kind::Not: check_symbols(c.lhs(), d, where); return;
    case AlcConcept::Kind::And:
    case AlcConcept::Kind::Or:
      check_symbols(c.lhs(), d, where);
      check_symbols(c.rhs(), d, where);
      return;
    default: return;
  }
}

}  // namespace

void resolve_subsumptions(syntax::ProblemFile& p) {
  for (const auto& s : p.subsumptions) {
    std::pair<AlcConcept, AlcConcept> cd = [&] {
      try {
        return parse_subsumption(s.text);
      } catch (const SyntaxError& e) {
        throw SyntaxError(s.line, e.col(), std::string(e.what()));
      }
    }();
    std::string where = "subsumption " + s.name;
    check_symbols(cd.first, p.decls, where);
    check_symbols(cd.second, p.decls, where);
    p.conjectures.push_back({s.name, translate_subsumption(cd.first, cd.second)});
  }
  p.subsumptions.clear();
}

}  // namespace modalhol::embedding
