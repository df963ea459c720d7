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

#include "parser.hpp"

#include <algorithm>

namespace modalhol::syntax {

namespace {

constexpr int kMaxNesting = 256;

const char* const kKeywords[] = {"not",       "box", "dia", "forall", "exists", "all_free",
                                 "some_free", "E",   "C",   "top",    "bot",    "indiv",
                                 "o"};

}  // namespace

bool is_keyword(const std::string& name) {
  if (name.rfind("K_", 0) == 0) return true;
  return std::any_of(std::begin(kKeywords), std::end(kKeywords),
                     [&](const char* k) { return name == k; });
}

Sort sort_of(const Term& t, const Declarations& decls, const std::map<std::string, Sort>& bound) {
  if (t.kind() == Term::Kind::Lambda) {
    std::vector<Sort> params;
    for (const auto& [n, s] : t.params()) params.push_back(s);
    Sort s = Sort::prop();
    for (auto it = params.rbegin(); it != params.rend(); ++it) s = Sort::arrow(*it, s);
    return s;
  }
  std::optional<Sort> head;
  if (t.kind() == Term::Kind::Var) {
    auto it = bound.find(t.name());
    if (it == bound.end()) throw Error(ErrorCode::UnknownSymbol, "unbound variable " + t.name());
    head = it->second;
  } else {
    head = decls.constant_sort(t.name());
    if (!head) throw Error(ErrorCode::UnknownSymbol, t.name());
  }
  Sort s = *head;
  for (const auto& a : t.args()) {
    if (!s.is_arrow())
      throw Error(ErrorCode::ArityMismatch, t.name() + " applied to too many arguments");
    Sort as = sort_of(a, decls, bound);
    if (as != s.domain())
      throw Error(ErrorCode::SortError, "argument of " + t.name() + " expected " +
                                            to_string(s.domain()) + ", found " + to_string(as));
    s = s.codomain();
  }
  return s;
}

namespace detail {

Parser::Depth::Depth(Parser& parser, const Token& at) : p(parser) {
  if (++p.depth_ > kMaxNesting) {
    --p.depth_;
    p.fail(at, "nesting too deep");
  }
}

const Token& Parser::peek(size_t k) const {
  size_t i = std::min(pos_ + k, toks_.size() - 1);
  return toks_[i];
}

bool Parser::accept(Tok kind) {
  if (peek().kind != kind) return false;
  ++pos_;
  return true;
}

const Token& Parser::expect(Tok kind, const char* what) {
  if (peek().kind != kind)
    fail(peek(), std::string("expected ") + what + ", found " +
                     (peek().kind == Tok::Ident ? "'" + peek().text + "'" : describe(peek().kind)));
  return toks_[pos_++];
}

void Parser::expect_end() {
  if (!at_end())
    fail(peek(), "unexpected " +
                     (peek().kind == Tok::Ident ? "'" + peek().text + "'" : describe(peek().kind)));
}

void Parser::fail(const Token& at, const std::string& message) const {
  throw SyntaxError(at.line, at.col, message);
}

const Sort* Parser::bound_sort(const std::string& name) const {
  for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

Sort Parser::sort() {
  Depth guard(*this, peek());
  Sort s = sort_atom();
  if (accept(Tok::Arrow)) return Sort::arrow(s, sort());
  return s;
}

Sort Parser::sort_atom() {
  if (accept(Tok::LParen)) {
    Sort s = sort();
    expect(Tok::RParen, "')'");
    return s;
  }
  const Token& t = expect(Tok::Ident, "a sort");
  if (t.text == "indiv") return Sort::indiv();
  if (t.text == "o") return Sort::prop();
  fail(t, "unknown sort '" + t.text + "'");
}

std::vector<std::pair<std::string, Sort>> Parser::binders() {
  std::vector<std::pair<std::string, Sort>> out;
  do {
    expect(Tok::LParen, "'(' opening a binder");
    std::vector<const Token*> names;
    do {
      const Token& n = expect(Tok::Ident, "a variable name");
      if (is_keyword(n.text)) fail(n, "'" + n.text + "' is a keyword");
      names.push_back(&n);
    } while (peek().kind == Tok::Ident);
    expect(Tok::Colon, "':'");
    Sort s = sort();
    expect(Tok::RParen, "')'");
    for (const Token* n : names) out.emplace_back(n->text, s);
  } while (peek().kind == Tok::LParen);
  return out;
}

Formula Parser::formula() {
  Depth guard(*this, peek());
  return iff();
}

Formula Parser::scoped_formula(const std::vector<std::pair<std::string, Sort>>& vars) {
  size_t mark = scope_.size();
  for (const auto& v : vars) scope_.push_back(v);
  Formula f = formula();
  scope_.erase(scope_.begin() + static_cast<std::ptrdiff_t>(mark), scope_.end());
  return f;
}

Formula Parser::iff() {
  Formula lhs = implication();
  if (accept(Tok::Iff)) return Formula::iff(lhs, iff());
  return lhs;
}

Formula Parser::implication() {
  Formula lhs = disjunction();
  if (accept(Tok::Arrow)) {
    Depth guard(*this, peek());
    return Formula::implies(lhs, implication());
  }
  return lhs;
}

Formula Parser::disjunction() {
  Formula f = conjunction();
  while (accept(Tok::Bar)) f = Formula::disj(f, conjunction());
  return f;
}

Formula Parser::conjunction() {
  Formula f = unary();
  while (accept(Tok::Amp)) f = Formula::conj(f, unary());
  return f;
}

std::string Parser::index_name() {
  const Token& t = expect(Tok::Ident, "a modality index");
  if (!decls_.has_index(t.text))
    throw Error(ErrorCode::UnknownSymbol, std::to_string(t.line) + ":" + std::to_string(t.col) +
                                              ": undeclared modality index '" + t.text + "'");
  return t.text;
}

Formula Parser::unary() {
  Depth guard(*this, peek());
  const Token& t = peek();
  auto require_default = [&] {
    if (!decls_.has_index(kDefaultIndex))
      throw Error(ErrorCode::UnknownSymbol,
                  std::to_string(t.line) + ":" + std::to_string(t.col) + ": '" + t.text +
                      "' needs the default modality; this logic declares named indices");
  };
  switch (t.kind) {
    case Tok::LBrack: {
      ++pos_;
      std::string idx = index_name();
      expect(Tok::RBrack, "']'");
      return Formula::box(idx, unary());
    }
    case Tok::LAngle: {
      ++pos_;
      std::string idx = index_name();
      expect(Tok::RAngle, "'>'");
      return Formula::dia(idx, unary());
    }
    case Tok::LParen: {
      ++pos_;
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    case Tok::Ident:
      break;
    default:
      fail(t, "expected a formula, found " + describe(t.kind));
  }
  const std::string& w = t.text;
  if (w == "not") {
    ++pos_;
    return Formula::negation(unary());
  }
  if (w == "box") {
    require_default();
    ++pos_;
    return Formula::box(kDefaultIndex, unary());
  }
  if (w == "dia") {
    require_default();
    ++pos_;
    return Formula::dia(kDefaultIndex, unary());
  }
  if (w.rfind("K_", 0) == 0) {
    std::string idx = w.substr(2);
    if (!decls_.has_index(idx))
      throw Error(ErrorCode::UnknownSymbol, std::to_string(t.line) + ":" + std::to_string(t.col) +
                                                ": undeclared modality index '" + idx + "'");
    ++pos_;
    return Formula::box(idx, unary());
  }
  if (w == "C") {
    ++pos_;
    std::vector<std::string> idx;
    if (accept(Tok::LBrace)) {
      do idx.push_back(index_name());
      while (accept(Tok::Comma));
      expect(Tok::RBrace, "'}'");
    } else {
      idx = decls_.indices;
    }
    return Formula::common_knows(std::move(idx), unary());
  }
  if (w == "top") {
    ++pos_;
    return Formula::top();
  }
  if (w == "bot") {
    ++pos_;
    return Formula::bottom();
  }
  if (w == "forall" || w == "exists" || w == "all_free" || w == "some_free") {
    ++pos_;
    return quantifier(t);
  }
  if (w == "E") {
    ++pos_;
    Sort indiv = Sort::indiv();
    return Formula::exists_pred(argument(&indiv));
  }
  return atom();
}

Formula Parser::quantifier(const Token& kw) {
  std::vector<std::pair<std::string, Sort>> vars;
  bool free = kw.text == "all_free" || kw.text == "some_free";
  if (free) {
    do {
      const Token& n = expect(Tok::Ident, "a variable name");
      if (is_keyword(n.text)) fail(n, "'" + n.text + "' is a keyword");
      vars.emplace_back(n.text, Sort::indiv());
    } while (peek().kind == Tok::Ident);
  } else {
    vars = binders();
  }
  expect(Tok::Dot, "'.'");
  size_t mark = scope_.size();
  for (const auto& v : vars) scope_.push_back(v);
  Formula body = formula();
  scope_.erase(scope_.begin() + static_cast<std::ptrdiff_t>(mark), scope_.end());
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    if (kw.text == "forall") body = Formula::forall(it->first, it->second, body);
    else if (kw.text == "exists") body = Formula::exists(it->first, it->second, body);
    else if (kw.text == "all_free") body = Formula::free_forall(it->first, body);
    else body = Formula::free_exists(it->first, body);
  }
  return body;
}

Formula Parser::atom() {
  const Token& head = expect(Tok::Ident, "an atom");
  if (is_keyword(head.text)) fail(head, "unexpected keyword '" + head.text + "'");
  std::string where = std::to_string(head.line) + ":" + std::to_string(head.col) + ": ";

  auto parse_args = [&](const std::vector<Sort>& expected) {
    std::vector<Term> args;
    while (args.size() < expected.size() &&
           ((peek().kind == Tok::Ident && !is_keyword(peek().text)) ||
            peek().kind == Tok::LParen)) {
      args.push_back(argument(&expected[args.size()]));
    }
    return args;
  };

  if (const Sort* s = bound_sort(head.text)) {
    if (s->result() != Sort::prop())
      throw Error(ErrorCode::SortError, where + "'" + head.text + "' of sort " + to_string(*s) +
                                            " used as a formula");
    auto expected = s->arg_sorts();
    auto args = parse_args(expected);
    if (args.size() != expected.size())
      throw Error(ErrorCode::ArityMismatch, where + "'" + head.text + "' expects " +
                                                std::to_string(expected.size()) + " arguments");
    return Formula::atom(head.text, std::move(args), true);
  }
  if (const Definition* d = decls_.definition(head.text)) {
    std::vector<Sort> expected;
    for (const auto& [n, s] : d->params) expected.push_back(s);
    auto args = parse_args(expected);
    if (args.size() != expected.size())
      throw Error(ErrorCode::ArityMismatch, where + "'" + head.text + "' expects " +
                                                std::to_string(expected.size()) + " arguments");
    if (d->params.empty()) return d->body;
    return apply_to_formula(Term::lambda(d->params, d->body), args);
  }
  if (auto s = decls_.constant_sort(head.text)) {
    if (s->result() != Sort::prop())
      throw Error(ErrorCode::SortError, where + "'" + head.text + "' of sort " + to_string(*s) +
                                            " used as a formula");
    auto expected = s->arg_sorts();
    auto args = parse_args(expected);
    if (args.size() != expected.size())
      throw Error(ErrorCode::ArityMismatch, where + "'" + head.text + "' expects " +
                                                std::to_string(expected.size()) + " arguments");
    return Formula::atom(head.text, std::move(args), false);
  }
  throw Error(ErrorCode::UnknownSymbol, where + "'" + head.text + "'");
}

void Parser::check_term_sort(const Token& at, const Term& t, const Sort* expected) {
  std::map<std::string, Sort> bound;
  for (const auto& [n, s] : scope_) bound.insert_or_assign(n, s);
  Sort s = sort_of(t, decls_, bound);
  if (expected && s != *expected)
    throw Error(ErrorCode::SortError, std::to_string(at.line) + ":" + std::to_string(at.col) +
                                          ": expected a term of sort " + to_string(*expected) +
                                          ", found " + to_string(s));
}

Term Parser::argument(const Sort* expected) {
  const Token& t = peek();
  if (accept(Tok::LParen)) {
    Depth guard(*this, t);
    Term inner = term();
    expect(Tok::RParen, "')'");
    check_term_sort(t, inner, expected);
    return inner;
  }
  const Token& name = expect(Tok::Ident, "an argument");
  if (is_keyword(name.text)) fail(name, "unexpected keyword '" + name.text + "'");
  Term out = Term::constant("");
  if (bound_sort(name.text)) {
    out = Term::var(name.text);
  } else if (const Definition* d = decls_.definition(name.text)) {
    if (d->params.empty())
      throw Error(ErrorCode::SortError, std::to_string(name.line) + ":" + std::to_string(name.col) +
                                            ": formula abbreviation '" + name.text +
                                            "' used as an argument");
    out = Term::lambda(d->params, d->body);
  } else if (decls_.constant_sort(name.text)) {
    out = Term::constant(name.text);
  } else {
    throw Error(ErrorCode::UnknownSymbol,
                std::to_string(name.line) + ":" + std::to_string(name.col) + ": '" + name.text + "'");
  }
  check_term_sort(name, out, expected);
  return out;
}

Term Parser::term() {
  const Token& t = peek();
  if (accept(Tok::Backslash)) {
    auto params = binders();
    expect(Tok::Dot, "'.'");
    size_t mark = scope_.size();
    for (const auto& p : params) scope_.push_back(p);
    Formula body = formula();
    scope_.erase(scope_.begin() + static_cast<std::ptrdiff_t>(mark), scope_.end());
    return Term::lambda(std::move(params), std::move(body));
  }
  if (t.kind == Tok::LParen) return argument(nullptr);
  return application_term(nullptr);
}

Term Parser::application_term(const Sort* expected) {
  const Token& head = peek();
  Term h = argument(nullptr);
  std::map<std::string, Sort> bound;
  for (const auto& [n, s] : scope_) bound.insert_or_assign(n, s);
  Sort s = sort_of(h, decls_, bound);
  std::vector<Term> args;
  while (s.is_arrow() && ((peek().kind == Tok::Ident && !is_keyword(peek().text)) ||
                          peek().kind == Tok::LParen)) {
    args.push_back(argument(&s.domain()));
    s = s.codomain();
  }
  Term out = h;
  if (!args.empty()) {
    if (h.kind() == Term::Kind::Lambda) {
      // Partially applied abbreviation: keep the remaining parameters abstract.
      if (args.size() == h.params().size())
        throw Error(ErrorCode::SortError,
                    std::to_string(head.line) + ":" + std::to_string(head.col) +
                        ": fully applied abbreviation used as an argument");
      std::vector<std::pair<std::string, Sort>> rest(h.params().begin() + args.size(),
                                                     h.params().end());
      std::vector<Term> all = args;
      for (const auto& [n, ps] : rest) all.push_back(Term::var(n));
      out = Term::lambda(rest, apply_to_formula(h, all));
    } else if (h.kind() == Term::Kind::Var) {
      out = Term::var(h.name(), std::move(args));
    } else {
      out = Term::constant(h.name(), std::move(args));
    }
  }
  check_term_sort(head, out, expected);
  return out;
}

}  // namespace detail

Formula parse_formula(const std::string& text, const Declarations& decls) {
  detail::Parser p(detail::tokenize(text), decls);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Term parse_term(const std::string& text, const Declarations& decls) {
  detail::Parser p(detail::tokenize(text), decls);
  Term t = p.term();
  p.expect_end();
  return t;
}

}  // namespace modalhol::syntax
