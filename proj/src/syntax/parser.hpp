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

#ifndef MODALHOL_SRC_SYNTAX_PARSER_HPP_
#define MODALHOL_SRC_SYNTAX_PARSER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "lexer.hpp"
#include "modalhol/syntax.hpp"

namespace modalhol::syntax::detail {

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Declarations& decls)
      : toks_(std::move(tokens)), decls_(decls) {}

  Formula formula();
  // Formula with the given variables in scope.
  Formula scoped_formula(const std::vector<std::pair<std::string, Sort>>& vars);
  Term term();
  Sort sort();
  // One or more `(x: sort)` groups; `(x y: sort)` declares several.
  std::vector<std::pair<std::string, Sort>> binders();

  const Token& peek(size_t k = 0) const;
  const Token& expect(Tok kind, const char* what);
  bool accept(Tok kind);
  bool at_end() const { return peek().kind == Tok::End; }
  void expect_end();
  [[noreturn]] void fail(const Token& at, const std::string& message) const;

 private:
  Formula iff();
  Formula implication();
  Formula disjunction();
  Formula conjunction();
  Formula unary();
  Formula quantifier(const Token& kw);
  Formula atom();
  Term argument(const Sort* expected);
  Term application_term(const Sort* expected);
  Sort sort_atom();
  std::string index_name();

  const Sort* bound_sort(const std::string& name) const;
  void check_term_sort(const Token& at, const Term& t, const Sort* expected);

  struct Depth {
    Parser& p;
    explicit Depth(Parser& parser, const Token& at);
    ~Depth() { --p.depth_; }
  };

  std::vector<Token> toks_;
  size_t pos_ = 0;
  const Declarations& decls_;
  std::vector<std::pair<std::string, Sort>> scope_;
  int depth_ = 0;
};

}  // namespace modalhol::syntax::detail

#endif  // MODALHOL_SRC_SYNTAX_PARSER_HPP_
