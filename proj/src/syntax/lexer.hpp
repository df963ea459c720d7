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

#ifndef MODALHOL_SRC_SYNTAX_LEXER_HPP_
#define MODALHOL_SRC_SYNTAX_LEXER_HPP_

#include <string>
#include <vector>

#include "modalhol/error.hpp"

namespace modalhol::syntax::detail {

enum class Tok {
  Ident,
  LParen,
  RParen,
  LBrack,
  RBrack,
  LAngle,
  RAngle,
  LBrace,
  RBrace,
  Comma,
  Colon,
  Assign,  // :=
  Dot,
  Backslash,
  Amp,
  Bar,
  Arrow,  // ->
  Iff,    // <->
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

// Tokenizes `text`; positions are reported relative to (line, col) of its
// first character. Throws SyntaxError on bytes outside the grammar.
std::vector<Token> tokenize(const std::string& text, int line = 1, int col = 1);

std::string describe(Tok kind);

}  // namespace modalhol::syntax::detail

#endif  // MODALHOL_SRC_SYNTAX_LEXER_HPP_
