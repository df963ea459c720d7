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

#include "lexer.hpp"

namespace modalhol::syntax::detail {

namespace {

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '\''; }

}  // namespace

std::vector<Token> tokenize(const std::string& text, int line, int col) {
  std::vector<Token> out;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto emit = [&](Tok kind, size_t len) {
    out.push_back({kind, text.substr(i, len), line, col});
    advance(len);
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      emit(Tok::Ident, j - i);
      continue;
    }
    auto next = [&](size_t k) { return i + k < text.size() ? text[i + k] : '\0'; };
    switch (c) {
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '[': emit(Tok::LBrack, 1); continue;
      case ']': emit(Tok::RBrack, 1); continue;
      case '{': emit(Tok::LBrace, 1); continue;
      case '}': emit(Tok::RBrace, 1); continue;
      case ',': emit(Tok::Comma, 1); continue;
      case '.': emit(Tok::Dot, 1); continue;
      case '\\': emit(Tok::Backslash, 1); continue;
      case '&': emit(Tok::Amp, 1); continue;
      case '|': emit(Tok::Bar, 1); continue;
      case '>': emit(Tok::RAngle, 1); continue;
      case ':':
        if (next(1) == '=') emit(Tok::Assign, 2);
        else emit(Tok::Colon, 1);
        continue;
      case '-':
        if (next(1) == '>') {
          emit(Tok::Arrow, 2);
          continue;
        }
        break;
      case '<':
        if (next(1) == '-' && next(2) == '>') emit(Tok::Iff, 3);
        else emit(Tok::LAngle, 1);
        continue;
      default:
        break;
    }
    std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) > 0x7e)
                            ? "byte " + std::to_string(static_cast<unsigned char>(c))
                            : std::string("'") + c + "'";
    throw SyntaxError(line, col, "unexpected " + shown);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Assign: return "':='";
    case Tok::Dot: return "'.'";
    case Tok::Backslash: return "'\\'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "token";
}

}  // namespace modalhol::syntax::detail
