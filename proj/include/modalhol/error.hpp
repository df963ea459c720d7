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

#ifndef MODALHOL_ERROR_HPP_
#define MODALHOL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace modalhol {

enum class ErrorCode {
  // kernel
  UnboundConstant,
  TypeMismatch,
  DuplicateName,
  ReservedName,
  // syntax
  SyntaxError,
  UnknownSymbol,
  ArityMismatch,
  UndeclaredLogic,
  // embedding / semantics
  SortError,
  MissingExistencePredicate,
  UnsupportedConstruct,
  UnboundVariable,
  MissingInterpretation,
  BoundsTooLarge,
  BoundsExceeded,
  // tableau
  UnsupportedFragment,
  ResourceLimit,
  InvalidStep,
  // io
  MissingFile,
  BadModelFile,
  BadExpectation,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported with this exception. The code is
// stable and tested; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& message)
      : Error(ErrorCode::SyntaxError, std::to_string(line) + ":" +
                                          std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace modalhol

#endif  // MODALHOL_ERROR_HPP_
