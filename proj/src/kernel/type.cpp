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

#include "modalhol/kernel.hpp"

namespace modalhol {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnboundConstant: return "UnboundConstant";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::ReservedName: return "ReservedName";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UndeclaredLogic: return "UndeclaredLogic";
    case ErrorCode::SortError: return "SortError";
    case ErrorCode::MissingExistencePredicate: return "MissingExistencePredicate";
    case ErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::MissingInterpretation: return "MissingInterpretation";
    case ErrorCode::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorCode::BoundsExceeded: return "BoundsExceeded";
    case ErrorCode::UnsupportedFragment: return "UnsupportedFragment";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::BadModelFile: return "BadModelFile";
    case ErrorCode::BadExpectation: return "BadExpectation";
  }
  return "Error";
}

namespace kernel {

HolType HolType::boolean() {
  static const HolType t(std::make_shared<const Node>(Kind::Bool));
  return t;
}

HolType HolType::world() {
  static const HolType t(std::make_shared<const Node>(Kind::World));
  return t;
}

HolType HolType::indiv() {
  static const HolType t(std::make_shared<const Node>(Kind::Indiv));
  return t;
}

HolType HolType::arrow(HolType domain, HolType codomain) {
  return HolType(std::make_shared<const Node>(std::move(domain), std::move(codomain)));
}

HolType HolType::var(std::string name) {
  return HolType(std::make_shared<const Node>(Kind::Var, std::move(name)));
}

HolType HolType::curried(const std::vector<HolType>& args, HolType result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) result = arrow(*it, result);
  return result;
}

const HolType& HolType::domain() const {
  if (!is_arrow()) throw Error(ErrorCode::TypeMismatch, "domain of non-arrow type " + to_string(*this));
  return node_->dom;
}

const HolType& HolType::codomain() const {
  if (!is_arrow()) throw Error(ErrorCode::TypeMismatch, "codomain of non-arrow type " + to_string(*this));
  return node_->cod;
}

const std::string& HolType::var_name() const { return node_->name; }

bool HolType::is_ground() const {
  switch (kind()) {
    case Kind::Var: return false;
    case Kind::Arrow: return node_->dom.is_ground() && node_->cod.is_ground();
    default: return true;
  }
}

bool operator==(const HolType& a, const HolType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case HolType::Kind::Var: return a.node_->name == b.node_->name;
    case HolType::Kind::Arrow: return a.node_->dom == b.node_->dom && a.node_->cod == b.node_->cod;
    default: return true;
  }
}

bool operator<(const HolType& a, const HolType& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case HolType::Kind::Var: return a.node_->name < b.node_->name;
    case HolType::Kind::Arrow:
      if (a.node_->dom != b.node_->dom) return a.node_->dom < b.node_->dom;
      return a.node_->cod < b.node_->cod;
    default: return false;
  }
}

std::string to_string(const HolType& type) {
  switch (type.kind()) {
    case HolType::Kind::Bool: return "o";
    case HolType::Kind::World: return "i";
    case HolType::Kind::Indiv: return "e";
    case HolType::Kind::Var: return "'" + type.var_name();
    case HolType::Kind::Arrow: {
      std::string dom = to_string(type.domain());
      if (type.domain().is_arrow()) dom = "(" + dom + ")";
      return dom + "=>" + to_string(type.codomain());
    }
  }
  return "?";
}

}  // namespace kernel
}  // namespace modalhol
