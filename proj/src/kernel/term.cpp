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

#include "modalhol/kernel.hpp"

namespace modalhol::kernel {

HolTerm HolTerm::constant(std::string name, HolType type) {
  return HolTerm(std::make_shared<const Node>(Kind::Const, std::move(name), std::move(type)));
}

HolTerm HolTerm::variable(std::string name, HolType type) {
  return HolTerm(std::make_shared<const Node>(Kind::Var, std::move(name), std::move(type)));
}

HolTerm HolTerm::app(HolTerm fn, HolTerm arg) {
  return HolTerm(std::make_shared<const Node>(std::move(fn), std::move(arg)));
}

HolTerm HolTerm::app(HolTerm fn, std::initializer_list<HolTerm> args) {
  for (const auto& a : args) fn = app(fn, a);
  return fn;
}

HolTerm HolTerm::lam(std::string bound, HolType bound_type, HolTerm body) {
  auto node = std::make_shared<Node>(Kind::Lam, std::move(bound), std::move(bound_type));
  node->fn = std::move(body);
  return HolTerm(std::move(node));
}

const std::string& HolTerm::name() const { return node_->name; }
const HolType& HolTerm::type_annotation() const { return node_->type; }
const HolTerm& HolTerm::fn() const { return node_->fn; }
const HolTerm& HolTerm::arg() const { return node_->arg; }
const HolTerm& HolTerm::body() const { return node_->fn; }

bool operator==(const HolTerm& a, const HolTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case HolTerm::Kind::Const:
    case HolTerm::Kind::Var:
      return a.name() == b.name() && a.type_annotation() == b.type_annotation();
    case HolTerm::Kind::App:
      return a.fn() == b.fn() && a.arg() == b.arg();
    case HolTerm::Kind::Lam:
      return a.name() == b.name() && a.type_annotation() == b.type_annotation() &&
             a.body() == b.body();
  }
  return false;
}

size_t HolTerm::size() const {
  switch (kind()) {
    case Kind::App: return 1 + fn().size() + arg().size();
    case Kind::Lam: return 1 + body().size();
    default: return 1;
  }
}

namespace logic {

namespace {
const HolType& o() {
  static const HolType t = HolType::boolean();
  return t;
}
HolType binop_type() { return HolType::arrow(o(), HolType::arrow(o(), o())); }
HolTerm binop(const char* name, HolTerm a, HolTerm b) {
  return HolTerm::app(HolTerm::constant(name, binop_type()), {std::move(a), std::move(b)});
}
}  // namespace

bool is_logical(const std::string& name) {
  static const char* names[] = {kTrue, kFalse, kNot, kAnd, kOr, kImp, kIff, kEq, kForall, kExists};
  return std::any_of(std::begin(names), std::end(names), [&](const char* n) { return name == n; });
}

HolTerm truth() { return HolTerm::constant(kTrue, o()); }
HolTerm falsity() { return HolTerm::constant(kFalse, o()); }
HolTerm neg(HolTerm a) {
  return HolTerm::app(HolTerm::constant(kNot, HolType::arrow(o(), o())), std::move(a));
}
HolTerm conj(HolTerm a, HolTerm b) { return binop(kAnd, std::move(a), std::move(b)); }
HolTerm disj(HolTerm a, HolTerm b) { return binop(kOr, std::move(a), std::move(b)); }
HolTerm imp(HolTerm a, HolTerm b) { return binop(kImp, std::move(a), std::move(b)); }
HolTerm iff(HolTerm a, HolTerm b) { return binop(kIff, std::move(a), std::move(b)); }

HolTerm eq(HolTerm a, HolTerm b) {
  HolType t = type_of(a);
  HolTerm c = HolTerm::constant(kEq, HolType::arrow(t, HolType::arrow(t, o())));
  return HolTerm::app(c, {std::move(a), std::move(b)});
}

HolTerm forall_const(HolType type) {
  return HolTerm::constant(kForall, HolType::arrow(HolType::arrow(std::move(type), o()), o()));
}

HolTerm exists_const(HolType type) {
  return HolTerm::constant(kExists, HolType::arrow(HolType::arrow(std::move(type), o()), o()));
}

HolTerm forall(const std::string& var, HolType type, HolTerm body) {
  HolTerm q = forall_const(type);
  return HolTerm::app(q, HolTerm::lam(var, std::move(type), std::move(body)));
}

HolTerm exists(const std::string& var, HolType type, HolTerm body) {
  HolTerm q = exists_const(type);
  return HolTerm::app(q, HolTerm::lam(var, std::move(type), std::move(body)));
}

}  // namespace logic

void Signature::declare(const std::string& name, HolType type) {
  if (is_reserved(name)) throw Error(ErrorCode::ReservedName, "'" + name + "' is reserved");
  if (contains(name)) throw Error(ErrorCode::DuplicateName, "'" + name + "' declared twice");
  index_[name] = entries_.size();
  entries_.push_back({name, std::move(type), false});
}

void Signature::declare_reserved(const std::string& name, HolType type) {
  if (logic::is_logical(name)) throw Error(ErrorCode::ReservedName, "'" + name + "' is a logical constant");
  if (contains(name)) throw Error(ErrorCode::DuplicateName, "'" + name + "' declared twice");
  reserved_.insert(name);
  index_[name] = entries_.size();
  entries_.push_back({name, std::move(type), true});
}

void Signature::reserve(const std::string& name) { reserved_.insert(name); }

void Signature::reserve_prefix(const std::string& prefix) { reserved_prefixes_.push_back(prefix); }

bool Signature::is_reserved(const std::string& name) const {
  if (logic::is_logical(name) || reserved_.count(name)) return true;
  return std::any_of(reserved_prefixes_.begin(), reserved_prefixes_.end(),
                     [&](const std::string& p) { return name.rfind(p, 0) == 0; });
}

bool Signature::contains(const std::string& name) const { return index_.count(name) > 0; }

std::optional<HolType> Signature::lookup(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].type;
}

}  // namespace modalhol::kernel
