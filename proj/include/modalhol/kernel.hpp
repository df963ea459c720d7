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

#ifndef MODALHOL_KERNEL_HPP_
#define MODALHOL_KERNEL_HPP_

// Simply typed lambda calculus core of classical higher-order logic.
//
// Types and terms are immutable, reference-counted values. Variables are
// named; binding is by name and every binder carries its type, so there is
// no type inference anywhere in the kernel.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modalhol/error.hpp"

namespace modalhol::kernel {

class HolType {
 public:
  enum class Kind { Bool, World, Indiv, Arrow, Var };

  static HolType boolean();
  static HolType world();
  static HolType indiv();
  static HolType arrow(HolType domain, HolType codomain);
  static HolType var(std::string name);

  // Right-nested arrow a1 -> a2 -> ... -> result.
  static HolType curried(const std::vector<HolType>& args, HolType result);

  Kind kind() const;
  bool is_arrow() const { return kind() == Kind::Arrow; }
  const HolType& domain() const;
  const HolType& codomain() const;
  const std::string& var_name() const;

  // True when no TypeVar occurs anywhere in the type.
  bool is_ground() const;

  friend bool operator==(const HolType& a, const HolType& b);
  friend bool operator!=(const HolType& a, const HolType& b) { return !(a == b); }
  friend bool operator<(const HolType& a, const HolType& b);

 private:
  struct Node;
  explicit HolType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct HolType::Node {
  Kind kind;
  std::string name;  // Var only
  HolType dom;       // Arrow only
  HolType cod;       // Arrow only
  Node(Kind k) : kind(k), dom(nullptr), cod(nullptr) {}
  Node(Kind k, std::string n) : kind(k), name(std::move(n)), dom(nullptr), cod(nullptr) {}
  Node(HolType d, HolType c) : kind(Kind::Arrow), dom(std::move(d)), cod(std::move(c)) {}
};

inline HolType::Kind HolType::kind() const { return node_->kind; }

std::string to_string(const HolType& type);

class HolTerm {
 public:
  enum class Kind { Const, Var, App, Lam };

  static HolTerm constant(std::string name, HolType type);
  static HolTerm variable(std::string name, HolType type);
  static HolTerm app(HolTerm fn, HolTerm arg);
  static HolTerm app(HolTerm fn, std::initializer_list<HolTerm> args);
  static HolTerm lam(std::string bound, HolType bound_type, HolTerm body);

  Kind kind() const;
  bool is_const() const { return kind() == Kind::Const; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_lam() const { return kind() == Kind::Lam; }

  // Const/Var name, or the bound name of a Lam.
  const std::string& name() const;
  // Const/Var annotation, or the bound type of a Lam.
  const HolType& type_annotation() const;
  const HolTerm& fn() const;
  const HolTerm& arg() const;
  const HolTerm& body() const;

  // Exact structural identity, bound names included. Use alpha_eq for
  // equality up to renaming.
  friend bool operator==(const HolTerm& a, const HolTerm& b);
  friend bool operator!=(const HolTerm& a, const HolTerm& b) { return !(a == b); }

  size_t size() const;

 private:
  struct Node;
  explicit HolTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct HolTerm::Node {
  Kind kind;
  std::string name;
  HolType type;
  HolTerm fn;
  HolTerm arg;
  Node(Kind k, std::string n, HolType t)
      : kind(k), name(std::move(n)), type(std::move(t)), fn(nullptr), arg(nullptr) {}
  Node(HolTerm f, HolTerm a)
      : kind(Kind::App), type(HolType::boolean()), fn(std::move(f)), arg(std::move(a)) {}
};

inline HolTerm::Kind HolTerm::kind() const { return node_->kind; }

// Names of the logical constants. Equality and the quantifiers are
// type-indexed families: one constant name, any instance of the schematic
// type 'a => 'a => o resp. ('a => o) => o.
namespace logic {
inline constexpr const char* kTrue = "T";
inline constexpr const char* kFalse = "F";
inline constexpr const char* kNot = "~";
inline constexpr const char* kAnd = "/\\";
inline constexpr const char* kOr = "\\/";
inline constexpr const char* kImp = "==>";
inline constexpr const char* kIff = "<=>";
inline constexpr const char* kEq = "=";
inline constexpr const char* kForall = "!";
inline constexpr const char* kExists = "?";

bool is_logical(const std::string& name);

HolTerm truth();
HolTerm falsity();
HolTerm neg(HolTerm a);
HolTerm conj(HolTerm a, HolTerm b);
HolTerm disj(HolTerm a, HolTerm b);
HolTerm imp(HolTerm a, HolTerm b);
HolTerm iff(HolTerm a, HolTerm b);
HolTerm eq(HolTerm a, HolTerm b);
// Quantifier constant instance at `type`, i.e. of type (type => o) => o.
HolTerm forall_const(HolType type);
HolTerm exists_const(HolType type);
// !x:type. body and ?x:type. body
HolTerm forall(const std::string& var, HolType type, HolTerm body);
HolTerm exists(const std::string& var, HolType type, HolTerm body);
}  // namespace logic

// Declared constants plus the reserved vocabulary. Logical constants are
// always reserved; further names (accessibility relations, existence
// predicates) can be reserved by the modules that own them.
class Signature {
 public:
  Signature() = default;

  // User declaration. Throws DuplicateName or ReservedName.
  void declare(const std::string& name, HolType type);
  // Declaration owned by a library module; the name becomes unshadowable.
  void declare_reserved(const std::string& name, HolType type);
  // Reserve a name (or every name with the given prefix) without declaring it.
  void reserve(const std::string& name);
  void reserve_prefix(const std::string& prefix);

  bool is_reserved(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::optional<HolType> lookup(const std::string& name) const;

  struct Entry {
    std::string name;
    HolType type;
    bool reserved;
  };
  // Declaration order.
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, size_t> index_;
  std::set<std::string> reserved_;
  std::vector<std::string> reserved_prefixes_;
};

// Structural type of a term from its annotations alone. Throws TypeMismatch
// on ill-typed applications.
HolType type_of(const HolTerm& term);

// Typing judgement against a signature. Constants must be declared with the
// annotated type (or be a logical constant at an admissible instance).
// Throws UnboundConstant or TypeMismatch; the message names the position as
// a path of 0/1 steps (0 = function or body, 1 = argument).
HolType typecheck(const HolTerm& term, const Signature& sig);

// Free variable names.
std::set<std::string> free_vars(const HolTerm& term);
bool occurs_free(const std::string& var, const HolTerm& term);

// Capture-avoiding substitution of `replacement` for the free occurrences of
// `var`. Throws TypeMismatch if an occurrence's type differs from the
// replacement's type.
HolTerm substitute(const HolTerm& term, const std::string& var,
                   const HolTerm& replacement);

// Fresh name derived from `base` by appending primes until it avoids `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Beta-normal, eta-contracted form. Requires a well-typed term.
HolTerm beta_eta_normalize(const HolTerm& term);

bool alpha_eq(const HolTerm& a, const HolTerm& b);

// Canonical text rendering, e.g. `\w:i. !v:i. r w v ==> p v`. See
// docs/hol-text.md for the grammar.
std::string to_string(const HolTerm& term);

}  // namespace modalhol::kernel

#endif  // MODALHOL_KERNEL_HPP_
