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

#ifndef MODALHOL_SYNTAX_HPP_
#define MODALHOL_SYNTAX_HPP_

// Surface syntax of the object logics: quantified multi-modal formulas with
// epistemic and free-logic sugar, and the line-oriented problem-file format.
// The grammar is documented in docs/problem-format.md.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modalhol/error.hpp"

namespace modalhol::syntax {

// Sorts of the object language. `o` is the sort of formulas; it is the only
// sort that gets lifted to world predicates by the embedding.
class Sort {
 public:
  enum class Kind { Indiv, Prop, Arrow };

  static Sort indiv();
  static Sort prop();
  static Sort arrow(Sort domain, Sort codomain);

  Kind kind() const { return node_->kind; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  const Sort& domain() const { return node_->parts->first; }
  const Sort& codomain() const { return node_->parts->second; }

  // Argument sorts and final result of a (curried) arrow.
  std::vector<Sort> arg_sorts() const;
  Sort result() const;

  friend bool operator==(const Sort& a, const Sort& b);
  friend bool operator!=(const Sort& a, const Sort& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const std::pair<Sort, Sort>> parts;
  };
  explicit Sort(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Sort& sort);

// Name of the single modality of mono-modal logics (`box`, `dia`).
inline const std::string kDefaultIndex;

class Formula;

// Argument terms: a (possibly applied) variable or constant, or a property
// abstraction `\(x: s). formula`.
class Term {
 public:
  enum class Kind { Var, Const, Lambda };

  static Term var(std::string name, std::vector<Term> args = {});
  static Term constant(std::string name, std::vector<Term> args = {});
  static Term lambda(std::vector<std::pair<std::string, Sort>> params, Formula body);

  Kind kind() const;
  const std::string& name() const;
  const std::vector<Term>& args() const;
  const std::vector<std::pair<std::string, Sort>>& params() const;
  const Formula& body() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class Op {
  Top,
  Bottom,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Box,
  Dia,
  Forall,
  Exists,
  FreeForall,
  FreeExists,
  ExistsPred,
  CommonKnows,
};

class Formula {
 public:
  static Formula top();
  static Formula bottom();
  // Atom whose head is a declared constant (head_is_var = false) or a bound
  // variable of arrow sort.
  static Formula atom(std::string head, std::vector<Term> args = {}, bool head_is_var = false);
  static Formula negation(Formula f);
  static Formula conj(Formula f, Formula g);
  static Formula disj(Formula f, Formula g);
  static Formula implies(Formula f, Formula g);
  static Formula iff(Formula f, Formula g);
  static Formula box(std::string index, Formula f);
  static Formula dia(std::string index, Formula f);
  static Formula forall(std::string var, Sort sort, Formula f);
  static Formula exists(std::string var, Sort sort, Formula f);
  static Formula free_forall(std::string var, Formula f);
  static Formula free_exists(std::string var, Formula f);
  static Formula exists_pred(Term t);
  // Indices are kept sorted and unique.
  static Formula common_knows(std::vector<std::string> indices, Formula f);

  Op op() const;
  // Atom head, binder variable, or modality index.
  const std::string& name() const;
  bool head_is_var() const;
  const std::vector<Term>& args() const;
  const std::vector<std::string>& indices() const;
  const Sort& sort() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  // Operand of unary connectives, modalities and binders.
  const Formula& body() const;

  bool is_binary() const;
  bool is_quantifier() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  size_t depth() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend class Term;
};

// Abbreviation `def name (x: s)... := body`, expanded while parsing.
struct Definition {
  std::string name;
  std::vector<std::pair<std::string, Sort>> params;
  Formula body;
};

// Everything the parser needs to resolve symbols.
struct Declarations {
  // Constants in declaration order.
  std::vector<std::pair<std::string, Sort>> constants;
  // Modality indices; {kDefaultIndex} for mono-modal logics.
  std::vector<std::string> indices{kDefaultIndex};
  std::vector<Definition> definitions;

  std::optional<Sort> constant_sort(const std::string& name) const;
  const Definition* definition(const std::string& name) const;
  bool has_index(const std::string& index) const;
  void declare_constant(const std::string& name, Sort sort);
};

// Names that cannot be declared as constants.
bool is_keyword(const std::string& name);

Formula parse_formula(const std::string& text, const Declarations& decls);
Term parse_term(const std::string& text, const Declarations& decls);
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

// Sort of a term under the given bound-variable sorts. Throws SortError,
// UnknownSymbol, or ArityMismatch.
Sort sort_of(const Term& t, const Declarations& decls,
             const std::map<std::string, Sort>& bound = {});

// Capture-avoiding replacement of the free variable `var` by `t`. Atoms whose
// head is `var` are re-headed (or beta-reduced when `t` is a lambda).
Formula substitute(const Formula& f, const std::string& var, const Term& t);

// Apply a term to further arguments, producing a formula when the result is
// of sort o (beta-reducing lambdas).
Formula apply_to_formula(const Term& t, const std::vector<Term>& args);

// Free variables (including atom heads bound by property quantifiers).
std::vector<std::string> free_variables(const Formula& f);
// Names of constants occurring in f.
std::vector<std::string> constants_of(const Formula& f);
// Modality indices used by Box/Dia/CommonKnows.
std::vector<std::string> indices_of(const Formula& f);

bool is_propositional(const Formula& f);
bool uses_common_knowledge(const Formula& f);

// `logic` line of a problem file, before it is turned into a preset.
struct LogicDecl {
  std::string frame;               // K, KB, KT, S4, S5, S5equiv, custom
  std::vector<std::string> flags;  // custom frame flags
  std::string domain = "constant";
  std::optional<std::string> actual_world;
};

struct NamedFormula {
  std::string name;
  Formula formula;
};

// A formula with a propositional hole: `hole` is declared as a constant of
// sort o while the schema is parsed and ranges over all propositions when the
// schema is checked.
struct Schema {
  std::string name;
  std::string hole;
  Formula formula;
};

// `subsumption NAME: C [= D` in description-logic notation. Kept as text;
// the embedding module translates it into a conjecture.
struct Subsumption {
  std::string name;
  std::string text;
  int line = 0;
};

struct ProblemFile {
  LogicDecl logic;
  Declarations decls;
  std::vector<NamedFormula> axioms;
  std::vector<NamedFormula> conjectures;
  std::vector<Schema> schemas;
  std::vector<Subsumption> subsumptions;

  const NamedFormula* find(const std::string& name) const;
  const Schema* find_schema(const std::string& name) const;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);
// Canonical rendering; parse_problem(print_problem(p)) reproduces p up to
// definitions, which are printed but already expanded in the formulas.
std::string print_problem(const ProblemFile& p);

}  // namespace modalhol::syntax

#endif  // MODALHOL_SYNTAX_HPP_
