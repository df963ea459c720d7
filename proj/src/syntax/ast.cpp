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
#include <set>

#include "modalhol/syntax.hpp"

namespace modalhol::syntax {

Sort Sort::indiv() {
  static const Sort s(std::make_shared<const Node>(Node{Kind::Indiv, nullptr}));
  return s;
}

Sort Sort::prop() {
  static const Sort s(std::make_shared<const Node>(Node{Kind::Prop, nullptr}));
  return s;
}

Sort Sort::arrow(Sort domain, Sort codomain) {
  auto parts = std::make_shared<const std::pair<Sort, Sort>>(std::move(domain), std::move(codomain));
  return Sort(std::make_shared<const Node>(Node{Kind::Arrow, std::move(parts)}));
}

std::vector<Sort> Sort::arg_sorts() const {
  std::vector<Sort> out;
  const Sort* s = this;
  while (s->is_arrow()) {
    out.push_back(s->domain());
    s = &s->codomain();
  }
  return out;
}

Sort Sort::result() const {
  const Sort* s = this;
  while (s->is_arrow()) s = &s->codomain();
  return *s;
}

bool operator==(const Sort& a, const Sort& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (!a.is_arrow()) return true;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

std::string to_string(const Sort& sort) {
  switch (sort.kind()) {
    case Sort::Kind::Indiv: return "indiv";
    case Sort::Kind::Prop: return "o";
    case Sort::Kind::Arrow: {
      std::string d = to_string(sort.domain());
      if (sort.domain().is_arrow()) d = "(" + d + ")";
      return d + " -> " + to_string(sort.codomain());
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

struct Formula::Node {
  Op op;
  std::string name;
  bool head_is_var = false;
  std::vector<Term> args;
  std::vector<std::string> indices;
  std::optional<Sort> sort;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
};

struct Term::Node {
  Kind kind;
  std::string name;
  std::vector<Term> args;
  std::vector<std::pair<std::string, Sort>> params;
  std::optional<Formula> body;
};

Term Term::var(std::string name, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), std::move(args), {}, {}}));
}

Term Term::constant(std::string name, std::vector<Term> args) {
  return Term(
      std::make_shared<const Node>(Node{Kind::Const, std::move(name), std::move(args), {}, {}}));
}

Term Term::lambda(std::vector<std::pair<std::string, Sort>> params, Formula body) {
  if (params.empty()) throw Error(ErrorCode::SortError, "lambda without parameters");
  return Term(std::make_shared<const Node>(
      Node{Kind::Lambda, {}, {}, std::move(params), std::move(body)}));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const std::vector<Term>& Term::args() const { return node_->args; }
const std::vector<std::pair<std::string, Sort>>& Term::params() const { return node_->params; }
const Formula& Term::body() const { return *node_->body; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Term::Kind::Lambda) return a.params() == b.params() && a.body() == b.body();
  return a.name() == b.name() && a.args() == b.args();
}

Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Op::Top})); }
Formula Formula::bottom() { return Formula(std::make_shared<const Node>(Node{Op::Bottom})); }

Formula Formula::atom(std::string head, std::vector<Term> args, bool head_is_var) {
  Node n{Op::Atom, std::move(head), head_is_var, std::move(args)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::negation(Formula f) {
  Node n{Op::Not};
  n.lhs = std::move(f);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

#define MODALHOL_BINARY(fn, OP)                              \
  Formula Formula::fn(Formula f, Formula g) {                \
    Node n{Op::OP};                                          \
    n.lhs = std::move(f);                                    \
    n.rhs = std::move(g);                                    \
    return Formula(std::make_shared<const Node>(std::move(n))); \
  }
MODALHOL_BINARY(conj, And)
MODALHOL_BINARY(disj, Or)
MODALHOL_BINARY(implies, Implies)
MODALHOL_BINARY(iff, Iff)
#undef MODALHOL_BINARY

Formula Formula::box(std::string index, Formula f) {
  Node n{Op::Box, std::move(index)};
  n.lhs = std::move(f);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::dia(std::string index, Formula f) {
  Node n{Op::Dia, std::move(index)};
  n.lhs = std::move(f);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::forall(std::string var, Sort sort, Formula f) {
  Node n{Op::Forall, std::move(var)};
  n.sort = std::move(sort);
  n.lhs = std::move(f);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::exists(std::string var, Sort sort, Formula f) {
  Node n{Op::Exists, std::move(var)};
  n.sort = std::move(sort);
  n.lhs = std::move(f);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::free_forall(std::string var, Formula f) {
  Node n{Op::FreeForall, std::move(var)};
  n.sort = Sort::indiv();
  n.lhs = std::move(f);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::free_exists(std::string var, Formula f) {
  Node n{Op::FreeExists, std::move(var)};
  n.sort = Sort::indiv();
  n.lhs = std::move(f);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::exists_pred(Term t) {
  Node n{Op::ExistsPred};
  n.args.push_back(std::move(t));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::common_knows(std::vector<std::string> indices, Formula f) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  Node n{Op::CommonKnows};
  n.indices = std::move(indices);
  n.lhs = std::move(f);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
bool Formula::head_is_var() const { return node_->head_is_var; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const std::vector<std::string>& Formula::indices() const { return node_->indices; }
const Sort& Formula::sort() const { return *node_->sort; }
const Formula& Formula::lhs() const { return *node_->lhs; }
const Formula& Formula::rhs() const { return *node_->rhs; }
const Formula& Formula::body() const { return *node_->lhs; }

bool Formula::is_binary() const {
  return op() == Op::And || op() == Op::Or || op() == Op::Implies || op() == Op::Iff;
}

bool Formula::is_quantifier() const {
  return op() == Op::Forall || op() == Op::Exists || op() == Op::FreeForall ||
         op() == Op::FreeExists;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.name != y.name || x.head_is_var != y.head_is_var || x.args != y.args ||
      x.indices != y.indices || x.sort != y.sort)
    return false;
  if (x.lhs.has_value() != y.lhs.has_value() || x.rhs.has_value() != y.rhs.has_value())
    return false;
  if (x.lhs && !(*x.lhs == *y.lhs)) return false;
  if (x.rhs && !(*x.rhs == *y.rhs)) return false;
  return true;
}

size_t Formula::depth() const {
  size_t d = 0;
  if (node_->lhs) d = std::max(d, node_->lhs->depth());
  if (node_->rhs) d = std::max(d, node_->rhs->depth());
  return (op() == Op::Top || op() == Op::Bottom || op() == Op::Atom || op() == Op::ExistsPred)
             ? 0
             : d + 1;
}

// ---------------------------------------------------------------------------

std::optional<Sort> Declarations::constant_sort(const std::string& name) const {
  for (const auto& [n, s] : constants)
    if (n == name) return s;
  return std::nullopt;
}

const Definition* Declarations::definition(const std::string& name) const {
  for (const auto& d : definitions)
    if (d.name == name) return &d;
  return nullptr;
}

bool Declarations::has_index(const std::string& index) const {
  return std::find(indices.begin(), indices.end(), index) != indices.end();
}

void Declarations::declare_constant(const std::string& name, Sort sort) {
  if (is_keyword(name)) throw Error(ErrorCode::ReservedName, "'" + name + "' is reserved");
  if (constant_sort(name) || definition(name))
    throw Error(ErrorCode::DuplicateName, "'" + name + "' declared twice");
  constants.emplace_back(name, std::move(sort));
}

// ---------------------------------------------------------------------------

namespace {

void term_vars(const Term& t, std::set<std::string>& bound, std::vector<std::string>& out);

void formula_vars(const Formula& f, std::set<std::string>& bound, std::vector<std::string>& out) {
  auto add = [&](const std::string& v) {
    if (!bound.count(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
      return;
    case Op::Atom:
      if (f.head_is_var()) add(f.name());
      for (const auto& a : f.args()) term_vars(a, bound, out);
      return;
    case Op::ExistsPred:
      term_vars(f.args()[0], bound, out);
      return;
    case Op::Forall:
    case Op::Exists:
    case Op::FreeForall:
    case Op::FreeExists: {
      bool had = bound.count(f.name()) > 0;
      bound.insert(f.name());
      formula_vars(f.body(), bound, out);
      if (!had) bound.erase(f.name());
      return;
    }
    default:
      formula_vars(f.lhs(), bound, out);
      if (f.is_binary()) formula_vars(f.rhs(), bound, out);
      return;
  }
}

void term_vars(const Term& t, std::set<std::string>& bound, std::vector<std::string>& out) {
  if (t.kind() == Term::Kind::Lambda) {
    std::vector<std::string> added;
    for (const auto& [p, s] : t.params())
      if (bound.insert(p).second) added.push_back(p);
    formula_vars(t.body(), bound, out);
    for (const auto& p : added) bound.erase(p);
    return;
  }
  if (t.kind() == Term::Kind::Var && !bound.count(t.name()) &&
      std::find(out.begin(), out.end(), t.name()) == out.end())
    out.push_back(t.name());
  for (const auto& a : t.args()) term_vars(a, bound, out);
}

std::vector<std::string> vars_of_term(const Term& t) {
  std::set<std::string> bound;
  std::vector<std::string> out;
  term_vars(t, bound, out);
  return out;
}

std::string fresh(const std::string& base, const std::vector<std::string>& avoid1,
                  const std::vector<std::string>& avoid2) {
  std::string name = base + "'";
  auto taken = [&](const std::string& n) {
    return std::find(avoid1.begin(), avoid1.end(), n) != avoid1.end() ||
           std::find(avoid2.begin(), avoid2.end(), n) != avoid2.end();
  };
  while (taken(name)) name += "'";
  return name;
}

Term subst_term(const Term& t, const std::string& var, const Term& r);

Formula rebuild_unary(const Formula& f, Formula body) {
  switch (f.op()) {
    case Op::Not: return Formula::negation(std::move(body));
    case Op::Box: return Formula::box(f.name(), std::move(body));
    case Op::Dia: return Formula::dia(f.name(), std::move(body));
    case Op::CommonKnows: return Formula::common_knows(f.indices(), std::move(body));
    case Op::Forall: return Formula::forall(f.name(), f.sort(), std::move(body));
    case Op::Exists: return Formula::exists(f.name(), f.sort(), std::move(body));
    case Op::FreeForall: return Formula::free_forall(f.name(), std::move(body));
    case Op::FreeExists: return Formula::free_exists(f.name(), std::move(body));
    default: break;
  }
  throw Error(ErrorCode::SortError, "not a unary node");
}

Formula rebuild_binary(const Formula& f, Formula l, Formula r) {
  switch (f.op()) {
    case Op::And: return Formula::conj(std::move(l), std::move(r));
    case Op::Or: return Formula::disj(std::move(l), std::move(r));
    case Op::Implies: return Formula::implies(std::move(l), std::move(r));
    case Op::Iff: return Formula::iff(std::move(l), std::move(r));
    default: break;
  }
  throw Error(ErrorCode::SortError, "not a binary node");
}

Formula rename_bound(const Formula& f, const std::string& from, const std::string& to) {
  return substitute(f, from, Term::var(to));
}

}  // namespace

Formula apply_to_formula(const Term& t, const std::vector<Term>& args) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: {
      std::vector<Term> all = t.args();
      all.insert(all.end(), args.begin(), args.end());
      return Formula::atom(t.name(), std::move(all), t.kind() == Term::Kind::Var);
    }
    case Term::Kind::Lambda: {
      if (args.size() < t.params().size())
        throw Error(ErrorCode::ArityMismatch, "partially applied abstraction used as a formula");
      Formula body = t.body();
      // Simultaneous substitution via renaming to fresh names first.
      std::vector<std::string> avoid;
      for (const auto& a : args)
        for (const auto& v : vars_of_term(a)) avoid.push_back(v);
      for (const auto& v : free_variables(body)) avoid.push_back(v);
      std::vector<std::string> temps;
      for (const auto& [p, s] : t.params()) {
        std::string tmp = fresh(p, avoid, temps);
        temps.push_back(tmp);
        body = rename_bound(body, p, tmp);
      }
      for (size_t i = 0; i < t.params().size(); ++i) body = substitute(body, temps[i], args[i]);
      if (args.size() > t.params().size())
        throw Error(ErrorCode::ArityMismatch, "abstraction applied to too many arguments");
      return body;
    }
  }
  throw Error(ErrorCode::SortError, "bad term");
}

namespace {

Term subst_term(const Term& t, const std::string& var, const Term& r) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(subst_term(a, var, r));
      if (t.kind() == Term::Kind::Var && t.name() == var) {
        if (args.empty()) return r;
        if (r.kind() == Term::Kind::Lambda)
          throw Error(ErrorCode::SortError, "abstraction applied inside an argument term");
        std::vector<Term> all = r.args();
        all.insert(all.end(), args.begin(), args.end());
        return r.kind() == Term::Kind::Var ? Term::var(r.name(), std::move(all))
                                           : Term::constant(r.name(), std::move(all));
      }
      return t.kind() == Term::Kind::Var ? Term::var(t.name(), std::move(args))
                                         : Term::constant(t.name(), std::move(args));
    }
    case Term::Kind::Lambda: {
      auto params = t.params();
      for (const auto& [p, s] : params)
        if (p == var) return t;
      Formula body = t.body();
      auto r_vars = vars_of_term(r);
      for (auto& [p, s] : params) {
        if (std::find(r_vars.begin(), r_vars.end(), p) != r_vars.end()) {
          std::string np = fresh(p, r_vars, free_variables(body));
          body = rename_bound(body, p, np);
          p = np;
        }
      }
      return Term::lambda(std::move(params), substitute(body, var, r));
    }
  }
  return t;
}

}  // namespace

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
      return f;
    case Op::Atom: {
      std::vector<Term> args;
      for (const auto& a : f.args()) args.push_back(subst_term(a, var, t));
      if (f.head_is_var() && f.name() == var) return apply_to_formula(t, args);
      return Formula::atom(f.name(), std::move(args), f.head_is_var());
    }
    case Op::ExistsPred:
      return Formula::exists_pred(subst_term(f.args()[0], var, t));
    case Op::Forall:
    case Op::Exists:
    case Op::FreeForall:
    case Op::FreeExists: {
      if (f.name() == var) return f;
      auto t_vars = vars_of_term(t);
      if (std::find(t_vars.begin(), t_vars.end(), f.name()) != t_vars.end()) {
        std::string nv = fresh(f.name(), t_vars, free_variables(f.body()));
        Formula renamed = rename_bound(f.body(), f.name(), nv);
        Formula body = substitute(renamed, var, t);
        switch (f.op()) {
          case Op::Forall: return Formula::forall(nv, f.sort(), std::move(body));
          case Op::Exists: return Formula::exists(nv, f.sort(), std::move(body));
          case Op::FreeForall: return Formula::free_forall(nv, std::move(body));
          default: return Formula::free_exists(nv, std::move(body));
        }
      }
      return rebuild_unary(f, substitute(f.body(), var, t));
    }
    case Op::Not:
    case Op::Box:
    case Op::Dia:
    case Op::CommonKnows:
      return rebuild_unary(f, substitute(f.body(), var, t));
    default:
      return rebuild_binary(f, substitute(f.lhs(), var, t), substitute(f.rhs(), var, t));
  }
}

std::vector<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound;
  std::vector<std::string> out;
  formula_vars(f, bound, out);
  return out;
}

namespace {

void collect_consts_term(const Term& t, std::vector<std::string>& out);

void collect_consts(const Formula& f, std::vector<std::string>& out) {
  auto add = [&](const std::string& c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
      return;
    case Op::Atom:
      if (!f.head_is_var()) add(f.name());
      for (const auto& a : f.args()) collect_consts_term(a, out);
      return;
    case Op::ExistsPred:
      collect_consts_term(f.args()[0], out);
      return;
    default:
      collect_consts(f.lhs(), out);
      if (f.is_binary()) collect_consts(f.rhs(), out);
  }
}

void collect_consts_term(const Term& t, std::vector<std::string>& out) {
  if (t.kind() == Term::Kind::Lambda) {
    collect_consts(t.body(), out);
    return;
  }
  if (t.kind() == Term::Kind::Const &&
      std::find(out.begin(), out.end(), t.name()) == out.end())
    out.push_back(t.name());
  for (const auto& a : t.args()) collect_consts_term(a, out);
}

void collect_indices(const Formula& f, std::vector<std::string>& out);

void collect_indices_term(const Term& t, std::vector<std::string>& out) {
  if (t.kind() == Term::Kind::Lambda) collect_indices(t.body(), out);
  for (const auto& a : t.args()) collect_indices_term(a, out);
}

void collect_indices(const Formula& f, std::vector<std::string>& out) {
  auto add = [&](const std::string& i) {
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  };
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
      return;
    case Op::Atom:
    case Op::ExistsPred:
      for (const auto& a : f.args()) collect_indices_term(a, out);
      return;
    case Op::Box:
    case Op::Dia:
      add(f.name());
      break;
    case Op::CommonKnows:
      for (const auto& i : f.indices()) add(i);
      break;
    default:
      break;
  }
  collect_indices(f.lhs(), out);
  if (f.is_binary()) collect_indices(f.rhs(), out);
}

}  // namespace

std::vector<std::string> constants_of(const Formula& f) {
  std::vector<std::string> out;
  collect_consts(f, out);
  return out;
}

std::vector<std::string> indices_of(const Formula& f) {
  std::vector<std::string> out;
  collect_indices(f, out);
  return out;
}

bool is_propositional(const Formula& f) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
      return true;
    case Op::Atom:
      return !f.head_is_var() && f.args().empty();
    case Op::ExistsPred:
    case Op::Forall:
    case Op::Exists:
    case Op::FreeForall:
    case Op::FreeExists:
    case Op::CommonKnows:
      return false;
    default:
      return is_propositional(f.lhs()) && (!f.is_binary() || is_propositional(f.rhs()));
  }
}

bool uses_common_knowledge(const Formula& f) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom:
    case Op::ExistsPred:
      return false;
    case Op::CommonKnows:
      return true;
    default:
      return uses_common_knowledge(f.lhs()) || (f.is_binary() && uses_common_knowledge(f.rhs()));
  }
}

}  // namespace modalhol::syntax
