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

namespace modalhol::kernel {

namespace {

// Binding strengths, loosest first.
enum Prec : int {
  kBinder = 0,
  kIffPrec = 10,
  kImpPrec = 20,
  kOrPrec = 30,
  kAndPrec = 40,
  kEqPrec = 50,
  kNotPrec = 60,
  kAppPrec = 70,
  kAtomPrec = 100,
};

struct Infix {
  const char* symbol;
  int prec;
  bool right_assoc;
};

const Infix* infix_of(const HolTerm& c) {
  static const Infix kInfix[] = {
      {logic::kIff, kIffPrec, true}, {logic::kImp, kImpPrec, true},
      {logic::kOr, kOrPrec, true},   {logic::kAnd, kAndPrec, true},
      {logic::kEq, kEqPrec, false},
  };
  if (!c.is_const()) return nullptr;
  for (const auto& op : kInfix)
    if (c.name() == op.symbol) return &op;
  return nullptr;
}

std::string binder_type(const HolType& t) {
  return t.is_arrow() ? "(" + to_string(t) + ")" : to_string(t);
}

std::string render(const HolTerm& t, int ctx);

std::string paren(std::string s, int own, int ctx) { return own < ctx ? "(" + s + ")" : s; }

std::string render_binder(const char* symbol, const std::string& var, const HolType& type,
                          const HolTerm& body, int ctx) {
  std::string s = std::string(symbol) + var + ":" + binder_type(type) + ". " + render(body, kBinder);
  return paren(std::move(s), kBinder, ctx);
}

std::string render(const HolTerm& t, int ctx) {
  switch (t.kind()) {
    case HolTerm::Kind::Var:
      return t.name();
    case HolTerm::Kind::Const:
      if (logic::is_logical(t.name()) && t.name() != std::string(logic::kTrue) &&
          t.name() != std::string(logic::kFalse))
        return "(" + t.name() + ")";
      return t.name();
    case HolTerm::Kind::Lam:
      return render_binder("\\", t.name(), t.type_annotation(), t.body(), ctx);
    case HolTerm::Kind::App:
      break;
  }

  const HolTerm& f = t.fn();
  if (f.is_const() && f.name() == logic::kNot)
    return paren("~" + render(t.arg(), kNotPrec), kNotPrec, ctx);

  if (f.is_const() && (f.name() == logic::kForall || f.name() == logic::kExists)) {
    const char* symbol = f.name() == logic::kForall ? "!" : "?";
    if (t.arg().is_lam())
      return render_binder(symbol, t.arg().name(), t.arg().type_annotation(), t.arg().body(), ctx);
    // Eta-contracted body: print it expanded with a fresh bound variable.
    HolType bound = f.type_annotation().domain().domain();
    std::string x = "x";
    auto avoid = free_vars(t.arg());
    if (avoid.count(x)) x = fresh_name(x, avoid);
    return render_binder(symbol, x, bound, HolTerm::app(t.arg(), HolTerm::variable(x, bound)), ctx);
  }

  if (f.is_app()) {
    if (const Infix* op = infix_of(f.fn())) {
      int lhs = op->prec + 1;
      int rhs = op->right_assoc ? op->prec : op->prec + 1;
      std::string s = render(f.arg(), lhs) + " " + op->symbol + " " + render(t.arg(), rhs);
      return paren(std::move(s), op->prec, ctx);
    }
  }

  std::string s = render(f, kAppPrec) + " " + render(t.arg(), kAppPrec + 1);
  return paren(std::move(s), kAppPrec, ctx);
}

}  // namespace

std::string to_string(const HolTerm& term) { return render(term, kBinder); }

}  // namespace modalhol::kernel
