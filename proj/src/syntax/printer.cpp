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

#include "modalhol/syntax.hpp"

namespace modalhol::syntax {

namespace {

enum Prec : int { kTop = 0, kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5, kPrimary = 6 };

std::string wrap(std::string s, int own, int ctx) { return own < ctx ? "(" + s + ")" : s; }

std::string render(const Formula& f, int ctx);

std::string render_arg(const Term& t) {
  if (t.kind() != Term::Kind::Lambda && t.args().empty()) return t.name();
  return "(" + print_term(t) + ")";
}

std::string binder(const std::string& var, const Sort& sort) {
  return "(" + var + ": " + to_string(sort) + ")";
}

std::string render(const Formula& f, int ctx) {
  switch (f.op()) {
    case Op::Top: return "top";
    case Op::Bottom: return "bot";
    case Op::Atom: {
      std::string s = f.name();
      for (const auto& a : f.args()) s += " " + render_arg(a);
      return s;
    }
    case Op::ExistsPred: return "E " + render_arg(f.args()[0]);
    case Op::Not: return wrap("not " + render(f.body(), kUnary), kUnary, ctx);
    case Op::Box: {
      std::string prefix = f.name() == kDefaultIndex ? "box " : "[" + f.name() + "] ";
      return wrap(prefix + render(f.body(), kUnary), kUnary, ctx);
    }
    case Op::Dia: {
      std::string prefix = f.name() == kDefaultIndex ? "dia " : "<" + f.name() + "> ";
      return wrap(prefix + render(f.body(), kUnary), kUnary, ctx);
    }
    case Op::CommonKnows: {
      // Bare `C` ranges over the declared indices; mono-modal files have only the default.
      std::string s = "C ";
      if (f.indices() != std::vector<std::string>{kDefaultIndex}) {
        s = "C{";
        for (size_t i = 0; i < f.indices().size(); ++i) s += (i ? "," : "") + f.indices()[i];
        s += "} ";
      }
      return wrap(s + render(f.body(), kUnary), kUnary, ctx);
    }
    case Op::And:
      return wrap(render(f.lhs(), kAnd) + " & " + render(f.rhs(), kUnary), kAnd, ctx);
    case Op::Or:
      return wrap(render(f.lhs(), kOr) + " | " + render(f.rhs(), kAnd), kOr, ctx);
    case Op::Implies:
      return wrap(render(f.lhs(), kOr) + " -> " + render(f.rhs(), kImp), kImp, ctx);
    case Op::Iff:
      return wrap(render(f.lhs(), kImp) + " <-> " + render(f.rhs(), kIff), kIff, ctx);
    case Op::Forall:
      return wrap("forall " + binder(f.name(), f.sort()) + ". " + render(f.body(), kTop), kTop, ctx);
    case Op::Exists:
      return wrap("exists " + binder(f.name(), f.sort()) + ". " + render(f.body(), kTop), kTop, ctx);
    case Op::FreeForall:
      return wrap("all_free " + f.name() + ". " + render(f.body(), kTop), kTop, ctx);
    case Op::FreeExists:
      return wrap("some_free " + f.name() + ". " + render(f.body(), kTop), kTop, ctx);
  }
  return "?";
}

}  // namespace

std::string print_formula(const Formula& f) { return render(f, kTop); }

std::string print_term(const Term& t) {
  if (t.kind() == Term::Kind::Lambda) {
    std::string s = "\\";
    for (size_t i = 0; i < t.params().size(); ++i)
      s += (i ? " " : "") + binder(t.params()[i].first, t.params()[i].second);
    return s + ". " + print_formula(t.body());
  }
  std::string s = t.name();
  for (const auto& a : t.args()) s += " " + render_arg(a);
  return s;
}

}  // namespace modalhol::syntax
