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
#include <utility>

#include "modalhol/kernel.hpp"

namespace modalhol::kernel {

namespace {

std::string at(const std::string& path) { return path.empty() ? "at root" : "at " + path; }

bool admissible_logical_type(const std::string& name, const HolType& t) {
  const HolType o = HolType::boolean();
  auto unop = HolType::arrow(o, o);
  auto binop = HolType::arrow(o, unop);
  if (name == logic::kTrue || name == logic::kFalse) return t == o;
  if (name == logic::kNot) return t == unop;
  if (name == logic::kAnd || name == logic::kOr || name == logic::kImp || name == logic::kIff)
    return t == binop;
  if (name == logic::kEq) {
    return t.is_arrow() && t.codomain().is_arrow() && t.domain() == t.codomain().domain() &&
           t.codomain().codomain() == o;
  }
  if (name == logic::kForall || name == logic::kExists) {
    return t.is_arrow() && t.codomain() == o && t.domain().is_arrow() &&
           t.domain().codomain() == o;
  }
  return false;
}

HolType check(const HolTerm& t, const Signature* sig, std::string& path) {
  switch (t.kind()) {
    case HolTerm::Kind::Var:
      return t.type_annotation();
    case HolTerm::Kind::Const: {
      if (sig == nullptr) return t.type_annotation();
      if (logic::is_logical(t.name())) {
        if (!admissible_logical_type(t.name(), t.type_annotation()))
          throw Error(ErrorCode::TypeMismatch, at(path) + ": logical constant " + t.name() +
                                                   " at inadmissible type " +
                                                   to_string(t.type_annotation()));
        return t.type_annotation();
      }
      auto declared = sig->lookup(t.name());
      if (!declared) throw Error(ErrorCode::UnboundConstant, at(path) + ": " + t.name());
      if (*declared != t.type_annotation())
        throw Error(ErrorCode::TypeMismatch, at(path) + ": constant " + t.name() + " expected " +
                                                 to_string(*declared) + ", found " +
                                                 to_string(t.type_annotation()));
      return *declared;
    }
    case HolTerm::Kind::App: {
      path.push_back('0');
      HolType f = check(t.fn(), sig, path);
      path.back() = '1';
      HolType a = check(t.arg(), sig, path);
      path.pop_back();
      if (!f.is_arrow())
        throw Error(ErrorCode::TypeMismatch,
                    at(path) + ": expected a function, found " + to_string(f));
      if (f.domain() != a)
        throw Error(ErrorCode::TypeMismatch, at(path) + ": expected " + to_string(f.domain()) +
                                                 ", found " + to_string(a));
      return f.codomain();
    }
    case HolTerm::Kind::Lam: {
      path.push_back('0');
      HolType b = check(t.body(), sig, path);
      path.pop_back();
      return HolType::arrow(t.type_annotation(), b);
    }
  }
  return HolType::boolean();
}

void collect_free(const HolTerm& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case HolTerm::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      break;
    case HolTerm::Kind::Const:
      break;
    case HolTerm::Kind::App:
      collect_free(t.fn(), bound, out);
      collect_free(t.arg(), bound, out);
      break;
    case HolTerm::Kind::Lam:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      break;
  }
}

HolTerm subst(const HolTerm& t, const std::string& var, const HolTerm& s, const HolType& s_type,
              const std::set<std::string>& s_free) {
  switch (t.kind()) {
    case HolTerm::Kind::Var:
      if (t.name() != var) return t;
      if (t.type_annotation() != s_type)
        throw Error(ErrorCode::TypeMismatch, "substituting " + to_string(s_type) + " for " + var +
                                                 ":" + to_string(t.type_annotation()));
      return s;
    case HolTerm::Kind::Const:
      return t;
    case HolTerm::Kind::App: {
      HolTerm f = subst(t.fn(), var, s, s_type, s_free);
      HolTerm a = subst(t.arg(), var, s, s_type, s_free);
      if (f == t.fn() && a == t.arg()) return t;
      return HolTerm::app(std::move(f), std::move(a));
    }
    case HolTerm::Kind::Lam: {
      if (t.name() == var || !occurs_free(var, t.body())) return t;
      if (s_free.count(t.name()) == 0) {
        return HolTerm::lam(t.name(), t.type_annotation(),
                            subst(t.body(), var, s, s_type, s_free));
      }
      std::set<std::string> avoid = s_free;
      std::vector<std::string> no_binders;
      collect_free(t.body(), no_binders, avoid);
      avoid.insert(var);
      std::string renamed = fresh_name(t.name(), avoid);
      HolTerm fresh_var = HolTerm::variable(renamed, t.type_annotation());
      HolTerm body = subst(t.body(), t.name(), fresh_var, t.type_annotation(), {renamed});
      return HolTerm::lam(renamed, t.type_annotation(), subst(body, var, s, s_type, s_free));
    }
  }
  return t;
}

HolTerm normalize(const HolTerm& t) {
  switch (t.kind()) {
    case HolTerm::Kind::Var:
    case HolTerm::Kind::Const:
      return t;
    case HolTerm::Kind::Lam: {
      HolTerm body = normalize(t.body());
      if (body.is_app() && body.arg().is_var() && body.arg().name() == t.name() &&
          body.arg().type_annotation() == t.type_annotation() &&
          !occurs_free(t.name(), body.fn())) {
        return body.fn();
      }
      if (body == t.body()) return t;
      return HolTerm::lam(t.name(), t.type_annotation(), std::move(body));
    }
    case HolTerm::Kind::App: {
      HolTerm f = normalize(t.fn());
      HolTerm a = normalize(t.arg());
      if (f.is_lam()) return normalize(substitute(f.body(), f.name(), a));
      if (f == t.fn() && a == t.arg()) return t;
      return HolTerm::app(std::move(f), std::move(a));
    }
  }
  return t;
}

using Binders = std::vector<std::pair<std::string, std::string>>;

bool alpha(const HolTerm& a, const HolTerm& b, Binders& binders) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case HolTerm::Kind::Const:
      return a.name() == b.name() && a.type_annotation() == b.type_annotation();
    case HolTerm::Kind::Var: {
      if (a.type_annotation() != b.type_annotation()) return false;
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        bool left = it->first == a.name();
        bool right = it->second == b.name();
        if (left || right) return left && right;
      }
      return a.name() == b.name();
    }
    case HolTerm::Kind::App:
      return alpha(a.fn(), b.fn(), binders) && alpha(a.arg(), b.arg(), binders);
    case HolTerm::Kind::Lam: {
      if (a.type_annotation() != b.type_annotation()) return false;
      binders.emplace_back(a.name(), b.name());
      bool ok = alpha(a.body(), b.body(), binders);
      binders.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

HolType type_of(const HolTerm& term) {
  std::string path;
  return check(term, nullptr, path);
}

HolType typecheck(const HolTerm& term, const Signature& sig) {
  std::string path;
  return check(term, &sig, path);
}

std::set<std::string> free_vars(const HolTerm& term) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(term, bound, out);
  return out;
}

bool occurs_free(const std::string& var, const HolTerm& term) {
  switch (term.kind()) {
    case HolTerm::Kind::Var: return term.name() == var;
    case HolTerm::Kind::Const: return false;
    case HolTerm::Kind::App: return occurs_free(var, term.fn()) || occurs_free(var, term.arg());
    case HolTerm::Kind::Lam: return term.name() != var && occurs_free(var, term.body());
  }
  return false;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string name = base + "'";
  while (avoid.count(name)) name += "'";
  return name;
}

HolTerm substitute(const HolTerm& term, const std::string& var, const HolTerm& replacement) {
  HolType s_type = type_of(replacement);
  return subst(term, var, replacement, s_type, free_vars(replacement));
}

HolTerm beta_eta_normalize(const HolTerm& term) { return normalize(term); }

bool alpha_eq(const HolTerm& a, const HolTerm& b) {
  Binders binders;
  return alpha(a, b, binders);
}

}  // namespace modalhol::kernel
