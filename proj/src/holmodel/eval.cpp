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

#include <functional>
#include <limits>
#include <sstream>

#include "modalhol/holmodel.hpp"

namespace modalhol::holmodel {

namespace lg = kernel::logic;

uint64_t carrier_size(const HolType& type, const Carriers& c) {
  switch (type.kind()) {
    case HolType::Kind::Bool: return 2;
    case HolType::Kind::World: return static_cast<uint64_t>(c.worlds);
    case HolType::Kind::Indiv: return static_cast<uint64_t>(c.indiv);
    case HolType::Kind::Var:
      throw Error(ErrorCode::TypeMismatch, "no carrier for type variable " + to_string(type));
    case HolType::Kind::Arrow: {
      uint64_t n = carrier_size(type.domain(), c);
      uint64_t b = carrier_size(type.codomain(), c);
      uint64_t out = 1;
      for (uint64_t k = 0; k < n; ++k) {
        if (b != 0 && out > (uint64_t{1} << 62) / b)
          throw Error(ErrorCode::BoundsTooLarge, "carrier of " + to_string(type) + " too large");
        out *= b;
      }
      return out;
    }
  }
  return 0;
}

Value apply(Value f, Value x, uint64_t codomain_size) {
  for (Value k = 0; k < x; ++k) f /= codomain_size;
  return f % codomain_size;
}

namespace {

int arity(const std::string& name) {
  if (name == lg::kTrue || name == lg::kFalse) return 0;
  if (name == lg::kNot || name == lg::kForall || name == lg::kExists) return 1;
  return 2;
}

class Evaluator {
 public:
  Evaluator(const HolModel& m, Env env) : m_(m), env_(std::move(env)) {}

  Value value(const HolTerm& t) {
    std::vector<Value> args;
    return eval(t, args);
  }

 private:
  uint64_t size(const HolType& t) {
    auto it = sizes_.find(t);
    if (it != sizes_.end()) return it->second;
    uint64_t s = carrier_size(t, m_.carriers);
    sizes_.emplace(t, s);
    return s;
  }

  Value lookup(const std::string& name) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == name) return it->second;
    throw Error(ErrorCode::UnboundVariable, "variable '" + name + "' has no value");
  }

  // `args` holds values still to be applied, next one at the back.
  Value eval(const HolTerm& t, std::vector<Value>& args) {
    switch (t.kind()) {
      case HolTerm::Kind::Var: return applied(lookup(t.name()), t.type_annotation(), args);
      case HolTerm::Kind::Const: {
        if (lg::is_logical(t.name())) return logical_values(t, {}, args);
        auto it = m_.interp.find(t.name());
        if (it == m_.interp.end())
          throw Error(ErrorCode::MissingInterpretation, "constant '" + t.name() + "' has no value");
        return applied(it->second, t.type_annotation(), args);
      }
      case HolTerm::Kind::Lam: {
        if (args.empty()) return tabulate(t);
        env_.emplace_back(t.name(), args.back());
        args.pop_back();
        Value v = eval(t.body(), args);
        env_.pop_back();
        return v;
      }
      case HolTerm::Kind::App: {
        std::vector<const HolTerm*> spine;
        const HolTerm* head = &t;
        while (head->is_app()) {
          spine.push_back(&head->arg());
          head = &head->fn();
        }
        if (head->is_const() && lg::is_logical(head->name())) {
          std::vector<HolTerm> terms;
          for (auto it = spine.rbegin(); it != spine.rend(); ++it) terms.push_back(**it);
          if (static_cast<int>(terms.size()) == arity(head->name())) return direct(*head, terms);
          std::vector<Value> vals;
          for (const auto& a : terms) vals.push_back(value(a));
          return logical_values(*head, vals, args);
        }
        for (const HolTerm* a : spine) args.push_back(value(*a));
        return eval(*head, args);
      }
    }
    return 0;
  }

  Value applied(Value v, HolType type, std::vector<Value>& args) {
    while (!args.empty()) {
      HolType cod = type.codomain();
      v = apply(v, args.back(), size(cod));
      args.pop_back();
      type = cod;
    }
    return v;
  }

  Value tabulate(const HolTerm& lam) {
    uint64_t n = size(lam.type_annotation());
    uint64_t radix = size(kernel::type_of(lam).codomain());
    Value out = 0, place = 1;
    for (Value x = 0; x < n; ++x) {
      env_.emplace_back(lam.name(), x);
      std::vector<Value> none;
      out += eval(lam.body(), none) * place;
      env_.pop_back();
      if (x + 1 < n) place *= radix;
    }
    return out;
  }

  // Full application with the argument terms at hand: short-circuit the
  // connectives and loop over quantified lambdas with early exit.
  Value direct(const HolTerm& head, const std::vector<HolTerm>& a) {
    const std::string& n = head.name();
    if (n == lg::kNot) return !truth(a[0]);
    if (n == lg::kAnd) return truth(a[0]) && truth(a[1]);
    if (n == lg::kOr) return truth(a[0]) || truth(a[1]);
    if (n == lg::kImp) return !truth(a[0]) || truth(a[1]);
    if (n == lg::kIff) return truth(a[0]) == truth(a[1]);
    if (n == lg::kEq) return value(a[0]) == value(a[1]);
    bool all = n == lg::kForall;
    if (a[0].is_lam()) {
      const HolTerm& lam = a[0];
      uint64_t size_dom = size(lam.type_annotation());
      for (Value x = 0; x < size_dom; ++x) {
        env_.emplace_back(lam.name(), x);
        bool b = truth(lam.body());
        env_.pop_back();
        if (b != all) return !all;
      }
      return all;
    }
    return quantify(all, value(a[0]), size(head.type_annotation().domain().domain()));
  }

  static Value quantify(bool all, Value pred, uint64_t n) {
    Value ones = n >= 64 ? std::numeric_limits<Value>::max() : (Value{1} << n) - 1;
    return all ? pred == ones : pred != 0;
  }

  bool truth(const HolTerm& t) { return value(t) != 0; }

  // Logical constant applied to already evaluated arguments `vals` plus the
  // pending `args`; partial applications are tabulated.
  Value logical_values(const HolTerm& head, std::vector<Value> vals, std::vector<Value>& args) {
    size_t need = static_cast<size_t>(arity(head.name()));
    while (vals.size() < need && !args.empty()) {
      vals.push_back(args.back());
      args.pop_back();
    }
    if (vals.size() == need) return combine(head, vals);
    HolType rest = head.type_annotation();
    for (size_t k = 0; k < vals.size(); ++k) rest = rest.codomain();
    std::function<Value(HolType)> tab = [&](HolType type) -> Value {
      if (!type.is_arrow()) return combine(head, vals);
      uint64_t n = size(type.domain()), radix = size(type.codomain());
      Value out = 0, place = 1;
      for (Value x = 0; x < n; ++x) {
        vals.push_back(x);
        out += tab(type.codomain()) * place;
        vals.pop_back();
        if (x + 1 < n) place *= radix;
      }
      return out;
    };
    return tab(rest);
  }

  Value combine(const HolTerm& head, const std::vector<Value>& v) {
    const std::string& n = head.name();
    if (n == lg::kTrue) return 1;
    if (n == lg::kFalse) return 0;
    if (n == lg::kNot) return !v[0];
    if (n == lg::kAnd) return v[0] && v[1];
    if (n == lg::kOr) return v[0] || v[1];
    if (n == lg::kImp) return !v[0] || v[1];
    if (n == lg::kIff) return (v[0] != 0) == (v[1] != 0);
    if (n == lg::kEq) return v[0] == v[1];
    return quantify(n == lg::kForall, v[0], size(head.type_annotation().domain().domain()));
  }

  const HolModel& m_;
  Env env_;
  std::map<HolType, uint64_t> sizes_;
};

}  // namespace

Value eval_term(const HolModel& model, const HolTerm& term, const Env& env) {
  return Evaluator(model, env).value(term);
}

bool eval_formula(const HolModel& model, const HolTerm& term, const Env& env) {
  return eval_term(model, term, env) != 0;
}

HolModel induce_hol_model(const kripke::KripkeModel& km, const embedding::LogicPreset& preset,
                          const kernel::Signature& sig) {
  HolModel m;
  m.carriers = {km.worlds, km.carrier};
  const int w = km.worlds;
  if (w * w > 64 || w * km.carrier > 64)
    throw Error(ErrorCode::BoundsTooLarge, "Kripke model too large to induce a HOL model");
  std::map<std::string, std::string> relations;
  if (!preset.universal_box())
    for (const auto& idx : preset.indices) relations[embedding::relation_name(idx)] = idx;
  for (const auto& e : sig.entries()) {
    Value v = 0;
    if (auto r = relations.find(e.name); r != relations.end()) {
      auto acc = km.access.find(r->second);
      if (acc != km.access.end())
        for (int a = 0; a < w; ++a) v |= acc->second[a] << (w * a);
    } else if (e.name == embedding::kExistsAt) {
      for (int x = 0; x < km.carrier; ++x) {
        Value ext = 0;
        for (int u = 0; u < w; ++u)
          if ((km.domain[u] >> x) & 1) ext |= Value{1} << u;
        v |= ext << (w * x);
      }
    } else if (preset.actual_world && e.name == *preset.actual_world) {
      v = static_cast<Value>(km.actual);
    } else if (const kripke::Valuation* val = km.find(e.name)) {
      if (embedding::lift(val->sort) != e.type)
        throw Error(ErrorCode::MissingInterpretation,
                    "'" + e.name + "' is valued at a different sort than declared");
      v = val->value;
    } else {
      throw Error(ErrorCode::MissingInterpretation, "no value for '" + e.name + "'");
    }
    m.interp[e.name] = v;
  }
  return m;
}

ModelStream::ModelStream(const kernel::Signature& sig, HolModel base, uint64_t cap)
    : base_(std::move(base)) {
  for (const auto& e : sig.entries()) {
    if (base_.interp.count(e.name)) continue;
    uint64_t n = carrier_size(e.type, base_.carriers);
    if (n != 0 && total_ > cap / n)
      throw Error(ErrorCode::BoundsTooLarge,
                  "more than " + std::to_string(cap) + " interpretations to enumerate");
    total_ *= n;
    free_.emplace_back(e.name, n);
  }
  if (total_ > cap)
    throw Error(ErrorCode::BoundsTooLarge,
                "more than " + std::to_string(cap) + " interpretations to enumerate");
}

HolModel ModelStream::at(uint64_t k) const {
  HolModel m = base_;
  for (auto it = free_.rbegin(); it != free_.rend(); ++it) {
    m.interp[it->first] = k % it->second;
    k /= it->second;
  }
  return m;
}

bool ModelStream::next(HolModel& out) {
  if (pos_ >= total_) return false;
  out = at(pos_++);
  return true;
}

ModelStream enumerate_hol_models(const kernel::Signature& sig, const Carriers& carriers,
                                 uint64_t cap) {
  HolModel base;
  base.carriers = carriers;
  return ModelStream(sig, base, cap);
}

std::string format_value(const HolType& type, Value v, const Carriers& c) {
  switch (type.kind()) {
    case HolType::Kind::Bool: return v ? "T" : "F";
    case HolType::Kind::Arrow: {
      uint64_t n = carrier_size(type.domain(), c), radix = carrier_size(type.codomain(), c);
      std::string s = "[";
      for (uint64_t x = 0; x < n; ++x) {
        if (x) s += ", ";
        s += format_value(type.codomain(), v % radix, c);
        v /= radix;
      }
      return s + "]";
    }
    default: return std::to_string(v);
  }
}

std::string to_string(const HolModel& model, const kernel::Signature& sig) {
  std::ostringstream out;
  out << "worlds " << model.carriers.worlds << ", individuals " << model.carriers.indiv << "\n";
  for (const auto& e : sig.entries()) {
    auto it = model.interp.find(e.name);
    if (it == model.interp.end()) continue;
    out << e.name << " : " << to_string(e.type) << " = "
        << format_value(e.type, it->second, model.carriers) << "\n";
  }
  return out.str();
}

}  // namespace modalhol::holmodel
