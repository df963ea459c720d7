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
#include <iterator>
#include <map>

#include "modalhol/embedding.hpp"

namespace modalhol::embedding {

using syntax::Formula;
using syntax::Op;
using syntax::Sort;
using syntax::Term;

namespace {

const HolType& o() {
  static const HolType t = HolType::boolean();
  return t;
}
const HolType& i() {
  static const HolType t = HolType::world();
  return t;
}
const HolType& e() {
  static const HolType t = HolType::indiv();
  return t;
}

HolTerm var(const std::string& n, const HolType& t) { return HolTerm::variable(n, t); }

HolTerm relation(const std::string& index) {
  return HolTerm::constant(relation_name(index), HolType::arrow(i(), HolType::arrow(i(), o())));
}

HolTerm eiw() {
  return HolTerm::constant(kExistsAt, HolType::arrow(e(), HolType::arrow(i(), o())));
}

// \phi:(i=>o). \w:i. op (phi w)
template <typename F>
HolTerm unary(F op) {
  HolTerm phi = var("phi", world_pred()), w = var("w", i());
  return HolTerm::lam("phi", world_pred(), HolTerm::lam("w", i(), op(HolTerm::app(phi, w))));
}

// \phi. \psi. \w. (phi w) op (psi w)
template <typename F>
HolTerm binary(F op) {
  HolTerm phi = var("phi", world_pred()), psi = var("psi", world_pred()), w = var("w", i());
  return HolTerm::lam(
      "phi", world_pred(),
      HolTerm::lam("psi", world_pred(),
                   HolTerm::lam("w", i(), op(HolTerm::app(phi, w), HolTerm::app(psi, w)))));
}

}  // namespace

unsigned LogicPreset::flags() const {
  switch (frame) {
    case FrameClass::K: return 0;
    case FrameClass::KB: return kSymmetric;
    case FrameClass::KT: return kReflexive;
    case FrameClass::S4: return kReflexive | kTransitive;
    case FrameClass::S5equiv: return kReflexive | kSymmetric | kTransitive | kEuclidean;
    case FrameClass::S5universal:
      return kReflexive | kSymmetric | kTransitive | kEuclidean | kUniversal;
    case FrameClass::Custom: return custom_flags;
  }
  return 0;
}

LogicPreset LogicPreset::named(const std::string& frame, DomainCondition domain) {
  LogicPreset p;
  p.domain = domain;
  if (frame == "K") p.frame = FrameClass::K;
  else if (frame == "KB") p.frame = FrameClass::KB;
  else if (frame == "KT") p.frame = FrameClass::KT;
  else if (frame == "S4") p.frame = FrameClass::S4;
  else if (frame == "S5" || frame == "S5universal") p.frame = FrameClass::S5universal;
  else if (frame == "S5equiv") p.frame = FrameClass::S5equiv;
  else throw Error(ErrorCode::UndeclaredLogic, "unknown logic '" + frame + "'");
  return p;
}

std::string frame_name(FrameClass frame) {
  switch (frame) {
    case FrameClass::K: return "K";
    case FrameClass::KB: return "KB";
    case FrameClass::KT: return "KT";
    case FrameClass::S4: return "S4";
    case FrameClass::S5universal: return "S5universal";
    case FrameClass::S5equiv: return "S5equiv";
    case FrameClass::Custom: return "custom";
  }
  return "?";
}

std::string flag_name(FrameFlag flag) {
  switch (flag) {
    case kReflexive: return "reflexive";
    case kSymmetric: return "symmetric";
    case kTransitive: return "transitive";
    case kEuclidean: return "euclidean";
    case kUniversal: return "universal";
  }
  return "?";
}

std::string to_string(const LogicPreset& preset) {
  std::string s = frame_name(preset.frame);
  if (preset.frame == FrameClass::Custom) {
    s += "(";
    bool first = true;
    for (FrameFlag f : {kReflexive, kSymmetric, kTransitive, kEuclidean, kUniversal}) {
      if (!(preset.custom_flags & f)) continue;
      s += (first ? "" : ", ") + flag_name(f);
      first = false;
    }
    s += ")";
  }
  s += preset.varying() ? " varying" : " constant";
  if (preset.actual_world) s += " actual " + *preset.actual_world;
  return s;
}

LogicPreset preset_from(const syntax::LogicDecl& decl, const syntax::Declarations& decls) {
  DomainCondition dom =
      decl.domain == "varying" ? DomainCondition::Varying : DomainCondition::Constant;
  LogicPreset p;
  if (decl.frame == "custom") {
    p.frame = FrameClass::Custom;
    p.domain = dom;
    for (const auto& f : decl.flags) {
      for (FrameFlag flag : {kReflexive, kSymmetric, kTransitive, kEuclidean, kUniversal})
        if (flag_name(flag) == f) p.custom_flags |= flag;
    }
  } else {
    p = LogicPreset::named(decl.frame, dom);
  }
  p.indices = decls.indices;
  p.actual_world = decl.actual_world;
  return p;
}

std::string relation_name(const std::string& index) {
  return index == syntax::kDefaultIndex ? "r" : "r_" + index;
}

HolType world_pred() { return HolType::arrow(i(), o()); }

HolType lift(const Sort& sort) {
  switch (sort.kind()) {
    case Sort::Kind::Indiv: return e();
    case Sort::Kind::Prop: return world_pred();
    case Sort::Kind::Arrow: return HolType::arrow(lift(sort.domain()), lift(sort.codomain()));
  }
  return o();
}

HolType flat(const Sort& sort) {
  switch (sort.kind()) {
    case Sort::Kind::Indiv: return e();
    case Sort::Kind::Prop: return o();
    case Sort::Kind::Arrow: return HolType::arrow(flat(sort.domain()), flat(sort.codomain()));
  }
  return o();
}

kernel::Signature embedding_signature(const syntax::Declarations& decls,
                                      const LogicPreset& preset) {
  kernel::Signature sig;
  sig.reserve("r");
  sig.reserve_prefix("r_");
  sig.reserve(kFreeExists);
  if (!preset.universal_box())
    for (const auto& idx : preset.indices) sig.declare_reserved(relation_name(idx), relation("").type_annotation());
  sig.declare_reserved(kExistsAt, eiw().type_annotation());
  if (preset.actual_world) sig.declare_reserved(*preset.actual_world, i());
  for (const auto& [name, sort] : decls.constants) sig.declare(name, lift(sort));
  return sig;
}

kernel::Signature free_signature(const syntax::Declarations& decls) {
  kernel::Signature sig;
  sig.declare_reserved(kFreeExists, HolType::arrow(e(), o()));
  for (const auto& [name, sort] : decls.constants) sig.declare(name, flat(sort));
  return sig;
}

namespace eq {

HolTerm top() { return HolTerm::lam("w", i(), kernel::logic::truth()); }
HolTerm bottom() { return HolTerm::lam("w", i(), kernel::logic::falsity()); }
HolTerm negation() {
  return unary([](HolTerm a) { return kernel::logic::neg(std::move(a)); });
}
HolTerm conj() {
  return binary([](HolTerm a, HolTerm b) { return kernel::logic::conj(std::move(a), std::move(b)); });
}
HolTerm disj() {
  return binary([](HolTerm a, HolTerm b) { return kernel::logic::disj(std::move(a), std::move(b)); });
}
HolTerm implies() {
  return binary([](HolTerm a, HolTerm b) { return kernel::logic::imp(std::move(a), std::move(b)); });
}
HolTerm iff() {
  return binary([](HolTerm a, HolTerm b) { return kernel::logic::iff(std::move(a), std::move(b)); });
}

HolTerm box(const std::string& index, bool universal) {
  HolTerm phi = var("phi", world_pred()), w = var("w", i()), v = var("v", i());
  HolTerm body = universal ? HolTerm::app(phi, v)
                           : kernel::logic::imp(HolTerm::app(relation(index), {w, v}),
                                                HolTerm::app(phi, v));
  return HolTerm::lam("phi", world_pred(),
                      HolTerm::lam("w", i(), kernel::logic::forall("v", i(), body)));
}

HolTerm dia(const std::string& index, bool universal) {
  HolTerm phi = var("phi", world_pred()), w = var("w", i()), v = var("v", i());
  HolTerm body = universal ? HolTerm::app(phi, v)
                           : kernel::logic::conj(HolTerm::app(relation(index), {w, v}),
                                                 HolTerm::app(phi, v));
  return HolTerm::lam("phi", world_pred(),
                      HolTerm::lam("w", i(), kernel::logic::exists("v", i(), body)));
}

namespace {
HolTerm quantifier(const Sort& sort, bool guarded, bool universal) {
  HolType a = lift(sort);
  HolType body_type = HolType::arrow(a, world_pred());
  HolTerm Phi = var("Phi", body_type), w = var("w", i()), x = var("x", a);
  HolTerm inst = HolTerm::app(Phi, {x, w});
  if (guarded) {
    HolTerm ex = HolTerm::app(eiw(), {x, w});
    inst = universal ? kernel::logic::imp(ex, inst) : kernel::logic::conj(ex, inst);
  }
  HolTerm q = universal ? kernel::logic::forall("x", a, inst) : kernel::logic::exists("x", a, inst);
  return HolTerm::lam("Phi", body_type, HolTerm::lam("w", i(), q));
}
}  // namespace

HolTerm forall(const Sort& sort, bool guarded) { return quantifier(sort, guarded, true); }
HolTerm exists(const Sort& sort, bool guarded) { return quantifier(sort, guarded, false); }
HolTerm exists_at() { return eiw(); }

}  // namespace eq

namespace {

class Embedder {
 public:
  Embedder(const LogicPreset& preset, const kernel::Signature& sig,
           const std::vector<std::pair<std::string, Sort>>& free)
      : preset_(preset), sig_(sig), scope_(free) {}

  HolTerm formula(const Formula& f) {
    switch (f.op()) {
      case Op::Top: return eq::top();
      case Op::Bottom: return eq::bottom();
      case Op::Atom: return atom(f);
      case Op::Not: return HolTerm::app(eq::negation(), formula(f.body()));
      case Op::And: return HolTerm::app(eq::conj(), {formula(f.lhs()), formula(f.rhs())});
      case Op::Or: return HolTerm::app(eq::disj(), {formula(f.lhs()), formula(f.rhs())});
      case Op::Implies: return HolTerm::app(eq::implies(), {formula(f.lhs()), formula(f.rhs())});
      case Op::Iff: return HolTerm::app(eq::iff(), {formula(f.lhs()), formula(f.rhs())});
      case Op::Box:
      case Op::Dia: {
        if (std::find(preset_.indices.begin(), preset_.indices.end(), f.name()) ==
            preset_.indices.end())
          throw Error(ErrorCode::SortError, "modality index '" + f.name() + "' not declared");
        HolTerm c = f.op() == Op::Box ? eq::box(f.name(), preset_.universal_box())
                                      : eq::dia(f.name(), preset_.universal_box());
        return HolTerm::app(c, formula(f.body()));
      }
      case Op::Forall:
      case Op::Exists: {
        bool guarded = preset_.varying() && f.sort() == Sort::indiv();
        return quantified(f, f.sort(), guarded, f.op() == Op::Forall);
      }
      case Op::FreeForall:
      case Op::FreeExists:
        return quantified(f, Sort::indiv(), true, f.op() == Op::FreeForall);
      case Op::ExistsPred: {
        need_eiw();
        HolTerm t = term(f.args()[0], Sort::indiv());
        return HolTerm::app(eq::exists_at(), t);
      }
      case Op::CommonKnows:
        throw Error(ErrorCode::UnsupportedConstruct,
                    "common knowledge has no embedding equation; use the model checker");
    }
    throw Error(ErrorCode::UnsupportedConstruct, "unknown operator");
  }

 private:
  void need_eiw() {
    if (!sig_.contains(kExistsAt))
      throw Error(ErrorCode::MissingExistencePredicate,
                  "existence predicate 'eiw' missing from the signature");
  }

  HolTerm quantified(const Formula& f, const Sort& sort, bool guarded, bool universal) {
    if (guarded) need_eiw();
    scope_.emplace_back(f.name(), sort);
    HolTerm body = formula(f.body());
    scope_.pop_back();
    HolTerm abs = HolTerm::lam(f.name(), lift(sort), body);
    return HolTerm::app(universal ? eq::forall(sort, guarded) : eq::exists(sort, guarded), abs);
  }

  const Sort* bound(const std::string& n) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == n) return &it->second;
    return nullptr;
  }

  HolTerm head(const std::string& name, bool is_var, Sort* sort_out) {
    if (is_var) {
      const Sort* s = bound(name);
      if (!s) throw Error(ErrorCode::UnboundVariable, "unbound variable '" + name + "'");
      *sort_out = *s;
      return HolTerm::variable(name, lift(*s));
    }
    auto t = sig_.lookup(name);
    if (!t) throw Error(ErrorCode::UnboundConstant, "constant '" + name + "' not in the signature");
    *sort_out = sort_of_lifted(name, *t);
    return HolTerm::constant(name, *t);
  }

  // Recovers the object sort of a constant from its lifted type; i => o is o.
  Sort sort_of_lifted(const std::string& name, const HolType& t) {
    if (t == world_pred()) return Sort::prop();
    if (t == e()) return Sort::indiv();
    if (t.is_arrow()) return Sort::arrow(sort_of_lifted(name, t.domain()), sort_of_lifted(name, t.codomain()));
    throw Error(ErrorCode::SortError, "'" + name + "' is not a lifted constant");
  }

  HolTerm applied(const std::string& name, bool is_var, const std::vector<Term>& args,
                  Sort* result) {
    Sort s = Sort::prop();
    HolTerm h = head(name, is_var, &s);
    for (const auto& a : args) {
      if (!s.is_arrow()) throw Error(ErrorCode::SortError, "'" + name + "' applied to too many arguments");
      h = HolTerm::app(h, term(a, s.domain()));
      s = s.codomain();
    }
    *result = s;
    return h;
  }

  HolTerm term(const Term& t, const Sort& expected) {
    if (t.kind() == Term::Kind::Lambda) {
      size_t mark = scope_.size();
      for (const auto& p : t.params()) scope_.push_back(p);
      HolTerm body = formula(t.body());
      scope_.erase(scope_.begin() + static_cast<std::ptrdiff_t>(mark), scope_.end());
      for (auto it = t.params().rbegin(); it != t.params().rend(); ++it)
        body = HolTerm::lam(it->first, lift(it->second), body);
      return body;
    }
    Sort result = Sort::prop();
    HolTerm out = applied(t.name(), t.kind() == Term::Kind::Var, t.args(), &result);
    if (result != expected)
      throw Error(ErrorCode::SortError, "'" + t.name() + "' has sort " + to_string(result) +
                                            ", expected " + to_string(expected));
    return out;
  }

  HolTerm atom(const Formula& f) {
    Sort result = Sort::prop();
    HolTerm out = applied(f.name(), f.head_is_var(), f.args(), &result);
    if (result != Sort::prop())
      throw Error(ErrorCode::SortError, "atom '" + f.name() + "' is not of sort o");
    return out;
  }

  const LogicPreset& preset_;
  const kernel::Signature& sig_;
  std::vector<std::pair<std::string, Sort>> scope_;
};

class FreeEmbedder {
 public:
  explicit FreeEmbedder(const kernel::Signature& sig) : sig_(sig) {}

  HolTerm formula(const Formula& f) {
    using namespace kernel::logic;
    switch (f.op()) {
      case Op::Top: return truth();
      case Op::Bottom: return falsity();
      case Op::Atom: return atom(f);
      case Op::Not: return neg(formula(f.body()));
      case Op::And: return conj(formula(f.lhs()), formula(f.rhs()));
      case Op::Or: return disj(formula(f.lhs()), formula(f.rhs()));
      case Op::Implies: return imp(formula(f.lhs()), formula(f.rhs()));
      case Op::Iff: return iff(formula(f.lhs()), formula(f.rhs()));
      case Op::Forall:
      case Op::Exists: {
        scope_.emplace_back(f.name(), f.sort());
        HolTerm body = formula(f.body());
        scope_.pop_back();
        HolType t = flat(f.sort());
        return f.op() == Op::Forall ? forall(f.name(), t, body) : exists(f.name(), t, body);
      }
      case Op::FreeForall:
      case Op::FreeExists: {
        scope_.emplace_back(f.name(), Sort::indiv());
        HolTerm body = formula(f.body());
        scope_.pop_back();
        HolTerm ex = HolTerm::app(existence(), HolTerm::variable(f.name(), e()));
        return f.op() == Op::FreeForall ? forall(f.name(), e(), imp(ex, body))
                                        : exists(f.name(), e(), conj(ex, body));
      }
      case Op::ExistsPred:
        return HolTerm::app(existence(), term(f.args()[0]));
      default:
        throw Error(ErrorCode::SortError, "modal operator in a free-logic formula");
    }
  }

 private:
  HolTerm existence() {
    auto t = sig_.lookup(kFreeExists);
    if (!t) throw Error(ErrorCode::SortError, "free-logic signature lacks 'E'");
    return HolTerm::constant(kFreeExists, *t);
  }

  const Sort* bound(const std::string& n) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == n) return &it->second;
    return nullptr;
  }

  HolTerm applied(const std::string& name, bool is_var, const std::vector<Term>& args) {
    HolTerm h = HolTerm::constant("", o());
    if (is_var) {
      const Sort* s = bound(name);
      if (!s) throw Error(ErrorCode::UnboundVariable, "unbound variable '" + name + "'");
      h = HolTerm::variable(name, flat(*s));
    } else {
      auto t = sig_.lookup(name);
      if (!t) throw Error(ErrorCode::UnboundConstant, "constant '" + name + "' not in the signature");
      h = HolTerm::constant(name, *t);
    }
    for (const auto& a : args) h = HolTerm::app(h, term(a));
    return h;
  }

  HolTerm term(const Term& t) {
    if (t.kind() == Term::Kind::Lambda) {
      size_t mark = scope_.size();
      for (const auto& p : t.params()) scope_.push_back(p);
      HolTerm body = formula(t.body());
      scope_.erase(scope_.begin() + static_cast<std::ptrdiff_t>(mark), scope_.end());
      for (auto it = t.params().rbegin(); it != t.params().rend(); ++it)
        body = HolTerm::lam(it->first, flat(it->second), body);
      return body;
    }
    return applied(t.name(), t.kind() == Term::Kind::Var, t.args());
  }

  HolTerm atom(const Formula& f) { return applied(f.name(), f.head_is_var(), f.args()); }

  const kernel::Signature& sig_;
  std::vector<std::pair<std::string, Sort>> scope_;
};

}  // namespace

HolTerm embed(const Formula& ast, const LogicPreset& preset, const kernel::Signature& sig,
              const std::vector<std::pair<std::string, Sort>>& free) {
  return Embedder(preset, sig, free).formula(ast);
}

HolTerm embed_unfolded(const Formula& ast, const LogicPreset& preset,
                       const kernel::Signature& sig) {
  return kernel::beta_eta_normalize(embed(ast, preset, sig));
}

HolTerm ground(const HolTerm& term, const LogicPreset& preset) {
  if (kernel::type_of(term) != world_pred())
    throw Error(ErrorCode::TypeMismatch, "ground expects a world predicate, found " +
                                             kernel::to_string(kernel::type_of(term)));
  if (preset.actual_world)
    return kernel::beta_eta_normalize(HolTerm::app(term, HolTerm::constant(*preset.actual_world, i())));
  return kernel::beta_eta_normalize(HolTerm::app(kernel::logic::forall_const(i()), term));
}

std::vector<HolTerm> frame_axioms(const LogicPreset& preset) {
  using namespace kernel::logic;
  std::vector<HolTerm> out;
  if (preset.universal_box()) return out;
  unsigned flags = preset.flags();
  HolTerm w = var("w", i()), v = var("v", i()), u = var("u", i());
  for (const auto& idx : preset.indices) {
    HolTerm r = relation(idx);
    auto R = [&](const HolTerm& a, const HolTerm& b) { return HolTerm::app(r, {a, b}); };
    auto all = [&](std::initializer_list<const char*> names, HolTerm body) {
      for (auto it = std::rbegin(names); it != std::rend(names); ++it) body = forall(*it, i(), body);
      return body;
    };
    if (flags & kReflexive) out.push_back(all({"w"}, R(w, w)));
    if (flags & kSymmetric) out.push_back(all({"w", "v"}, imp(R(w, v), R(v, w))));
    if (flags & kTransitive)
      out.push_back(all({"w", "v", "u"}, imp(conj(R(w, v), R(v, u)), R(w, u))));
    if (flags & kEuclidean)
      out.push_back(all({"w", "v", "u"}, imp(conj(R(w, v), R(w, u)), R(v, u))));
    if (flags & kUniversal) out.push_back(all({"w", "v"}, R(w, v)));
  }
  return out;
}

HolTerm embed_free(const Formula& ast, const kernel::Signature& sig) {
  return FreeEmbedder(sig).formula(ast);
}

}  // namespace modalhol::embedding
