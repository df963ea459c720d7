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

#include "modalhol/kripke.hpp"

namespace modalhol::kripke {

using syntax::Formula;
using syntax::Op;
using syntax::Sort;
using syntax::Term;

KripkeModel KripkeModel::empty(int worlds, int carrier, const std::vector<std::string>& indices) {
  if (worlds < 1 || worlds > kMaxWorlds)
    throw Error(ErrorCode::BoundsTooLarge, "world count must be in 1.." + std::to_string(kMaxWorlds));
  if (carrier < 1 || carrier > kMaxCarrier)
    throw Error(ErrorCode::BoundsTooLarge, "carrier size must be in 1.." + std::to_string(kMaxCarrier));
  KripkeModel m;
  m.worlds = worlds;
  m.carrier = carrier;
  for (const auto& idx : indices) m.access[idx].assign(worlds, 0);
  m.domain.assign(worlds, m.full_domain());
  return m;
}

bool KripkeModel::edge(const std::string& index, int from, int to) const {
  auto it = access.find(index);
  if (it == access.end()) return false;
  return (it->second[from] >> to) & 1;
}

void KripkeModel::add_edge(const std::string& index, int from, int to) {
  auto& rel = access[index];
  rel.resize(worlds, 0);
  rel[from] |= 1ull << to;
}

const Valuation* KripkeModel::find(const std::string& name) const {
  for (const auto& v : valuation)
    if (v.name == name) return &v;
  return nullptr;
}

void KripkeModel::set(const std::string& name, const Sort& sort, Value value) {
  for (auto& v : valuation) {
    if (v.name == name) {
      v.sort = sort;
      v.value = value;
      return;
    }
  }
  valuation.push_back({name, sort, value});
}

bool operator==(const KripkeModel& a, const KripkeModel& b) {
  if (a.worlds != b.worlds || a.carrier != b.carrier || a.actual != b.actual ||
      a.access != b.access || a.domain != b.domain || a.valuation.size() != b.valuation.size())
    return false;
  for (size_t k = 0; k < a.valuation.size(); ++k) {
    const auto &x = a.valuation[k], &y = b.valuation[k];
    if (x.name != y.name || x.sort != y.sort || x.value != y.value) return false;
  }
  return true;
}

uint64_t sort_size(const Sort& sort, int worlds, int carrier) {
  constexpr uint64_t kLimit = 1ull << 62;
  switch (sort.kind()) {
    case Sort::Kind::Indiv: return static_cast<uint64_t>(carrier);
    case Sort::Kind::Prop:
      if (worlds >= 62) throw Error(ErrorCode::BoundsTooLarge, "too many worlds");
      return 1ull << worlds;
    case Sort::Kind::Arrow: {
      uint64_t a = sort_size(sort.domain(), worlds, carrier);
      uint64_t b = sort_size(sort.codomain(), worlds, carrier);
      uint64_t n = 1;
      for (uint64_t k = 0; k < a; ++k) {
        if (b != 0 && n > kLimit / b)
          throw Error(ErrorCode::BoundsTooLarge, "value space of " + to_string(sort) + " too large");
        n *= b;
      }
      return n;
    }
  }
  return 0;
}

Value apply(Value f, Value x, uint64_t codomain_size) {
  for (Value k = 0; k < x; ++k) f /= codomain_size;
  return f % codomain_size;
}

namespace {

class Evaluator {
 public:
  Evaluator(const KripkeModel& m, Env env) : m_(m), env_(std::move(env)) {
    all_ = m.all_worlds();
    // Worlds at which each individual exists.
    exists_at_.assign(m.carrier, 0);
    for (int w = 0; w < m.worlds; ++w)
      for (int x = 0; x < m.carrier; ++x)
        if ((m.domain[w] >> x) & 1) exists_at_[x] |= 1ull << w;
  }

  WorldSet ext(const Formula& f) {
    switch (f.op()) {
      case Op::Top: return all_;
      case Op::Bottom: return 0;
      case Op::Atom: return applied(f.name(), f.head_is_var(), f.args(), nullptr);
      case Op::Not: return all_ & ~ext(f.body());
      case Op::And: return ext(f.lhs()) & ext(f.rhs());
      case Op::Or: return ext(f.lhs()) | ext(f.rhs());
      case Op::Implies: return all_ & (~ext(f.lhs()) | ext(f.rhs()));
      case Op::Iff: return all_ & ~(ext(f.lhs()) ^ ext(f.rhs()));
      case Op::Box:
      case Op::Dia: {
        const std::vector<WorldSet>& rel = relation(f.name());
        WorldSet body = ext(f.body()), out = 0;
        for (int w = 0; w < m_.worlds; ++w) {
          bool holds = f.op() == Op::Box ? (rel[w] & ~body) == 0 : (rel[w] & body) != 0;
          if (holds) out |= 1ull << w;
        }
        return out;
      }
      case Op::CommonKnows: {
        WorldSet body = ext(f.body()), out = 0;
        for (int w = 0; w < m_.worlds; ++w)
          if ((reachable(m_, f.indices(), w) & ~body) == 0) out |= 1ull << w;
        return out;
      }
      case Op::Forall:
      case Op::Exists: {
        bool all = f.op() == Op::Forall;
        if (f.sort() == Sort::indiv()) return individuals(f, all);
        uint64_t n = sort_size(f.sort(), m_.worlds, m_.carrier);
        WorldSet out = all ? all_ : 0;
        for (uint64_t v = 0; v < n; ++v) {
          env_.push_back({f.name(), f.sort(), v});
          WorldSet b = ext(f.body());
          env_.pop_back();
          out = all ? out & b : out | b;
          if (out == (all ? 0 : all_)) break;
        }
        return out;
      }
      case Op::FreeForall: return individuals(f, true);
      case Op::FreeExists: return individuals(f, false);
      case Op::ExistsPred: {
        Value x = value(f.args()[0], Sort::indiv());
        return exists_at_[x];
      }
    }
    throw Error(ErrorCode::SortError, "unknown operator");
  }

  Value value(const Term& t, const std::optional<Sort>& expected) {
    if (t.kind() == Term::Kind::Lambda) return tabulate(t, 0);
    Sort s = Sort::prop();
    Value v = applied(t.name(), t.kind() == Term::Kind::Var, t.args(), &s);
    if (expected && s != *expected)
      throw Error(ErrorCode::SortError, "'" + t.name() + "' has sort " + to_string(s) +
                                            ", expected " + to_string(*expected));
    return v;
  }

 private:
  const std::vector<WorldSet>& relation(const std::string& idx) {
    auto it = m_.access.find(idx);
    if (it == m_.access.end() || static_cast<int>(it->second.size()) != m_.worlds) {
      empty_.assign(m_.worlds, 0);
      return empty_;
    }
    return it->second;
  }

  WorldSet individuals(const Formula& f, bool all) {
    WorldSet out = all ? all_ : 0;
    for (int x = 0; x < m_.carrier; ++x) {
      env_.push_back({f.name(), Sort::indiv(), static_cast<Value>(x)});
      WorldSet b = ext(f.body());
      env_.pop_back();
      out = all ? out & (b | ~exists_at_[x]) : out | (b & exists_at_[x]);
    }
    return out & all_;
  }

  // Value of a lambda's parameters from `k` on, as a table.
  Value tabulate(const Term& t, size_t k) {
    if (k == t.params().size()) return ext(t.body());
    const auto& [name, sort] = t.params()[k];
    uint64_t n = sort_size(sort, m_.worlds, m_.carrier);
    Sort rest = Sort::prop();
    for (size_t j = t.params().size(); j-- > k + 1;) rest = Sort::arrow(t.params()[j].second, rest);
    uint64_t radix = sort_size(rest, m_.worlds, m_.carrier);
    Value out = 0, place = 1;
    for (uint64_t v = 0; v < n; ++v) {
      env_.push_back({name, sort, v});
      out += tabulate(t, k + 1) * place;
      env_.pop_back();
      if (v + 1 < n) place *= radix;
    }
    return out;
  }

  Value applied(const std::string& name, bool is_var, const std::vector<Term>& args,
                Sort* result) {
    Value v = 0;
    Sort s = Sort::prop();
    if (is_var) {
      auto it = std::find_if(env_.rbegin(), env_.rend(), [&](const Binding& b) { return b.name == name; });
      if (it == env_.rend()) throw Error(ErrorCode::UnboundVariable, "unbound variable '" + name + "'");
      v = it->value;
      s = it->sort;
    } else {
      const Valuation* val = m_.find(name);
      if (!val) throw Error(ErrorCode::MissingInterpretation, "no value for '" + name + "'");
      v = val->value;
      s = val->sort;
    }
    for (const auto& a : args) {
      if (!s.is_arrow()) throw Error(ErrorCode::SortError, "'" + name + "' applied to too many arguments");
      Value x = value(a, s.domain());
      v = apply(v, x, sort_size(s.codomain(), m_.worlds, m_.carrier));
      s = s.codomain();
    }
    if (result) *result = s;
    else if (s != Sort::prop())
      throw Error(ErrorCode::SortError, "atom '" + name + "' is not of sort o");
    return v;
  }

  const KripkeModel& m_;
  Env env_;
  WorldSet all_;
  std::vector<WorldSet> exists_at_;
  std::vector<WorldSet> empty_;
};

}  // namespace

WorldSet extension(const KripkeModel& model, const Formula& f, const Env& env) {
  return Evaluator(model, env).ext(f);
}

bool eval(const KripkeModel& model, const Formula& f, int world, const Env& env) {
  if (world < 0 || world >= model.worlds)
    throw Error(ErrorCode::SortError, "world " + std::to_string(world) + " not in the model");
  return (extension(model, f, env) >> world) & 1;
}

Value term_value(const KripkeModel& model, const Term& t, const Env& env) {
  return Evaluator(model, env).value(t, std::nullopt);
}

bool relation_has(const std::vector<WorldSet>& rel, int worlds, unsigned flags) {
  using namespace embedding;
  WorldSet all = worlds >= 64 ? ~0ull : (1ull << worlds) - 1;
  for (int w = 0; w < worlds; ++w) {
    WorldSet succ = rel[w];
    if ((flags & kReflexive) && !((succ >> w) & 1)) return false;
    if ((flags & kUniversal) && succ != all) return false;
    for (int v = 0; v < worlds; ++v) {
      if (!((succ >> v) & 1)) continue;
      if ((flags & kSymmetric) && !((rel[v] >> w) & 1)) return false;
      if ((flags & kTransitive) && (rel[v] & ~succ)) return false;
      if ((flags & kEuclidean) && (succ & ~rel[v])) return false;
    }
  }
  return true;
}

std::vector<WorldSet> close_relation(std::vector<WorldSet> rel, int worlds, unsigned flags) {
  using namespace embedding;
  WorldSet all = worlds >= 64 ? ~0ull : (1ull << worlds) - 1;
  for (bool changed = true; changed;) {
    std::vector<WorldSet> before = rel;
    for (int w = 0; w < worlds; ++w) {
      if (flags & kUniversal) rel[w] = all;
      if (flags & kReflexive) rel[w] |= 1ull << w;
      for (int v = 0; v < worlds; ++v) {
        if (!((rel[w] >> v) & 1)) continue;
        if (flags & kSymmetric) rel[v] |= 1ull << w;
        if (flags & kTransitive) rel[w] |= rel[v];
        if (flags & kEuclidean) rel[v] |= rel[w];
      }
    }
    changed = rel != before;
  }
  return rel;
}

bool check_frame(const KripkeModel& model, const embedding::LogicPreset& preset) {
  if (model.worlds < 1 || model.carrier < 1) return false;
  if (static_cast<int>(model.domain.size()) != model.worlds) return false;
  if (model.actual < 0 || model.actual >= model.worlds) return false;
  for (uint64_t d : model.domain) {
    if (d & ~model.full_domain()) return false;
    if (!preset.varying() && d != model.full_domain()) return false;
  }
  for (const auto& [idx, rel] : model.access) {
    if (static_cast<int>(rel.size()) != model.worlds) return false;
    for (WorldSet s : rel)
      if (s & ~model.all_worlds()) return false;
  }
  std::vector<WorldSet> none(model.worlds, 0);
  for (const auto& idx : preset.indices) {
    auto it = model.access.find(idx);
    if (!relation_has(it == model.access.end() ? none : it->second, model.worlds, preset.flags()))
      return false;
  }
  return true;
}

bool valid_in_model(const KripkeModel& model, const Formula& f,
                    const embedding::LogicPreset& preset) {
  WorldSet e = extension(model, f);
  if (preset.actual_world) return (e >> model.actual) & 1;
  return e == model.all_worlds();
}

WorldSet reachable(const KripkeModel& model, const std::vector<std::string>& indices, int w) {
  std::vector<WorldSet> step(model.worlds, 0);
  for (const auto& idx : indices) {
    auto it = model.access.find(idx);
    if (it == model.access.end()) continue;
    for (int v = 0; v < model.worlds; ++v) step[v] |= it->second[v];
  }
  WorldSet seen = step[w], frontier = step[w];
  while (frontier) {
    WorldSet next = 0;
    for (int v = 0; v < model.worlds; ++v)
      if ((frontier >> v) & 1) next |= step[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

namespace {

// Old world index of each kept world.
std::vector<int> kept_worlds(const KripkeModel& m, WorldSet keep) {
  std::vector<int> out;
  for (int w = 0; w < m.worlds; ++w)
    if ((keep >> w) & 1) out.push_back(w);
  return out;
}

WorldSet compress(WorldSet s, const std::vector<int>& kept) {
  WorldSet out = 0;
  for (size_t k = 0; k < kept.size(); ++k)
    if ((s >> kept[k]) & 1) out |= 1ull << k;
  return out;
}

WorldSet expand(WorldSet s, const std::vector<int>& kept) {
  WorldSet out = 0;
  for (size_t k = 0; k < kept.size(); ++k)
    if ((s >> k) & 1) out |= 1ull << kept[k];
  return out;
}

// Value of `sort` in the old model mapped to the restricted one (forward), or
// a restricted value mapped back with removed worlds false (backward).
Value transport(const Sort& sort, Value v, const KripkeModel& m, const std::vector<int>& kept,
                bool forward) {
  int from_w = forward ? m.worlds : static_cast<int>(kept.size());
  int to_w = forward ? static_cast<int>(kept.size()) : m.worlds;
  switch (sort.kind()) {
    case Sort::Kind::Indiv: return v;
    case Sort::Kind::Prop: return forward ? compress(v, kept) : expand(v, kept);
    case Sort::Kind::Arrow: {
      uint64_t to_dom = sort_size(sort.domain(), to_w, m.carrier);
      uint64_t from_cod = sort_size(sort.codomain(), from_w, m.carrier);
      uint64_t to_cod = sort_size(sort.codomain(), to_w, m.carrier);
      Value out = 0, place = 1;
      for (Value x = 0; x < to_dom; ++x) {
        Value x_from = transport(sort.domain(), x, m, kept, !forward);
        Value y = apply(v, x_from, from_cod);
        out += transport(sort.codomain(), y, m, kept, forward) * place;
        if (x + 1 < to_dom) place *= to_cod;
      }
      return out;
    }
  }
  return v;
}

}  // namespace

KripkeModel restrict_to(const KripkeModel& model, WorldSet keep) {
  std::vector<int> kept = kept_worlds(model, keep & model.all_worlds());
  if (kept.empty()) throw Error(ErrorCode::BoundsTooLarge, "restriction to no worlds");
  KripkeModel out;
  out.worlds = static_cast<int>(kept.size());
  out.carrier = model.carrier;
  out.actual = 0;
  for (size_t k = 0; k < kept.size(); ++k)
    if (kept[k] == model.actual) out.actual = static_cast<int>(k);
  for (const auto& [idx, rel] : model.access) {
    auto& r = out.access[idx];
    for (int w : kept) r.push_back(compress(rel[w], kept));
  }
  for (int w : kept) out.domain.push_back(model.domain[w]);
  for (const auto& v : model.valuation)
    out.valuation.push_back({v.name, v.sort, transport(v.sort, v.value, model, kept, true)});
  return out;
}

}  // namespace modalhol::kripke
