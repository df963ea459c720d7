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

#include "modalhol/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace modalhol::search {

using kripke::KripkeModel;
using kripke::Value;
using kripke::WorldSet;
using syntax::Formula;
using syntax::Op;
using syntax::Sort;
using syntax::Term;

std::string to_string(const Bounds& b) {
  return std::to_string(b.max_worlds) + "w/" + std::to_string(b.max_indiv) + "i";
}

std::string kind_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::ValidUpTo: return "ValidUpTo";
    case Verdict::Kind::ValidCertified: return "ValidCertified";
    case Verdict::Kind::Countermodel: return "Countermodel";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr int kMaxSearchWorlds = 8;

// Definite truth and definite falsity, per world.
struct Tri {
  WorldSet t = 0;
  WorldSet f = 0;
};

bool sort_has_indiv(const Sort& s) {
  if (s == Sort::indiv()) return true;
  return s.is_arrow() && (sort_has_indiv(s.domain()) || sort_has_indiv(s.codomain()));
}

bool term_has_indiv(const Term& t);

bool formula_has_indiv(const Formula& f) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom: return false;
    case Op::Atom:
      for (const auto& a : f.args())
        if (term_has_indiv(a)) return true;
      return false;
    case Op::Forall:
    case Op::Exists: return sort_has_indiv(f.sort()) || formula_has_indiv(f.body());
    case Op::FreeForall:
    case Op::FreeExists:
    case Op::ExistsPred: return true;
    case Op::Not:
    case Op::Box:
    case Op::Dia:
    case Op::CommonKnows: return formula_has_indiv(f.body());
    default: return formula_has_indiv(f.lhs()) || formula_has_indiv(f.rhs());
  }
}

bool term_has_indiv(const Term& t) {
  if (t.kind() == Term::Kind::Lambda) {
    for (const auto& [n, s] : t.params())
      if (sort_has_indiv(s)) return true;
    return formula_has_indiv(t.body());
  }
  for (const auto& a : t.args())
    if (term_has_indiv(a)) return true;
  return false;
}

// Value table of a constant as a string of digits. Results of sort o are
// stored bitwise (one digit per argument tuple and world), individuals as
// base-|carrier| digits; the first argument is the most significant.
struct Layout {
  std::string name;
  Sort sort = Sort::prop();
  std::vector<Sort> args;
  uint64_t radix = 2;
  int digits = 0;
  // stride[j]: digits spanned by one value of argument j (1-based), i.e.
  // unit * product of the sizes of the later arguments. stride[0] = digits.
  std::vector<uint64_t> stride;
  std::vector<Value> pow;  // radix^p, p = 0..digits
};

Layout make_layout(const std::string& name, const Sort& sort, int worlds, int carrier) {
  Layout l;
  l.name = name;
  l.sort = sort;
  l.args = sort.arg_sorts();
  bool prop = sort.result() == Sort::prop();
  l.radix = prop ? 2 : static_cast<uint64_t>(carrier);
  uint64_t unit = prop ? static_cast<uint64_t>(worlds) : 1;
  kripke::sort_size(sort, worlds, carrier);  // throws BoundsTooLarge when too large
  l.stride.assign(l.args.size() + 1, unit);
  for (size_t j = l.args.size(); j-- > 0;)
    l.stride[j] = l.stride[j + 1] * kripke::sort_size(l.args[j], worlds, carrier);
  l.digits = static_cast<int>(l.stride[0]);
  l.pow.assign(l.digits + 1, 1);
  for (int p = 1; p <= l.digits; ++p) l.pow[p] = l.pow[p - 1] * l.radix;
  return l;
}

struct Partial {
  Value value = 0;  // unassigned digits are zero
  int known = 0;    // most significant digits assigned
};

class Engine {
 public:
  using Visit = std::function<bool(const KripkeModel&, int)>;

  Engine(const std::vector<Formula>& premises, const std::optional<Formula>& conjecture,
         const embedding::LogicPreset& preset, const syntax::Declarations& decls,
         const Bounds& bounds, Stats* stats)
      : premises_(premises), conj_(conjecture), preset_(preset), decls_(decls), bounds_(bounds),
        stats_(stats ? stats : &own_stats_) {
    if (bounds.max_worlds < 1 || bounds.max_indiv < 1)
      throw Error(ErrorCode::BoundsTooLarge, "bounds must be positive");
    // Relations are enumerated as W*W-bit masks.
    if (bounds.max_worlds > kMaxSearchWorlds || bounds.max_indiv > kripke::kMaxCarrier)
      throw Error(ErrorCode::BoundsTooLarge, "bounds beyond " + std::to_string(kMaxSearchWorlds) +
                                                 " worlds or " +
                                                 std::to_string(kripke::kMaxCarrier) + " individuals");
    std::vector<Formula> all = premises;
    if (conj_) all.push_back(*conj_);
    std::set<std::string> names, idx;
    for (const auto& f : all) {
      for (const auto& c : syntax::constants_of(f)) names.insert(c);
      for (const auto& i : syntax::indices_of(f)) idx.insert(i);
      uses_indiv_ = uses_indiv_ || formula_has_indiv(f);
    }
    for (const auto& [name, sort] : decls.constants) {
      if (!names.count(name)) continue;
      used_.emplace_back(name, sort);
      uses_indiv_ = uses_indiv_ || sort_has_indiv(sort);
      names.erase(name);
    }
    if (!names.empty())
      throw Error(ErrorCode::UnknownSymbol, "constant '" + *names.begin() + "' is not declared");
    for (const auto& i : idx)
      if (std::find(preset.indices.begin(), preset.indices.end(), i) == preset.indices.end())
        throw Error(ErrorCode::UnknownSymbol, "modality index '" + i + "' is not declared");
    for (const auto& i : preset.indices)
      if (idx.count(i)) used_indices_.push_back(i);
    for (const auto& f : all) {
      std::vector<Scope> scope;
      roots_.push_back(compile(f, scope));
    }
    env_.assign(slots_, 0);
  }

  bool run(const Visit& visit) {
    visit_ = &visit;
    for (int w = 1; w <= bounds_.max_worlds; ++w) {
      int max_c = uses_indiv_ ? bounds_.max_indiv : 1;
      for (int c = 1; c <= max_c; ++c)
        if (!structures(w, c)) return false;
    }
    return true;
  }

 private:
  // ---- structures ---------------------------------------------------------

  bool structures(int worlds, int carrier) {
    w_ = worlds;
    c_ = carrier;
    all_ = (1ull << worlds) - 1;
    layouts_.clear();
    for (const auto& [name, sort] : used_) layouts_.push_back(make_layout(name, sort, worlds, carrier));
    index_of_.clear();
    for (size_t k = 0; k < layouts_.size(); ++k) index_of_[layouts_[k].name] = k;
    vals_.assign(layouts_.size(), Partial{});
    rel_.clear();
    unsigned flags = preset_.flags();
    std::vector<WorldSet> least = kripke::close_relation(std::vector<WorldSet>(worlds, 0), worlds, flags);
    for (const auto& i : preset_.indices) rel_[i] = least;
    rels_.clear();
    for (const auto& i : used_indices_) rels_.push_back(&rel_[i]);
    prepare();
    return relations(0);
  }

  bool relations(size_t k) {
    if (k == used_indices_.size()) return domains();
    unsigned flags = preset_.flags();
    auto& rel = rel_[used_indices_[k]];
    const int n = w_ * w_;
    if (flags & embedding::kUniversal) {
      rel.assign(w_, all_);
      return relations(k + 1);
    }
    // Free bit positions of the relation mask (bit w*W+v is the edge w->v).
    std::vector<int> free;
    for (int b = 0; b < n; ++b)
      if (!((flags & embedding::kReflexive) && b / w_ == b % w_)) free.push_back(b);
    uint64_t base = 0;
    if (flags & embedding::kReflexive)
      for (int w = 0; w < w_; ++w) base |= 1ull << (w * w_ + w);
    const uint64_t count = 1ull << free.size();
    for (uint64_t m = 0; m < count; ++m) {
      uint64_t mask = base;
      for (size_t j = 0; j < free.size(); ++j)
        if ((m >> j) & 1) mask |= 1ull << free[j];
      for (int w = 0; w < w_; ++w) rel[w] = (mask >> (w * w_)) & all_;
      if (!kripke::relation_has(rel, w_, flags)) continue;
      if (!relations(k + 1)) return false;
    }
    return true;
  }

  bool domains() {
    uint64_t full = (1ull << c_) - 1;
    domain_.assign(w_, full);
    if (!preset_.varying() || !uses_indiv_) return structure();
    return domain_at(0);
  }

  bool domain_at(int w) {
    if (w == w_) return structure();
    for (uint64_t d = 0; d < (1ull << c_); ++d) {
      domain_[w] = d;
      if (!domain_at(w + 1)) return false;
    }
    return true;
  }

  bool structure_key_less(const std::vector<int>& perm) const {
    // Compares the permuted structure against the current one: returns 1
    // when the permuted one comes first in enumeration order.
    for (const auto& i : used_indices_) {
      const auto& rel = rel_.at(i);
      uint64_t a = 0, b = 0;
      for (int w = 0; w < w_; ++w)
        for (int v = 0; v < w_; ++v) {
          if ((rel[w] >> v) & 1) a |= 1ull << (w * w_ + v);
          if ((rel[perm[w]] >> perm[v]) & 1) b |= 1ull << (w * w_ + v);
        }
      if (b != a) return b < a;
    }
    for (int w = 0; w < w_; ++w) {
      uint64_t a = domain_[w], b = domain_[perm[w]];
      if (b != a) return b < a;
    }
    return false;
  }

  bool canonical() const {
    std::vector<int> perm(w_);
    for (int w = 0; w < w_; ++w) perm[w] = w;
    while (std::next_permutation(perm.begin(), perm.end()))
      if (structure_key_less(perm)) return false;
    return true;
  }

  bool structure() {
    if (bounds_.symmetry_breaking && !canonical()) return true;
    ++stats_->structures;
    exists_at_.assign(c_, 0);
    for (int w = 0; w < w_; ++w)
      for (int x = 0; x < c_; ++x)
        if ((domain_[w] >> x) & 1) exists_at_[x] |= 1ull << w;
    reach_.clear();
    return valuation(0);
  }

  // ---- valuations ---------------------------------------------------------

  double remaining(size_t k) const {
    double n = 1;
    for (size_t j = k; j < layouts_.size(); ++j)
      n *= std::pow(static_cast<double>(layouts_[j].radix), layouts_[j].digits - vals_[j].known);
    return n;
  }

  bool valuation(size_t k) {
    if (++stats_->nodes > bounds_.max_models)
      throw Error(ErrorCode::BoundsExceeded,
                  "search cap of " + std::to_string(bounds_.max_models) + " nodes reached");
    WorldSet cand = 0;
    if (!feasible(cand)) {
      stats_->models += remaining(k);
      return true;
    }
    while (k < layouts_.size() && vals_[k].known == layouts_[k].digits) ++k;
    if (k == layouts_.size()) {
      stats_->models += 1;
      return leaf(cand);
    }
    Layout& l = layouts_[k];
    Partial& p = vals_[k];
    int pos = l.digits - 1 - p.known;
    ++p.known;
    for (uint64_t d = 0; d < l.radix; ++d) {
      p.value += d * l.pow[pos];
      bool go = valuation(k);
      p.value -= d * l.pow[pos];
      if (!go) {
        --p.known;
        return false;
      }
    }
    --p.known;
    return true;
  }

  // Worlds still possible as the designated world; false when none are.
  bool feasible(WorldSet& cand) {
    cand = all_;
    bool global = !preset_.actual_world;
    for (size_t k = 0; k < premises_.size(); ++k) {
      Tri r = ext(roots_[k]);
      if (global && r.f) return false;
      cand &= ~r.f;
      if (!cand) return false;
    }
    if (conj_) cand &= ~ext(roots_.back()).t;
    return cand != 0;
  }

  bool leaf(WorldSet cand) {
    bool global = !preset_.actual_world;
    if (!conj_ && global) return (*visit_)(model(0), 0);
    for (int w = 0; w < w_; ++w) {
      if (!((cand >> w) & 1)) continue;
      if (!(*visit_)(model(w), w)) return false;
      if (conj_) break;
    }
    return true;
  }

  KripkeModel model(int world) const {
    KripkeModel m = KripkeModel::empty(w_, c_, preset_.indices);
    m.actual = world;
    for (const auto& [i, rel] : rel_) m.access[i] = rel;
    m.domain = domain_;
    for (const auto& [name, sort] : decls_.constants) {
      auto it = index_of_.find(name);
      m.set(name, sort, it == index_of_.end() ? 0 : vals_[it->second].value);
    }
    return m;
  }

  // ---- three-valued evaluation -------------------------------------------
  //
  // Formulas are compiled once: bound variables become environment slots,
  // constants become layout ids and modality indices become relation ids.

  struct CTerm {
    Term::Kind kind = Term::Kind::Const;
    int id = -1;  // layout id or slot
    std::vector<int> args;
    Sort sort = Sort::prop();  // head sort: constant, variable or lambda
    std::vector<std::pair<int, Sort>> params;  // (slot, sort)
    int body = -1;
    // Per bounds: codomain sizes along the argument chain (variables),
    // parameter sizes and digit radices (lambdas).
    std::vector<uint64_t> cod, psize, pradix;
  };

  struct CNode {
    Op op = Op::Top;
    int a = -1, b = -1;
    int rel = -1;           // Box, Dia
    std::vector<int> rels;  // CommonKnows
    int slot = -1;          // quantifiers
    Sort sort = Sort::prop();
    bool indiv = false;
    uint64_t size = 0;  // quantifier range, per bounds
    bool head_var = false;
    int head = -1;  // Atom: layout id or slot
    std::vector<int> args;  // term ids
    std::vector<uint64_t> cod;
  };

  struct Scope {
    std::string name;
    int slot;
    Sort sort;
  };

  int compile(const Formula& f, std::vector<Scope>& scope) {
    CNode n;
    n.op = f.op();
    switch (f.op()) {
      case Op::Top:
      case Op::Bottom: break;
      case Op::Atom: {
        for (const auto& a : f.args()) n.args.push_back(compile_term(a, scope));
        if (f.head_is_var()) {
          const Scope& s = lookup(f.name(), scope);
          n.head_var = true;
          n.head = s.slot;
          n.sort = s.sort;
        } else {
          n.head = const_id(f.name());
        }
        break;
      }
      case Op::ExistsPred: n.args.push_back(compile_term(f.args()[0], scope)); break;
      case Op::Not: n.a = compile(f.body(), scope); break;
      case Op::Box:
      case Op::Dia:
        n.rel = rel_id(f.name());
        n.a = compile(f.body(), scope);
        break;
      case Op::CommonKnows:
        for (const auto& i : f.indices()) n.rels.push_back(rel_id(i));
        n.a = compile(f.body(), scope);
        break;
      case Op::Forall:
      case Op::Exists:
      case Op::FreeForall:
      case Op::FreeExists: {
        n.indiv = f.op() == Op::FreeForall || f.op() == Op::FreeExists || f.sort() == Sort::indiv();
        n.sort = n.indiv ? Sort::indiv() : f.sort();
        n.slot = static_cast<int>(scope.size());
        slots_ = std::max(slots_, n.slot + 1);
        scope.push_back({f.name(), n.slot, n.sort});
        n.a = compile(f.body(), scope);
        scope.pop_back();
        break;
      }
      default:
        n.a = compile(f.lhs(), scope);
        n.b = compile(f.rhs(), scope);
    }
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int compile_term(const Term& t, std::vector<Scope>& scope) {
    CTerm c;
    c.kind = t.kind();
    if (t.kind() == Term::Kind::Lambda) {
      for (const auto& [name, sort] : t.params()) {
        int slot = static_cast<int>(scope.size());
        slots_ = std::max(slots_, slot + 1);
        scope.push_back({name, slot, sort});
        c.params.emplace_back(slot, sort);
      }
      c.body = compile(t.body(), scope);
      scope.erase(scope.end() - static_cast<std::ptrdiff_t>(t.params().size()), scope.end());
    } else {
      for (const auto& a : t.args()) c.args.push_back(compile_term(a, scope));
      if (t.kind() == Term::Kind::Var) {
        const Scope& s = lookup(t.name(), scope);
        c.id = s.slot;
        c.sort = s.sort;
      } else {
        c.id = const_id(t.name());
      }
    }
    terms_.push_back(std::move(c));
    return static_cast<int>(terms_.size()) - 1;
  }

  static const Scope& lookup(const std::string& name, const std::vector<Scope>& scope) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->name == name) return *it;
    throw Error(ErrorCode::UnboundVariable, "unbound variable '" + name + "'");
  }

  int const_id(const std::string& name) const {
    for (size_t k = 0; k < used_.size(); ++k)
      if (used_[k].first == name) return static_cast<int>(k);
    throw Error(ErrorCode::UnknownSymbol, "unknown constant '" + name + "'");
  }

  int rel_id(const std::string& index) const {
    for (size_t k = 0; k < used_indices_.size(); ++k)
      if (used_indices_[k] == index) return static_cast<int>(k);
    throw Error(ErrorCode::UnknownSymbol, "modality index '" + index + "' is not declared");
  }

  std::vector<uint64_t> cod_chain(Sort s, size_t n) const {
    std::vector<uint64_t> out;
    for (size_t k = 0; k < n && s.is_arrow(); ++k) {
      s = s.codomain();
      out.push_back(kripke::sort_size(s, w_, c_));
    }
    return out;
  }

  // Sizes that depend on the world and carrier counts.
  void prepare() {
    for (auto& n : nodes_) {
      if (n.slot >= 0) n.size = n.indiv ? static_cast<uint64_t>(c_) : kripke::sort_size(n.sort, w_, c_);
      if (n.op == Op::Atom && n.head_var) n.cod = cod_chain(n.sort, n.args.size());
    }
    for (auto& t : terms_) {
      if (t.kind == Term::Kind::Var) t.cod = cod_chain(t.sort, t.args.size());
      if (t.kind != Term::Kind::Lambda) continue;
      t.psize.clear();
      t.pradix.assign(t.params.size(), 0);
      for (const auto& p : t.params) t.psize.push_back(kripke::sort_size(p.second, w_, c_));
      Sort rest = Sort::prop();
      for (size_t j = t.params.size(); j-- > 0;) {
        t.pradix[j] = kripke::sort_size(rest, w_, c_);
        rest = Sort::arrow(t.params[j].second, rest);
      }
    }
  }

  Tri ext(int id) {
    const CNode& n = nodes_[id];
    switch (n.op) {
      case Op::Top: return {all_, 0};
      case Op::Bottom: return {0, all_};
      case Op::Atom: return atom(n);
      case Op::Not: {
        Tri a = ext(n.a);
        return {a.f, a.t};
      }
      case Op::And: {
        Tri a = ext(n.a);
        if (a.f == all_) return a;
        Tri b = ext(n.b);
        return {a.t & b.t, a.f | b.f};
      }
      case Op::Or: {
        Tri a = ext(n.a);
        if (a.t == all_) return a;
        Tri b = ext(n.b);
        return {a.t | b.t, a.f & b.f};
      }
      case Op::Implies: {
        Tri a = ext(n.a);
        if (a.f == all_) return {all_, 0};
        Tri b = ext(n.b);
        return {a.f | b.t, a.t & b.f};
      }
      case Op::Iff: {
        Tri a = ext(n.a), b = ext(n.b);
        return {(a.t & b.t) | (a.f & b.f), (a.t & b.f) | (a.f & b.t)};
      }
      case Op::Box:
      case Op::Dia: {
        const WorldSet* rel = rels_[n.rel]->data();
        Tri b = ext(n.a);
        Tri out;
        WorldSet not_t = ~b.t, not_f = ~b.f;
        for (int w = 0; w < w_; ++w) {
          WorldSet s = rel[w];
          bool t = n.op == Op::Box ? (s & not_t) == 0 : (s & b.t) != 0;
          bool fl = n.op == Op::Box ? (s & b.f) != 0 : (s & not_f) == 0;
          out.t |= static_cast<WorldSet>(t) << w;
          out.f |= static_cast<WorldSet>(fl) << w;
        }
        return out;
      }
      case Op::CommonKnows: {
        const auto& reach = reachable(id);
        Tri b = ext(n.a);
        Tri out;
        for (int w = 0; w < w_; ++w) {
          if ((reach[w] & ~b.t) == 0) out.t |= 1ull << w;
          if (reach[w] & b.f) out.f |= 1ull << w;
        }
        return out;
      }
      case Op::Forall:
      case Op::Exists:
      case Op::FreeForall:
      case Op::FreeExists: {
        bool all = n.op == Op::Forall || n.op == Op::FreeForall;
        Tri out = all ? Tri{all_, 0} : Tri{0, all_};
        for (uint64_t v = 0; v < n.size; ++v) {
          env_[n.slot] = v;
          Tri b = ext(n.a);
          WorldSet there = n.indiv ? exists_at_[v] : all_;
          if (all) {
            out.t &= b.t | ~there;
            out.f |= b.f & there;
            if (out.f == all_) break;
          } else {
            out.t |= b.t & there;
            out.f &= b.f | ~there;
            if (out.t == all_) break;
          }
        }
        return out;
      }
      case Op::ExistsPred: {
        Value x;
        if (!value(n.args[0], x)) return {};
        return {exists_at_[x], all_ & ~exists_at_[x]};
      }
    }
    return {};
  }

  const std::vector<WorldSet>& reachable(int id) {
    auto it = reach_.find(id);
    if (it != reach_.end()) return it->second;
    std::vector<WorldSet> step(w_, 0);
    for (int r : nodes_[id].rels)
      for (int w = 0; w < w_; ++w) step[w] |= (*rels_[r])[w];
    std::vector<WorldSet> out(w_);
    for (int w = 0; w < w_; ++w) {
      WorldSet seen = step[w], frontier = step[w];
      while (frontier) {
        WorldSet next = 0;
        for (int v = 0; v < w_; ++v)
          if ((frontier >> v) & 1) next |= step[v];
        frontier = next & ~seen;
        seen |= next;
      }
      out[w] = seen;
    }
    return reach_.emplace(id, std::move(out)).first->second;
  }

  static constexpr size_t kMaxArgs = 16;

  bool arg_values(const std::vector<int>& args, Value* out) {
    if (args.size() > kMaxArgs) throw Error(ErrorCode::BoundsTooLarge, "too many arguments");
    for (size_t j = 0; j < args.size(); ++j)
      if (!value(args[j], out[j])) return false;
    return true;
  }

  Tri atom(const CNode& n) {
    Value args[kMaxArgs];
    if (!arg_values(n.args, args)) return {};
    if (n.head_var) {
      Value v = env_[n.head];
      for (size_t j = 0; j < n.args.size(); ++j) v = kripke::apply(v, args[j], n.cod[j]);
      return {v, all_ & ~v};
    }
    const Layout& l = layouts_[n.head];
    const Partial& p = vals_[n.head];
    uint64_t base = 0;
    for (size_t j = 0; j < n.args.size(); ++j) base += args[j] * l.stride[j + 1];
    uint64_t low = static_cast<uint64_t>(l.digits - p.known);
    WorldSet known;
    if (base >= low) known = all_;
    else if (base + w_ <= low) return {};
    else known = all_ & ~((1ull << (low - base)) - 1);
    WorldSet ws = (p.value >> base) & all_;
    return {ws & known, ~ws & known};
  }

  bool value(int id, Value& out) {
    const CTerm& t = terms_[id];
    if (t.kind == Term::Kind::Lambda) return tabulate(t, 0, out);
    Value args[kMaxArgs];
    if (!arg_values(t.args, args)) return false;
    if (t.kind == Term::Kind::Var) {
      Value v = env_[t.id];
      for (size_t j = 0; j < t.args.size(); ++j) v = kripke::apply(v, args[j], t.cod[j]);
      out = v;
      return true;
    }
    const Layout& l = layouts_[t.id];
    const Partial& p = vals_[t.id];
    uint64_t base = 0;
    for (size_t j = 0; j < t.args.size(); ++j) base += args[j] * l.stride[j + 1];
    if (base < static_cast<uint64_t>(l.digits - p.known)) return false;
    uint64_t block = l.stride[t.args.size()];
    Value v = p.value / l.pow[base];
    if (block < static_cast<uint64_t>(l.digits)) v %= l.pow[block];
    out = v;
    return true;
  }

  bool tabulate(const CTerm& t, size_t k, Value& out) {
    if (k == t.params.size()) {
      Tri b = ext(t.body);
      if ((b.t | b.f) != all_) return false;
      out = b.t;
      return true;
    }
    const int slot = t.params[k].first;
    Value acc = 0, place = 1;
    for (uint64_t v = 0; v < t.psize[k]; ++v) {
      env_[slot] = v;
      Value d;
      if (!tabulate(t, k + 1, d)) return false;
      acc += d * place;
      if (v + 1 < t.psize[k]) place *= t.pradix[k];
    }
    out = acc;
    return true;
  }

  const std::vector<Formula>& premises_;
  std::optional<Formula> conj_;
  const embedding::LogicPreset& preset_;
  const syntax::Declarations& decls_;
  Bounds bounds_;
  Stats own_stats_;
  Stats* stats_;
  const Visit* visit_ = nullptr;

  std::vector<std::pair<std::string, Sort>> used_;
  std::vector<std::string> used_indices_;
  bool uses_indiv_ = false;

  int w_ = 1, c_ = 1;
  WorldSet all_ = 1;
  std::map<std::string, std::vector<WorldSet>> rel_;
  std::vector<uint64_t> domain_;
  std::vector<WorldSet> exists_at_;
  std::vector<const std::vector<WorldSet>*> rels_;
  std::map<int, std::vector<WorldSet>> reach_;
  std::vector<Layout> layouts_;
  std::unordered_map<std::string, size_t> index_of_;
  std::vector<Partial> vals_;

  std::vector<CNode> nodes_;
  std::vector<CTerm> terms_;
  std::vector<int> roots_;  // premises, then the conjecture
  int slots_ = 0;
  std::vector<Value> env_;
};

void collect_modal(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom:
    case Op::ExistsPred: return;
    case Op::Box:
    case Op::Dia:
      out.insert(syntax::print_formula(f));
      collect_modal(f.body(), out);
      return;
    case Op::Not:
    case Op::Forall:
    case Op::Exists:
    case Op::FreeForall:
    case Op::FreeExists:
    case Op::CommonKnows: collect_modal(f.body(), out); return;
    default:
      collect_modal(f.lhs(), out);
      collect_modal(f.rhs(), out);
  }
}

}  // namespace

std::optional<Countermodel> find_countermodel(const std::vector<Formula>& premises,
                                              const Formula& conjecture,
                                              const embedding::LogicPreset& preset,
                                              const syntax::Declarations& decls,
                                              const Bounds& bounds, Stats* stats) {
  std::optional<Countermodel> found;
  Engine engine(premises, conjecture, preset, decls, bounds, stats);
  engine.run([&](const KripkeModel& m, int w) {
    found = Countermodel{m, w};
    return false;
  });
  return found;
}

bool for_each_model(const std::vector<Formula>& premises, const embedding::LogicPreset& preset,
                    const syntax::Declarations& decls, const Bounds& bounds,
                    const std::function<bool(const KripkeModel&)>& visit, Stats* stats) {
  Engine engine(premises, std::nullopt, preset, decls, bounds, stats);
  return engine.run([&](const KripkeModel& m, int) { return visit(m); });
}

bool reverify(const Countermodel& cm, const std::vector<Formula>& premises,
              const Formula& conjecture, const embedding::LogicPreset& preset) {
  const KripkeModel& m = cm.model;
  if (!kripke::check_frame(m, preset)) return false;
  if (cm.world < 0 || cm.world >= m.worlds) return false;
  if (preset.actual_world && cm.world != m.actual) return false;
  for (const auto& p : premises)
    if (!kripke::valid_in_model(m, p, preset)) return false;
  return !kripke::eval(m, conjecture, cm.world);
}

int s5_small_model_bound(const std::vector<Formula>& premises, const Formula& conjecture) {
  std::set<std::string> modal;
  for (const auto& p : premises) collect_modal(p, modal);
  collect_modal(conjecture, modal);
  return static_cast<int>(modal.size()) + 1;
}

Verdict decide_bounded(const std::vector<Formula>& premises, const Formula& conjecture,
                       const embedding::LogicPreset& preset, const syntax::Declarations& decls,
                       const Bounds& bounds) {
  Verdict v;
  v.bounds = bounds;
  Stats stats;
  try {
    v.countermodel = find_countermodel(premises, conjecture, preset, decls, bounds, &stats);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BoundsExceeded) throw;
    v.kind = Verdict::Kind::Unknown;
    v.models_checked = stats.models;
    v.reason = e.what();
    return v;
  }
  v.models_checked = stats.models;
  if (v.countermodel) {
    if (!reverify(*v.countermodel, premises, conjecture, preset))
      throw std::logic_error("countermodel failed re-verification");
    v.kind = Verdict::Kind::Countermodel;
    v.reason = "falsified at world " + std::to_string(v.countermodel->world) + " of a " +
               std::to_string(v.countermodel->model.worlds) + "-world model";
    return v;
  }
  bool propositional = syntax::is_propositional(conjecture) &&
                       !syntax::uses_common_knowledge(conjecture);
  for (const auto& p : premises)
    propositional = propositional && syntax::is_propositional(p) && !syntax::uses_common_knowledge(p);
  int need = s5_small_model_bound(premises, conjecture);
  if (preset.universal_box() && propositional && bounds.max_worlds >= need) {
    v.kind = Verdict::Kind::ValidCertified;
    v.reason = "S5 small-model bound: countermodels need at most " + std::to_string(need) +
               " worlds, all checked";
  } else {
    v.kind = Verdict::Kind::ValidUpTo;
    v.reason = "no countermodel up to " + std::to_string(bounds.max_worlds) + " worlds and " +
               std::to_string(bounds.max_indiv) + " individuals";
  }
  if (!premises.empty()) {
    bool any = false;
    try {
      for_each_model(premises, preset, decls, bounds, [&](const KripkeModel&) {
        any = true;
        return false;
      });
      v.premises_unsatisfiable = !any;
      if (!any) v.reason += "; premises unsatisfiable within bounds";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundsExceeded) throw;
    }
  }
  return v;
}

std::string EvidenceReport::to_text() const {
  std::ostringstream out;
  out << "bounded evidence, not a proof: up to " << bounds.max_worlds << " worlds and "
      << bounds.max_indiv << " individuals\n";
  out << "models of the axioms: " << models;
  bool first = true;
  for (size_t w = 1; w < models_by_worlds.size(); ++w) {
    out << (first ? " (" : ", ") << w << (w == 1 ? " world: " : " worlds: ") << models_by_worlds[w];
    first = false;
  }
  out << (first ? "" : ")") << "\n";
  out << "schema instances checked: " << instances << "\n";
  out << "all instances hold: " << (all_hold ? "yes" : "no") << "\n";
  out << "models where every world accesses at most itself: " << collapsed_models << " of "
      << models << "\n";
  if (capped) out << "search cap reached: the enumeration is incomplete\n";
  if (failure)
    out << "first failing instance: hole = "
        << kripke::format_value(Sort::prop(), *failing_instance, failure->worlds, failure->carrier)
        << "\n" << kripke::to_text(*failure);
  return out.str();
}

EvidenceReport check_consequence_evidence(const std::vector<Formula>& axioms,
                                          const Formula& schema, const std::string& hole,
                                          const embedding::LogicPreset& preset,
                                          const syntax::Declarations& decls, const Bounds& bounds) {
  EvidenceReport r;
  r.bounds = bounds;
  r.models_by_worlds.assign(bounds.max_worlds + 1, 0);
  try {
    for_each_model(axioms, preset, decls, bounds, [&](const KripkeModel& m) {
      ++r.models;
      ++r.models_by_worlds[m.worlds];
      bool collapsed = true;
      for (const auto& [i, rel] : m.access)
        for (int w = 0; w < m.worlds; ++w)
          if (rel[w] & ~(1ull << w)) collapsed = false;
      if (collapsed) ++r.collapsed_models;
      KripkeModel inst = m;
      for (Value h = 0; h <= m.all_worlds(); ++h) {
        inst.set(hole, Sort::prop(), h);
        ++r.instances;
        if (!kripke::valid_in_model(inst, schema, preset) && r.all_hold) {
          r.all_hold = false;
          r.failure = inst;
          r.failing_instance = h;
        }
      }
      return true;
    });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BoundsExceeded) throw;
    r.capped = true;
  }
  return r;
}

}  // namespace modalhol::search
