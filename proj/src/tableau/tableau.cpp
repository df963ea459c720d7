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

#include "modalhol/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace modalhol::tableau {

using embedding::FrameClass;
using syntax::Formula;
using syntax::Op;

std::string kind_name(ProofResult::Kind kind) {
  switch (kind) {
    case ProofResult::Kind::Proved: return "Proved";
    case ProofResult::Kind::Refuted: return "Refuted";
    case ProofResult::Kind::GaveUp: return "GaveUp";
  }
  return "?";
}

namespace {

struct Signed {
  bool sign;
  Formula f;
};

enum class RuleKind { None, Alpha, Beta, Nu, Pi, Closes };

struct Rule {
  RuleKind kind = RuleKind::None;
  std::vector<std::vector<Signed>> parts;
  std::string index;
};

Rule classify(bool s, const Formula& f) {
  auto alpha = [](std::vector<Signed> c) { return Rule{RuleKind::Alpha, {std::move(c)}, {}}; };
  auto beta = [](std::vector<Signed> l, std::vector<Signed> r) {
    return Rule{RuleKind::Beta, {std::move(l), std::move(r)}, {}};
  };
  switch (f.op()) {
    case Op::Top: return s ? Rule{} : Rule{RuleKind::Closes, {}, {}};
    case Op::Bottom: return s ? Rule{RuleKind::Closes, {}, {}} : Rule{};
    case Op::Atom: return {};
    case Op::Not: return alpha({{!s, f.body()}});
    case Op::And:
      return s ? alpha({{true, f.lhs()}, {true, f.rhs()}}) : beta({{false, f.lhs()}}, {{false, f.rhs()}});
    case Op::Or:
      return s ? beta({{true, f.lhs()}}, {{true, f.rhs()}}) : alpha({{false, f.lhs()}, {false, f.rhs()}});
    case Op::Implies:
      return s ? beta({{false, f.lhs()}}, {{true, f.rhs()}}) : alpha({{true, f.lhs()}, {false, f.rhs()}});
    case Op::Iff:
      return s ? beta({{true, f.lhs()}, {true, f.rhs()}}, {{false, f.lhs()}, {false, f.rhs()}})
               : beta({{true, f.lhs()}, {false, f.rhs()}}, {{false, f.lhs()}, {true, f.rhs()}});
    case Op::Box:
      return Rule{s ? RuleKind::Nu : RuleKind::Pi, {{{s, f.body()}}}, f.name()};
    case Op::Dia:
      return Rule{s ? RuleKind::Pi : RuleKind::Nu, {{{s, f.body()}}}, f.name()};
    default:
      throw Error(ErrorCode::UnsupportedFragment,
                  "the tableau handles propositional modal formulas only: " + syntax::print_formula(f));
  }
}

bool transitive(const embedding::LogicPreset& p) {
  return p.frame == FrameClass::S4 || p.frame == FrameClass::S5equiv;
}

// Prefixes on a branch accessible from `from` along `index`.
std::vector<int> accessible(const std::vector<PrefixInfo>& table, const std::vector<int>& present,
                            const embedding::LogicPreset& preset, const std::string& index,
                            int from) {
  if (preset.universal_box()) return present;
  unsigned flags = preset.flags();
  std::map<int, std::vector<int>> next;
  for (int p : present) {
    if (p == 0 || table[p].index != index) continue;
    next[table[p].parent].push_back(p);
    if (flags & embedding::kSymmetric) next[p].push_back(table[p].parent);
  }
  std::set<int> out;
  if (flags & embedding::kReflexive) out.insert(from);
  std::vector<int> todo{from};
  std::set<int> seen{from};
  while (!todo.empty()) {
    int u = todo.back();
    todo.pop_back();
    for (int v : next[u]) {
      out.insert(v);
      if ((flags & embedding::kTransitive) && seen.insert(v).second) todo.push_back(v);
    }
  }
  return {out.begin(), out.end()};
}

void check_preset(const embedding::LogicPreset& preset) {
  switch (preset.frame) {
    case FrameClass::K:
    case FrameClass::KB:
    case FrameClass::KT:
    case FrameClass::S4:
    case FrameClass::S5universal:
    case FrameClass::S5equiv: return;
    default:
      throw Error(ErrorCode::UnsupportedFragment,
                  "no tableau calculus for " + embedding::to_string(preset));
  }
}

void check_indices(const Formula& f, const embedding::LogicPreset& preset) {
  for (const auto& i : syntax::indices_of(f))
    if (std::find(preset.indices.begin(), preset.indices.end(), i) == preset.indices.end())
      throw Error(ErrorCode::UnknownSymbol, "modality index '" + i + "' is not declared");
}

struct NodeCap {};
struct PrefixCap {};

class Prover {
 public:
  Prover(const Formula& conj, const embedding::LogicPreset& preset, const Options& options)
      : conj_(conj), preset_(preset), options_(options) {
    trace_.preset = preset;
    trace_.prefixes.push_back(PrefixInfo{});
  }

  ProofResult run() {
    ProofResult result;
    Branch root;
    root.prefixes.push_back(0);
    try {
      bool closed = add(root, 0, {false, conj_}, "root", -1, 0, 0) || expand(root);
      if (closed) {
        result.kind = ProofResult::Kind::Proved;
        result.reason = "all branches closed";
      } else {
        result.kind = ProofResult::Kind::Refuted;
        result.model = std::move(model_);
        result.reason = "open saturated branch";
      }
    } catch (const NodeCap&) {
      result.kind = ProofResult::Kind::GaveUp;
      result.reason = "node cap of " + std::to_string(options_.node_cap) + " reached";
    } catch (const PrefixCap&) {
      result.kind = ProofResult::Kind::GaveUp;
      result.reason = "a branch needs more than " + std::to_string(options_.prefix_cap) + " prefixes";
    }
    result.trace = std::move(trace_);
    return result;
  }

 private:
  using Key = std::tuple<int, bool, std::string>;

  struct Branch {
    std::vector<int> nodes;
    std::vector<int> prefixes;
    std::map<Key, int> have;
    std::set<int> done;
    std::set<std::pair<int, int>> nu_done;
    std::map<int, int> witness;  // pi node -> prefix it created

    // Undo log, so that beta rules explore both sides without copying.
    enum class Op { Node, Have, Done, Nu, Prefix, Witness };
    struct Undo {
      Op op;
      Key key;
      int a = 0, b = 0;
    };
    std::vector<Undo> trail;

    void push_node(int id) {
      nodes.push_back(id);
      trail.push_back({Op::Node, {}});
    }
    void set_have(const Key& k, int id) {
      have[k] = id;
      trail.push_back({Op::Have, k});
    }
    void mark_done(int n) {
      if (done.insert(n).second) trail.push_back({Op::Done, {}, n});
    }
    bool mark_nu(int n, int p) {
      if (!nu_done.insert({n, p}).second) return false;
      trail.push_back({Op::Nu, {}, n, p});
      return true;
    }
    void push_prefix(int p) {
      prefixes.push_back(p);
      trail.push_back({Op::Prefix, {}});
    }
    void set_witness(int n, int p) {
      witness[n] = p;
      trail.push_back({Op::Witness, {}, n});
    }
    void undo(size_t mark) {
      for (; trail.size() > mark; trail.pop_back()) {
        const Undo& u = trail.back();
        switch (u.op) {
          case Op::Node: nodes.pop_back(); break;
          case Op::Have: have.erase(u.key); break;
          case Op::Done: done.erase(u.a); break;
          case Op::Nu: nu_done.erase({u.a, u.b}); break;
          case Op::Prefix: prefixes.pop_back(); break;
          case Op::Witness: witness.erase(u.a); break;
        }
      }
    }
  };

  const Rule& rule_of(int n) const { return rules_[n]; }

  // Adds a node unless the branch already has it. True when the branch closes.
  bool add(Branch& b, int prefix, const Signed& s, const char* rule, int premise, int side,
           int part) {
    std::string key = syntax::print_formula(s.f);
    if (b.have.count({prefix, s.sign, key})) return false;
    if (trace_.nodes.size() >= options_.node_cap) throw NodeCap{};
    TableauNode n;
    n.id = static_cast<int>(trace_.nodes.size());
    n.parent = b.nodes.empty() ? -1 : b.nodes.back();
    n.prefix = prefix;
    n.sign = s.sign;
    n.formula = s.f;
    n.rule = rule;
    if (premise >= 0) n.premises.push_back(premise);
    n.branch = side;
    n.part = part;
    trace_.nodes.push_back(n);
    rules_.push_back(classify(s.sign, s.f));
    b.push_node(n.id);
    b.set_have({prefix, s.sign, key}, n.id);
    if (rules_.back().kind == RuleKind::Closes) {
      trace_.closures.push_back({n.id, n.id, n.id});
      return true;
    }
    auto other = b.have.find({prefix, !s.sign, key});
    if (other != b.have.end()) {
      trace_.closures.push_back(
          {n.id, s.sign ? n.id : other->second, s.sign ? other->second : n.id});
      return true;
    }
    return false;
  }

  int prefix_of(int n) const { return trace_.nodes[n].prefix; }

  std::vector<std::pair<bool, std::string>> label(const Branch& b, int prefix) const {
    std::vector<std::pair<bool, std::string>> out;
    for (auto it = b.have.lower_bound({prefix, false, ""});
         it != b.have.end() && std::get<0>(it->first) == prefix; ++it)
      out.emplace_back(std::get<1>(it->first), std::get<2>(it->first));
    return out;  // map order keeps this sorted
  }

  bool blocking() const {
    return preset_.frame == FrameClass::S4 || preset_.frame == FrameClass::S5equiv ||
           preset_.frame == FrameClass::S5universal;
  }

  // Earlier prefix with the same label, or -1.
  int blocker(const Branch& b, int prefix) const {
    if (!blocking() || prefix == 0) return -1;
    auto mine = label(b, prefix);
    // Under equivalence relations any earlier prefix serves.
    if (preset_.universal_box() || preset_.frame == FrameClass::S5equiv) {
      for (int p : b.prefixes) {
        if (p == prefix) break;
        if (label(b, p) == mine) return p;
      }
      return -1;
    }
    for (int p = trace_.prefixes[prefix].parent; p >= 0; p = trace_.prefixes[p].parent)
      if (label(b, p) == mine) return p;
    return -1;
  }

  bool expand(Branch& b) {
    for (;;) {
      bool progressed = false;
      for (size_t k = 0; k < b.nodes.size() && !progressed; ++k) {
        int n = b.nodes[k];
        if (rule_of(n).kind != RuleKind::Alpha || b.done.count(n)) continue;
        b.mark_done(n);
        Rule r = rule_of(n);
        int part = 0;
        for (const auto& s : r.parts[0])
          if (add(b, prefix_of(n), s, "alpha", n, 0, part++)) return true;
        progressed = true;
      }
      if (progressed) continue;

      for (size_t k = 0; k < b.nodes.size(); ++k) {
        int n = b.nodes[k];
        if (rule_of(n).kind != RuleKind::Beta || b.done.count(n)) continue;
        b.mark_done(n);
        Rule r = rule_of(n);
        int prefix = prefix_of(n);
        bool redundant = false;
        for (const auto& side : r.parts) {
          bool all = true;
          for (const auto& s : side)
            all = all && b.have.count({prefix, s.sign, syntax::print_formula(s.f)});
          redundant = redundant || all;
        }
        if (redundant) continue;
        const size_t mark = b.trail.size();
        for (int side = 0; side < 2; ++side) {
          if (side == 1) b.undo(mark);
          bool closed = false;
          int part = 0;
          for (const auto& s : r.parts[side]) {
            if (add(b, prefix, s, "beta", n, side, part++)) {
              closed = true;
              break;
            }
          }
          if (!closed) closed = expand(b);
          if (!closed) return false;
        }
        return true;
      }

      for (size_t k = 0; k < b.nodes.size() && !progressed; ++k) {
        int n = b.nodes[k];
        const Rule& r = rule_of(n);
        if (r.kind != RuleKind::Nu) continue;
        Rule rule = r;
        const TableauNode node = trace_.nodes[n];
        for (int target : accessible(trace_.prefixes, b.prefixes, preset_, rule.index, node.prefix)) {
          if (!b.mark_nu(n, target)) continue;
          size_t before = trace_.nodes.size();
          if (add(b, target, rule.parts[0][0], "nu", n, 0, 0)) return true;
          if (transitive(preset_) && target != node.prefix &&
              add(b, target, {node.sign, node.formula}, "nu4", n, 0, 0))
            return true;
          if (trace_.nodes.size() != before) progressed = true;
        }
      }
      if (progressed) continue;

      for (size_t k = 0; k < b.nodes.size(); ++k) {
        int n = b.nodes[k];
        if (rule_of(n).kind != RuleKind::Pi || b.done.count(n)) continue;
        if (blocker(b, prefix_of(n)) >= 0) continue;
        if (static_cast<int>(b.prefixes.size()) >= options_.prefix_cap) throw PrefixCap{};
        b.mark_done(n);
        Rule r = rule_of(n);
        int fresh = static_cast<int>(trace_.prefixes.size());
        trace_.prefixes.push_back({prefix_of(n), r.index, static_cast<int>(trace_.nodes.size())});
        b.push_prefix(fresh);
        b.set_witness(n, fresh);
        if (add(b, fresh, r.parts[0][0], "pi", n, 0, 0)) return true;
        progressed = true;
        break;
      }
      if (progressed) continue;

      model_ = extract(b);
      return false;
    }
  }

  // Witness prefix for pi node n, looking through blockers when n was never
  // expanded.
  int witness_for(const Branch& b, int n) const {
    for (int guard = 0; guard <= static_cast<int>(b.prefixes.size()); ++guard) {
      auto it = b.witness.find(n);
      if (it != b.witness.end()) return it->second;
      int blocked_by = blocker(b, trace_.nodes[n].prefix);
      if (blocked_by < 0) break;
      const TableauNode& node = trace_.nodes[n];
      n = b.have.at({blocked_by, node.sign, syntax::print_formula(node.formula)});
    }
    throw std::logic_error("tableau: unexpanded pi formula without a blocker");
  }

  kripke::KripkeModel extract(const Branch& b) const {
    const int worlds = static_cast<int>(b.prefixes.size());
    if (worlds > 64)
      throw Error(ErrorCode::ResourceLimit,
                  "open branch has " + std::to_string(worlds) + " prefixes; models hold at most 64");
    std::map<int, int> world_of;
    for (int w = 0; w < worlds; ++w) world_of[b.prefixes[w]] = w;
    kripke::KripkeModel m = kripke::KripkeModel::empty(worlds, 1, preset_.indices);
    for (int p : b.prefixes)
      if (p != 0)
        m.access[trace_.prefixes[p].index][world_of[trace_.prefixes[p].parent]] |=
            1ull << world_of[p];
    for (int n : b.nodes) {
      if (rule_of(n).kind != RuleKind::Pi || b.witness.count(n)) continue;
      int target = witness_for(b, n);
      m.access[rule_of(n).index][world_of[prefix_of(n)]] |= 1ull << world_of[target];
    }
    for (auto& [index, rel] : m.access) rel = kripke::close_relation(rel, worlds, preset_.flags());
    for (const auto& name : syntax::constants_of(conj_)) {
      kripke::WorldSet truth = 0;
      for (int p : b.prefixes)
        if (b.have.count({p, true, name})) truth |= 1ull << world_of[p];
      m.set(name, syntax::Sort::prop(), truth);
    }
    if (!kripke::check_frame(m, preset_) || kripke::eval(m, conj_, 0))
      throw std::logic_error("tableau: extracted model does not refute " +
                             syntax::print_formula(conj_));
    return m;
  }

  Formula conj_;
  embedding::LogicPreset preset_;
  Options options_;
  Trace trace_;
  std::vector<Rule> rules_;
  std::optional<kripke::KripkeModel> model_;
};

[[noreturn]] void invalid(int node, const std::string& why) {
  throw Error(ErrorCode::InvalidStep, "node " + std::to_string(node) + ": " + why);
}

}  // namespace

bool in_fragment(const Formula& f) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom: return true;
    case Op::Atom: return f.args().empty() && !f.head_is_var();
    case Op::Not:
    case Op::Box:
    case Op::Dia: return in_fragment(f.body());
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff: return in_fragment(f.lhs()) && in_fragment(f.rhs());
    default: return false;
  }
}

ProofResult prove(const Formula& conjecture, const embedding::LogicPreset& preset,
                  const Options& options) {
  check_preset(preset);
  if (!in_fragment(conjecture))
    throw Error(ErrorCode::UnsupportedFragment,
                "the tableau handles propositional modal formulas only: " +
                    syntax::print_formula(conjecture));
  check_indices(conjecture, preset);
  if (options.prefix_cap < 1 || options.prefix_cap > kripke::kMaxWorlds)
    throw Error(ErrorCode::ResourceLimit, "prefix cap must be between 1 and " +
                                              std::to_string(kripke::kMaxWorlds));
  return Prover(conjecture, preset, options).run();
}

bool replay(const Trace& trace) {
  const auto& nodes = trace.nodes;
  const auto& table = trace.prefixes;
  if (nodes.empty()) invalid(0, "empty trace");
  if (table.empty() || table[0].parent != -1) invalid(0, "prefix table has no root");
  check_preset(trace.preset);

  std::vector<std::vector<int>> children(nodes.size());
  for (size_t k = 0; k < nodes.size(); ++k) {
    const TableauNode& n = nodes[k];
    if (n.id != static_cast<int>(k)) invalid(static_cast<int>(k), "id out of order");
    if (k == 0) {
      if (n.rule != "root" || n.parent != -1 || n.prefix != 0 || n.sign || !n.premises.empty())
        invalid(0, "root must be the negated conjecture at the root prefix");
      continue;
    }
    if (n.parent < 0 || n.parent >= n.id) invalid(n.id, "parent must precede the node");
    children[n.parent].push_back(n.id);
  }

  // Ancestors-or-self of a node, as a membership test.
  auto on_branch = [&](int node, int candidate) {
    for (int a = node; a >= 0; a = nodes[a].parent)
      if (a == candidate) return true;
    return false;
  };
  // Prefixes available on the branch ending at `node`.
  auto prefixes_at = [&](int node) {
    std::vector<int> out{0};
    for (int a = node; a >= 0; a = nodes[a].parent)
      if (nodes[a].rule == "pi") out.push_back(nodes[a].prefix);
    std::sort(out.begin(), out.end());
    return out;
  };

  for (size_t p = 1; p < table.size(); ++p) {
    const PrefixInfo& info = table[p];
    if (info.created_by <= 0 || info.created_by >= static_cast<int>(nodes.size()) ||
        nodes[info.created_by].rule != "pi" || nodes[info.created_by].prefix != static_cast<int>(p))
      invalid(info.created_by < 0 ? 0 : info.created_by,
              "prefix " + std::to_string(p) + " has no creating pi node");
    if (info.parent < 0 || info.parent >= static_cast<int>(p))
      invalid(info.created_by, "prefix parent out of order");
  }

  for (size_t k = 1; k < nodes.size(); ++k) {
    const TableauNode& n = nodes[k];
    if (n.prefix < 0 || n.prefix >= static_cast<int>(table.size()))
      invalid(n.id, "unknown prefix");
    if (n.rule != "pi") {
      auto present = prefixes_at(n.id);
      if (!std::binary_search(present.begin(), present.end(), n.prefix))
        invalid(n.id, "prefix not introduced on this branch");
    }
    if (n.premises.size() != 1) invalid(n.id, "missing justification");
    int m = n.premises[0];
    if (m < 0 || m >= n.id || !on_branch(n.parent, m)) invalid(n.id, "premise is not an ancestor");
    const TableauNode& prem = nodes[m];
    Rule r = classify(prem.sign, prem.formula);
    auto matches = [&](const Signed& s) { return s.sign == n.sign && s.f == n.formula; };

    if (n.rule == "alpha") {
      if (r.kind != RuleKind::Alpha || n.prefix != prem.prefix || n.part < 0 ||
          n.part >= static_cast<int>(r.parts[0].size()) || !matches(r.parts[0][n.part]))
        invalid(n.id, "not an alpha conclusion of node " + std::to_string(m));
    } else if (n.rule == "beta") {
      if (r.kind != RuleKind::Beta || n.prefix != prem.prefix || n.branch < 0 || n.branch > 1 ||
          n.part < 0 || n.part >= static_cast<int>(r.parts[n.branch].size()) ||
          !matches(r.parts[n.branch][n.part]))
        invalid(n.id, "not a beta conclusion of node " + std::to_string(m));
    } else if (n.rule == "nu" || n.rule == "nu4") {
      if (r.kind != RuleKind::Nu) invalid(n.id, "premise has no nu rule");
      if (n.rule == "nu" && !matches(r.parts[0][0])) invalid(n.id, "not the nu conclusion");
      if (n.rule == "nu4" && !(transitive(trace.preset) && n.sign == prem.sign && n.formula == prem.formula))
        invalid(n.id, "nu4 needs a transitive logic and the premise itself");
      auto reach = accessible(table, prefixes_at(n.parent), trace.preset, r.index, prem.prefix);
      if (!std::binary_search(reach.begin(), reach.end(), n.prefix))
        invalid(n.id, "prefix not accessible from the premise");
    } else if (n.rule == "pi") {
      if (r.kind != RuleKind::Pi || !matches(r.parts[0][0])) invalid(n.id, "not a pi conclusion");
      const PrefixInfo& info = table[n.prefix];
      if (info.created_by != n.id || info.parent != prem.prefix ||
          (!trace.preset.universal_box() && info.index != r.index))
        invalid(n.id, "pi prefix is not a fresh child of the premise's prefix");
      for (int a = n.parent; a >= 0; a = nodes[a].parent)
        if (nodes[a].prefix == n.prefix) invalid(n.id, "pi prefix already in use");
    } else {
      invalid(n.id, "unknown rule '" + n.rule + "'");
    }
  }

  // Branching happens only at beta rules, with both sides present.
  for (size_t k = 0; k < nodes.size(); ++k) {
    const auto& c = children[k];
    if (c.size() == 1 && nodes[c[0]].rule == "beta") {
      // Within one side, later conclusions follow the earlier ones; a side
      // never starts without its sibling.
      const TableauNode& q = nodes[k];
      const TableauNode& b = nodes[c[0]];
      if (q.rule != "beta" || q.premises != b.premises || q.branch != b.branch)
        invalid(b.id, "beta rule with one side missing");
    }
    if (c.size() <= 1) continue;
    if (c.size() != 2) invalid(c[2], "more than two branches");
    const TableauNode &l = nodes[c[0]], &r = nodes[c[1]];
    if (l.rule != "beta" || r.rule != "beta" || l.premises != r.premises || l.branch == r.branch)
      invalid(c[1], "branching that is not a beta rule");
  }

  // Every branch is closed.
  std::map<int, const Closure*> closure_of;
  for (const auto& c : trace.closures) closure_of[c.leaf] = &c;
  for (size_t k = 0; k < nodes.size(); ++k) {
    if (!children[k].empty()) continue;
    int leaf = static_cast<int>(k);
    auto it = closure_of.find(leaf);
    if (it == closure_of.end()) invalid(leaf, "open branch");
    const Closure& c = *it->second;
    for (int id : {c.positive, c.negative})
      if (id < 0 || id >= static_cast<int>(nodes.size()) || !on_branch(leaf, id))
        invalid(leaf, "closure refers to a node off the branch");
    const TableauNode &pos = nodes[c.positive], &neg = nodes[c.negative];
    if (c.positive == c.negative) {
      bool self = (pos.sign && pos.formula.op() == Op::Bottom) ||
                  (!pos.sign && pos.formula.op() == Op::Top);
      if (!self) invalid(leaf, "single-node closure needs T bot or F top");
      continue;
    }
    if (!pos.sign || neg.sign) invalid(leaf, "closure needs opposite signs");
    if (pos.prefix != neg.prefix) invalid(leaf, "closure on different prefixes");
    if (pos.formula != neg.formula) invalid(leaf, "closure on different formulas");
  }
  return true;
}

std::string prefix_name(const Trace& trace, int prefix) {
  if (prefix == 0) return "1";
  const PrefixInfo& info = trace.prefixes[prefix];
  int nth = 0;
  for (int p = 1; p <= prefix; ++p)
    if (trace.prefixes[p].parent == info.parent) ++nth;
  return prefix_name(trace, info.parent) + "." + info.index + std::to_string(nth);
}

std::string to_text(const Trace& trace) {
  std::ostringstream out;
  out << "logic " << embedding::to_string(trace.preset) << "\n";
  std::vector<std::string> prefixes;
  for (size_t p = 0; p < trace.prefixes.size(); ++p)
    prefixes.push_back(prefix_name(trace, static_cast<int>(p)));
  for (const auto& n : trace.nodes) {
    out << n.id << "\t" << (n.parent < 0 ? "-" : std::to_string(n.parent)) << "\t"
        << prefixes[n.prefix] << "\t" << (n.sign ? "T " : "F ") << syntax::print_formula(n.formula)
        << "\t" << n.rule;
    for (int m : n.premises) out << " " << m;
    if (n.rule == "beta") out << (n.branch == 0 ? " left" : " right");
    out << "\n";
  }
  for (const auto& c : trace.closures) {
    out << "closed " << c.leaf << ":";
    if (c.positive == c.negative) out << " " << c.positive << "\n";
    else out << " " << c.positive << " " << c.negative << "\n";
  }
  return out.str();
}

}  // namespace modalhol::tableau
