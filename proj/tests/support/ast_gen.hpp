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

#ifndef MODALHOL_TESTS_SUPPORT_AST_GEN_HPP_
#define MODALHOL_TESTS_SUPPORT_AST_GEN_HPP_

// Random well-sorted object-logic formulas. The generator tracks bound
// variables so every output parses back under `decls`.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "modalhol/syntax.hpp"

namespace modalhol::testing {

using syntax::Formula;
using syntax::Sort;
using syntax::Term;

struct AstGenOptions {
  int max_depth = 4;
  bool modal = true;
  bool quantifiers = true;
  // Quantification over indiv -> o and o, lambda arguments.
  bool higher_order = false;
  bool free_logic = false;
  bool common_knowledge = false;
  bool iff = true;
};

// p q s : o, P : indiv -> o, R : indiv -> indiv -> o, c d : indiv,
// f : indiv -> indiv, H : (indiv -> o) -> o.
inline syntax::Declarations standard_decls(std::vector<std::string> indices = {syntax::kDefaultIndex},
                                           bool with_higher = true) {
  syntax::Declarations d;
  d.indices = std::move(indices);
  Sort i = Sort::indiv(), o = Sort::prop();
  for (const char* n : {"p", "q", "s"}) d.declare_constant(n, o);
  d.declare_constant("P", Sort::arrow(i, o));
  d.declare_constant("R", Sort::arrow(i, Sort::arrow(i, o)));
  d.declare_constant("c", i);
  d.declare_constant("d", i);
  d.declare_constant("f", Sort::arrow(i, i));
  if (with_higher) d.declare_constant("H", Sort::arrow(Sort::arrow(i, o), o));
  return d;
}

inline syntax::Declarations propositional_decls(std::vector<std::string> indices = {
                                                    syntax::kDefaultIndex}) {
  syntax::Declarations d;
  d.indices = std::move(indices);
  for (const char* n : {"p", "q", "s"}) d.declare_constant(n, Sort::prop());
  return d;
}

class FormulaGen {
 public:
  FormulaGen(uint32_t seed, syntax::Declarations decls, AstGenOptions opt)
      : rng_(seed), decls_(std::move(decls)), opt_(opt) {}

  Formula formula() {
    scope_.clear();
    return gen(opt_.max_depth);
  }
  Formula formula(int depth) {
    scope_.clear();
    return gen(depth);
  }

  const syntax::Declarations& decls() const { return decls_; }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  Sort pred_sort() const { return Sort::arrow(Sort::indiv(), Sort::prop()); }

  Formula gen(int depth) {
    if (depth <= 0) return leaf();
    for (;;) {
      switch (pick(14)) {
        case 0: return leaf();
        case 1: return Formula::negation(gen(depth - 1));
        case 2: return Formula::conj(gen(depth - 1), gen(depth - 1));
        case 3: return Formula::disj(gen(depth - 1), gen(depth - 1));
        case 4: return Formula::implies(gen(depth - 1), gen(depth - 1));
        case 5:
          if (!opt_.iff) break;
          return Formula::iff(gen(depth - 1), gen(depth - 1));
        case 6:
        case 7:
          if (!opt_.modal) break;
          return Formula::box(index(), gen(depth - 1));
        case 8:
          if (!opt_.modal) break;
          return Formula::dia(index(), gen(depth - 1));
        case 9:
        case 10: {
          if (!opt_.quantifiers) break;
          Sort s = Sort::indiv();
          std::string v = pick_of({"x", "y", "z"});
          if (opt_.higher_order && pick(3) == 0) {
            bool pred = pick(2);
            s = pred ? pred_sort() : Sort::prop();
            v = pred ? pick_of({"X", "Y"}) : "Q";
          }
          scope_.emplace_back(v, s);
          Formula body = gen(depth - 1);
          scope_.pop_back();
          return pick(2) ? Formula::forall(v, s, body) : Formula::exists(v, s, body);
        }
        case 11: {
          if (!opt_.free_logic) break;
          std::string v = pick_of({"x", "y", "z"});
          scope_.emplace_back(v, Sort::indiv());
          Formula body = gen(depth - 1);
          scope_.pop_back();
          return pick(2) ? Formula::free_forall(v, body) : Formula::free_exists(v, body);
        }
        case 12:
          if (!opt_.common_knowledge) break;
          {
            std::vector<std::string> idx;
            for (const auto& i : decls_.indices)
              if (pick(2)) idx.push_back(i);
            if (idx.empty()) idx.push_back(decls_.indices[0]);
            return Formula::common_knows(idx, gen(depth - 1));
          }
        default:
          if (!opt_.quantifiers && !opt_.free_logic) break;
          return leaf();
      }
    }
  }

  std::string index() { return decls_.indices[pick(static_cast<int>(decls_.indices.size()))]; }

  std::string pick_of(std::initializer_list<const char*> names) {
    return *(names.begin() + pick(static_cast<int>(names.size())));
  }

  // Innermost binding of each name.
  const Sort* bound(const std::string& n) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == n) return &it->second;
    return nullptr;
  }

  std::vector<std::string> visible_vars(const Sort& s) const {
    std::vector<std::string> out;
    for (const auto& [n, vs] : scope_)
      if (*bound(n) == s && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    return out;
  }

  Formula leaf() {
    int k = pick(10);
    if (k == 0) return pick(2) ? Formula::top() : Formula::bottom();
    if (opt_.free_logic && k == 1) return Formula::exists_pred(indiv_term(1));
    // Atoms: constants with result o, or bound variables with result o.
    std::vector<std::pair<std::string, Sort>> heads;
    std::vector<bool> is_var;
    for (const auto& [n, s] : decls_.constants) {
      if (s.result() != Sort::prop() || bound(n)) continue;
      if (!opt_.quantifiers && s.is_arrow()) continue;
      heads.emplace_back(n, s);
      is_var.push_back(false);
    }
    for (const auto& [n, s] : scope_) {
      if (*bound(n) != s || s.result() != Sort::prop()) continue;
      heads.emplace_back(n, s);
      is_var.push_back(true);
    }
    size_t h = pick(static_cast<int>(heads.size()));
    std::vector<Term> args;
    for (const Sort& s : heads[h].second.arg_sorts()) args.push_back(term(s));
    return Formula::atom(heads[h].first, std::move(args), is_var[h]);
  }

  Term indiv_term(int depth) {
    auto vars = visible_vars(Sort::indiv());
    int k = pick(static_cast<int>(vars.size()) + 3);
    if (k < static_cast<int>(vars.size())) return Term::var(vars[k]);
    k -= static_cast<int>(vars.size());
    if (k == 2 && depth > 0 && decls_.constant_sort("f") && !bound("f"))
      return Term::constant("f", {indiv_term(depth - 1)});
    std::string c = k == 0 ? "c" : "d";
    if (!decls_.constant_sort(c) || bound(c)) {
      if (!vars.empty()) return Term::var(vars[0]);
      c = decls_.constant_sort("c") ? "c" : c;
    }
    return Term::constant(c);
  }

  Term term(const Sort& s) {
    if (s == Sort::indiv()) return indiv_term(1);
    auto vars = visible_vars(s);
    std::vector<Term> options;
    for (const auto& v : vars) options.push_back(Term::var(v));
    for (const auto& [n, cs] : decls_.constants)
      if (cs == s && !bound(n)) options.push_back(Term::constant(n));
    if (s == pred_sort() && (options.empty() || pick(2))) {
      std::string v = pick_of({"x", "y", "z"});
      scope_.emplace_back(v, Sort::indiv());
      Formula body = gen(1);
      scope_.pop_back();
      return Term::lambda({{v, Sort::indiv()}}, body);
    }
    if (options.empty()) throw std::logic_error("no term of sort " + syntax::to_string(s));
    return options[pick(static_cast<int>(options.size()))];
  }

  std::mt19937 rng_;
  syntax::Declarations decls_;
  AstGenOptions opt_;
  std::vector<std::pair<std::string, Sort>> scope_;
};

}  // namespace modalhol::testing

#endif  // MODALHOL_TESTS_SUPPORT_AST_GEN_HPP_
