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

#ifndef MODALHOL_TABLEAU_HPP_
#define MODALHOL_TABLEAU_HPP_

// Prefixed tableau for propositional multi-modal formulas under K, KB, KT,
// S4, S5universal and S5equiv.
//
// A prefix names a world; prefix 0 is the root and every other prefix is a
// child of an existing one along a named modality index. Rules are tried in
// the order alpha, beta, nu, pi, scanning the branch oldest node first.
// Accessibility between prefixes is the frame closure of the child edges
// present on the branch. In transitive logics boxed formulas also travel to
// accessible prefixes unchanged (rule nu4). In S4, S5universal and S5equiv a
// prefix is blocked when an earlier prefix carries exactly the same signed
// formulas (an ancestor, in S4); blocked prefixes get no pi rules.

#include <optional>
#include <string>
#include <vector>

#include "modalhol/embedding.hpp"
#include "modalhol/kripke.hpp"
#include "modalhol/syntax.hpp"

namespace modalhol::tableau {

struct TableauNode {
  int id = 0;
  int parent = -1;  // previous node on the branch
  int prefix = 0;
  bool sign = false;  // true: the formula holds at the prefix
  syntax::Formula formula = syntax::Formula::top();
  // root, alpha, beta, nu, nu4 or pi.
  std::string rule;
  std::vector<int> premises;
  int branch = 0;  // beta: which side
  int part = 0;    // position among the rule's conclusions
};

struct PrefixInfo {
  int parent = -1;
  std::string index;
  int created_by = -1;  // pi node
};

// A branch ends at `leaf` and holds `positive` (T) and `negative` (F) for the
// same formula at the same prefix. T bot and F top close on their own, with
// both ids naming the one node.
struct Closure {
  int leaf = 0;
  int positive = 0;
  int negative = 0;
};

struct Trace {
  embedding::LogicPreset preset;
  std::vector<TableauNode> nodes;
  std::vector<PrefixInfo> prefixes;
  std::vector<Closure> closures;
};

// "1", "1.1", "1.a2": the root is 1, children are numbered per parent and
// carry their index name when it is not the default one.
std::string prefix_name(const Trace& trace, int prefix);
std::string to_text(const Trace& trace);

struct ProofResult {
  enum class Kind { Proved, Refuted, GaveUp };
  Kind kind = Kind::GaveUp;
  Trace trace;
  // Refuted: model extracted from the open branch; the conjecture is false
  // at world 0.
  std::optional<kripke::KripkeModel> model;
  std::string reason;
};

std::string kind_name(ProofResult::Kind kind);

// Reaching either cap gives GaveUp. Every prefix on an open branch becomes
// a world of the extracted model, so the prefix cap is at most
// kripke::kMaxWorlds.
struct Options {
  size_t node_cap = 10000;
  int prefix_cap = kripke::kMaxWorlds;
};

// Throws UnsupportedFragment for quantifiers, common knowledge, predicate
// atoms or a custom frame; UnknownSymbol for an undeclared index;
// ResourceLimit for a prefix cap outside 1..kripke::kMaxWorlds.
ProofResult prove(const syntax::Formula& conjecture, const embedding::LogicPreset& preset,
                  const Options& options = {});

// True when the formula is in the fragment prove accepts.
bool in_fragment(const syntax::Formula& f);

// Checks a closed tableau rule by rule. Returns true or throws InvalidStep
// naming the first offending node.
bool replay(const Trace& trace);

}  // namespace modalhol::tableau

#endif  // MODALHOL_TABLEAU_HPP_
