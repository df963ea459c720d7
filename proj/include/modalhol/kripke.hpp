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

#ifndef MODALHOL_KRIPKE_HPP_
#define MODALHOL_KRIPKE_HPP_

// Possible-world semantics evaluated directly on finite Kripke models.
//
// Values of object sorts are encoded as integers: an individual is its index
// in the carrier, a proposition is the set of worlds where it holds (a bit
// mask), and a function of sort a -> b is the mixed-radix number
// sum_x f(x) * |b|^x over the elements x of a.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modalhol/embedding.hpp"
#include "modalhol/syntax.hpp"

namespace modalhol::kripke {

using WorldSet = uint64_t;
using Value = uint64_t;

inline constexpr int kMaxWorlds = 64;
inline constexpr int kMaxCarrier = 16;

struct Valuation {
  std::string name;
  syntax::Sort sort;
  Value value;
};

struct KripkeModel {
  int worlds = 1;
  int carrier = 1;
  // Designated world for actual-world grounding.
  int actual = 0;
  // Successor sets per world, one vector per modality index.
  std::map<std::string, std::vector<WorldSet>> access;
  // Per-world individual domains, bit masks over the carrier.
  std::vector<uint64_t> domain;
  std::vector<Valuation> valuation;

  // Model with no edges, full domains and no valuation.
  static KripkeModel empty(int worlds, int carrier, const std::vector<std::string>& indices);

  WorldSet all_worlds() const { return worlds >= 64 ? ~0ull : (1ull << worlds) - 1; }
  uint64_t full_domain() const { return carrier >= 64 ? ~0ull : (1ull << carrier) - 1; }
  bool edge(const std::string& index, int from, int to) const;
  void add_edge(const std::string& index, int from, int to);

  const Valuation* find(const std::string& name) const;
  void set(const std::string& name, const syntax::Sort& sort, Value value);

  friend bool operator==(const KripkeModel& a, const KripkeModel& b);
};

// Number of values of a sort in a model with the given sizes. Throws
// BoundsTooLarge past 2^62.
uint64_t sort_size(const syntax::Sort& sort, int worlds, int carrier);
// f(x) for f of sort a -> b, where |b| = codomain_size.
Value apply(Value f, Value x, uint64_t codomain_size);

struct Binding {
  std::string name;
  syntax::Sort sort;
  Value value;
};
using Env = std::vector<Binding>;

// Set of worlds where `f` holds. Individual quantifiers range over the
// domain of the world of evaluation; higher sorts over the full space.
// Throws UnboundVariable, SortError, MissingInterpretation.
WorldSet extension(const KripkeModel& model, const syntax::Formula& f, const Env& env = {});
bool eval(const KripkeModel& model, const syntax::Formula& f, int world, const Env& env = {});
// Value of an argument term.
Value term_value(const KripkeModel& model, const syntax::Term& t, const Env& env = {});

// Frame conditions of the preset on every index, the constant-domain
// condition, and basic well-formedness (domains within the carrier).
bool check_frame(const KripkeModel& model, const embedding::LogicPreset& preset);
bool relation_has(const std::vector<WorldSet>& rel, int worlds, unsigned flags);
// Least superset of `rel` with the given frame conditions.
std::vector<WorldSet> close_relation(std::vector<WorldSet> rel, int worlds, unsigned flags);

// Global grounding: true at every world; actual grounding: at model.actual.
bool valid_in_model(const KripkeModel& model, const syntax::Formula& f,
                    const embedding::LogicPreset& preset);

// Worlds reachable from `w` in one or more steps along the union of the
// relations of `indices`.
WorldSet reachable(const KripkeModel& model, const std::vector<std::string>& indices, int w);

// Keeps only the worlds in `keep` (renumbered in order). Edges, domains and
// valuations are restricted accordingly; a function whose arguments mention
// propositions is read at arguments that are false on the removed worlds.
KripkeModel restrict_to(const KripkeModel& model, WorldSet keep);

// Text format (see docs/problem-format.md):
//   worlds 2
//   carrier 1
//   actual 0
//   access: 0->1           (`access a: ...` for named indices)
//   domain 1: 0
//   val p : o = {1}
std::string to_text(const KripkeModel& model);
// Throws BadModelFile.
KripkeModel parse_model(const std::string& text);
KripkeModel load_model(const std::string& path);
std::string format_value(const syntax::Sort& sort, Value v, int worlds, int carrier);

// Graphviz rendering: one node per world labelled with the true propositional
// atoms, one edge per accessibility pair labelled with its index.
std::string to_dot(const KripkeModel& model);

}  // namespace modalhol::kripke

#endif  // MODALHOL_KRIPKE_HPP_
