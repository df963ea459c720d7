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

#ifndef MODALHOL_SEARCH_HPP_
#define MODALHOL_SEARCH_HPP_

// Bounded model and countermodel search over finite Kripke models.
//
// Models are visited by world count, then carrier size, then accessibility
// relations (bit masks, first index most significant), then domains, then
// valuations in lexicographic order of their value tables. Valuations are
// filled digit by digit under three-valued evaluation, so whole blocks of
// valuations are skipped once a premise is definitely false or the
// conjecture definitely true; the visiting order is unchanged by this.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modalhol/embedding.hpp"
#include "modalhol/kripke.hpp"
#include "modalhol/syntax.hpp"

namespace modalhol::search {

struct Bounds {
  int max_worlds = 4;
  int max_indiv = 3;
  // Safety cap on search nodes (structures plus partial valuations).
  uint64_t max_models = 400'000'000;
  // Skip structures that are not minimal under world permutations.
  bool symmetry_breaking = false;
};

std::string to_string(const Bounds& b);

struct Countermodel {
  kripke::KripkeModel model;
  int world = 0;
};

struct Stats {
  // Complete interpretations covered, visited or skipped.
  double models = 0;
  uint64_t nodes = 0;
  uint64_t structures = 0;
};

// First model (in the order above) that passes check_frame, satisfies the
// premises under the preset's grounding and falsifies the conjecture at
// the returned world. Throws BoundsExceeded when the cap is reached.
std::optional<Countermodel> find_countermodel(const std::vector<syntax::Formula>& premises,
                                              const syntax::Formula& conjecture,
                                              const embedding::LogicPreset& preset,
                                              const syntax::Declarations& decls,
                                              const Bounds& bounds, Stats* stats = nullptr);

// Calls `visit` on every model of the premises within bounds, in order,
// until it returns false. Returns false if stopped early.
bool for_each_model(const std::vector<syntax::Formula>& premises,
                    const embedding::LogicPreset& preset, const syntax::Declarations& decls,
                    const Bounds& bounds,
                    const std::function<bool(const kripke::KripkeModel&)>& visit,
                    Stats* stats = nullptr);

struct Verdict {
  enum class Kind { ValidUpTo, ValidCertified, Countermodel, Unknown };
  Kind kind = Kind::Unknown;
  Bounds bounds;
  double models_checked = 0;
  std::string reason;
  std::optional<Countermodel> countermodel;
  // Set with ValidUpTo when no model of the premises exists within bounds.
  bool premises_unsatisfiable = false;
};

std::string kind_name(Verdict::Kind kind);

// Worlds sufficient for a countermodel of a propositional problem over the
// universal relation: one per distinct modal subformula plus one.
int s5_small_model_bound(const std::vector<syntax::Formula>& premises,
                         const syntax::Formula& conjecture);

// Countermodel if one exists within bounds; ValidCertified for propositional
// S5universal problems when the bounds reach the small-model bound;
// ValidUpTo otherwise; Unknown when the cap is reached.
Verdict decide_bounded(const std::vector<syntax::Formula>& premises,
                       const syntax::Formula& conjecture, const embedding::LogicPreset& preset,
                       const syntax::Declarations& decls, const Bounds& bounds);

// Evidence for a schema with a propositional hole: every model of the axioms
// within bounds is checked against every instance of the schema, the hole
// ranging over all world sets.
struct EvidenceReport {
  Bounds bounds;
  uint64_t models = 0;
  std::vector<uint64_t> models_by_worlds;  // index = world count
  uint64_t instances = 0;
  bool all_hold = true;
  // Models in which every world accesses at most itself.
  uint64_t collapsed_models = 0;
  std::optional<kripke::KripkeModel> failure;
  std::optional<kripke::Value> failing_instance;
  bool capped = false;

  // Multi-line text; the first line states that this is bounded evidence.
  std::string to_text() const;
};

EvidenceReport check_consequence_evidence(const std::vector<syntax::Formula>& axioms,
                                          const syntax::Formula& schema, const std::string& hole,
                                          const embedding::LogicPreset& preset,
                                          const syntax::Declarations& decls, const Bounds& bounds);

// Re-verification with the kripke oracle alone.
bool reverify(const Countermodel& cm, const std::vector<syntax::Formula>& premises,
              const syntax::Formula& conjecture, const embedding::LogicPreset& preset);

}  // namespace modalhol::search

#endif  // MODALHOL_SEARCH_HPP_
