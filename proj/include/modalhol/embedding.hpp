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

#ifndef MODALHOL_EMBEDDING_HPP_
#define MODALHOL_EMBEDDING_HPP_

// Shallow embedding of the object logics into HOL. Formulas become world
// predicates of type i => o; every connective is a closed lambda term (its
// equation) and embedding a formula is just applying those terms to the
// embedded subformulas. Unfolding is beta-eta normalization.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modalhol/kernel.hpp"
#include "modalhol/syntax.hpp"

namespace modalhol::embedding {

using kernel::HolTerm;
using kernel::HolType;

enum class FrameClass { K, KB, KT, S4, S5universal, S5equiv, Custom };

// Frame conditions as bit flags.
enum FrameFlag : unsigned {
  kReflexive = 1u << 0,
  kSymmetric = 1u << 1,
  kTransitive = 1u << 2,
  kEuclidean = 1u << 3,
  kUniversal = 1u << 4,
};

enum class DomainCondition { Constant, Varying };

struct LogicPreset {
  FrameClass frame = FrameClass::K;
  unsigned custom_flags = 0;  // Custom only
  DomainCondition domain = DomainCondition::Constant;
  std::vector<std::string> indices{syntax::kDefaultIndex};
  // Global grounding when empty, otherwise the name of the actual world.
  std::optional<std::string> actual_world;

  // Conditions every accessibility relation must satisfy. S5universal has no
  // relation constant; its flags describe the implicit universal relation.
  unsigned flags() const;
  bool universal_box() const { return frame == FrameClass::S5universal; }
  bool varying() const { return domain == DomainCondition::Varying; }

  // K, KB, KT, S4, S5 (= S5universal), S5universal, S5equiv.
  static LogicPreset named(const std::string& frame,
                           DomainCondition domain = DomainCondition::Constant);
};

// "S4 constant", "custom(reflexive) varying actual w0", ...
std::string to_string(const LogicPreset& preset);
std::string frame_name(FrameClass frame);
std::string flag_name(FrameFlag flag);

// Preset for a parsed `logic` line and the file's index declaration.
LogicPreset preset_from(const syntax::LogicDecl& decl, const syntax::Declarations& decls);

// `r` for the default index, `r_<index>` otherwise.
std::string relation_name(const std::string& index);

// Reserved vocabulary of the embedding.
inline constexpr const char* kExistsAt = "eiw";   // e => i => o, varying domains
inline constexpr const char* kFreeExists = "E";   // e => o, free logic

// Sort lifting: indiv => e, o => (i => o), arrows componentwise.
HolType lift(const syntax::Sort& sort);
// Non-modal reading used by the free-logic embedding: indiv => e, o => o.
HolType flat(const syntax::Sort& sort);
// World-predicate type i => o.
HolType world_pred();

// Signature of the embedded problem: lifted user constants, accessibility
// constants for the preset's indices (none for S5universal), eiw, and the
// actual-world constant if any. Throws ReservedName on clashes.
kernel::Signature embedding_signature(const syntax::Declarations& decls,
                                      const LogicPreset& preset);
// Signature for embed_free: flat user constants plus E.
kernel::Signature free_signature(const syntax::Declarations& decls);

// The equation table: one closed lambda term per connective.
namespace eq {
HolTerm top();
HolTerm bottom();
HolTerm negation();
HolTerm conj();
HolTerm disj();
HolTerm implies();
HolTerm iff();
// (i=>o) => i => o using relation_name(index), or the universal version.
HolTerm box(const std::string& index, bool universal);
HolTerm dia(const std::string& index, bool universal);
// (lift(sort) => i=>o) => i => o; actualist (guarded by eiw) when `guarded`.
HolTerm forall(const syntax::Sort& sort, bool guarded);
HolTerm exists(const syntax::Sort& sort, bool guarded);
// Existence at a world: e => i => o, i.e. eiw itself.
HolTerm exists_at();
}  // namespace eq

// Folded embedding: equation terms applied to embedded subterms, not yet
// unfolded. Type i => o. Throws SortError, MissingExistencePredicate (eiw
// needed but absent from sig), UnsupportedConstruct (common knowledge).
// Free variables of `ast` must be given sorts in `free`.
HolTerm embed(const syntax::Formula& ast, const LogicPreset& preset,
              const kernel::Signature& sig,
              const std::vector<std::pair<std::string, syntax::Sort>>& free = {});

// beta_eta_normalize(embed(...)).
HolTerm embed_unfolded(const syntax::Formula& ast, const LogicPreset& preset,
                       const kernel::Signature& sig);

// Global: !w:i. t w. Actual(w0): t w0. Result normalized, type o.
HolTerm ground(const HolTerm& term, const LogicPreset& preset);

// Closed frame conditions on each accessibility constant; empty for
// S5universal.
std::vector<HolTerm> frame_axioms(const LogicPreset& preset);

// Classical (unlifted) embedding of a non-modal free-logic formula.
HolTerm embed_free(const syntax::Formula& ast, const kernel::Signature& sig);

// Base description logic concepts.
class AlcConcept {
 public:
  enum class Kind { Top, Bottom, Atomic, Not, And, Or, Exists, Forall };

  static AlcConcept top();
  static AlcConcept bottom();
  static AlcConcept atomic(std::string name);
  static AlcConcept negation(AlcConcept c);
  static AlcConcept conj(AlcConcept c, AlcConcept d);
  static AlcConcept disj(AlcConcept c, AlcConcept d);
  static AlcConcept exists(std::string role, AlcConcept c);
  static AlcConcept forall(std::string role, AlcConcept c);

  Kind kind() const;
  // Atomic name or role.
  const std::string& name() const;
  const AlcConcept& lhs() const;
  const AlcConcept& rhs() const;

 private:
  struct Node;
  explicit AlcConcept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Concept syntax: `A`, `top`, `bot`, `not C`, `C and D`, `C or D`,
// `some r. C`, `all r. C`, parentheses; `and` binds tighter than `or`.
AlcConcept parse_alc(const std::string& text);
// `C [= D`
std::pair<AlcConcept, AlcConcept> parse_subsumption(const std::string& text);
std::string to_string(const AlcConcept& c);

// Roles become modality indices, atomic concepts propositional constants.
syntax::Formula translate_alc(const AlcConcept& c);
// C [= D holds iff Implies(C', D') is globally valid.
syntax::Formula translate_subsumption(const AlcConcept& sub, const AlcConcept& super);

// Translates every `subsumption` statement of `p` into a conjecture. Roles
// must be declared indices and atomic concepts constants of sort o.
void resolve_subsumptions(syntax::ProblemFile& p);

}  // namespace modalhol::embedding

#endif  // MODALHOL_EMBEDDING_HPP_
