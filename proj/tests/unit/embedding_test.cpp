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

#include "doctest.h"
#include "modalhol/embedding.hpp"
#include "modalhol/holmodel.hpp"
#include "../support/ast_gen.hpp"
#include "../support/errors.hpp"

using namespace modalhol;
using namespace modalhol::embedding;
using kernel::HolTerm;
using kernel::HolType;
using syntax::Formula;
using syntax::Sort;
using testing::code_of;

namespace {

const HolType o = HolType::boolean();
const HolType i = HolType::world();

syntax::Declarations basic() {
  syntax::Declarations d;
  d.declare_constant("p", Sort::prop());
  d.declare_constant("q", Sort::prop());
  d.declare_constant("P", Sort::arrow(Sort::indiv(), Sort::prop()));
  d.declare_constant("c", Sort::indiv());
  return d;
}

std::string unfolded(const std::string& text, const LogicPreset& preset,
                     const syntax::Declarations& d = basic()) {
  kernel::Signature sig = embedding_signature(d, preset);
  return kernel::to_string(embed_unfolded(syntax::parse_formula(text, d), preset, sig));
}

// Embedded formula applied to the world variable w, normalized.
std::string at_w(const std::string& text, const LogicPreset& preset) {
  syntax::Declarations d = basic();
  kernel::Signature sig = embedding_signature(d, preset);
  HolTerm t = embed(syntax::parse_formula(text, d), preset, sig);
  return kernel::to_string(kernel::beta_eta_normalize(HolTerm::app(t, HolTerm::variable("w", i))));
}

}  // namespace

TEST_CASE("connective equations") {
  LogicPreset k = LogicPreset::named("K");
  CHECK(unfolded("p & q", k) == "\\w:i. p w /\\ q w");
  CHECK(at_w("box p", k) == "!v:i. r w v ==> p v");
  CHECK(at_w("dia p", k) == "?v:i. r w v /\\ p v");
  CHECK(unfolded("not p | q", k) == "\\w:i. ~p w \\/ q w");
  CHECK(unfolded("p <-> q", k) == "\\w:i. p w <=> q w");
  CHECK(kernel::to_string(eq::conj()) == "\\phi:(i=>o). \\psi:(i=>o). \\w:i. phi w /\\ psi w");
  CHECK(kernel::to_string(eq::box(syntax::kDefaultIndex, false)) ==
        "\\phi:(i=>o). \\w:i. !v:i. r w v ==> phi v");

  // Box over the universal relation: no accessibility constant at all.
  LogicPreset s5 = LogicPreset::named("S5universal");
  syntax::Declarations d = basic();
  kernel::Signature sig = embedding_signature(d, s5);
  CHECK_FALSE(sig.contains("r"));
  HolTerm box_w = kernel::beta_eta_normalize(
      HolTerm::app(embed(syntax::parse_formula("box p", d), s5, sig), HolTerm::variable("w", i)));
  HolTerm p = HolTerm::constant("p", kernel::HolType::arrow(i, o));
  HolTerm expected = kernel::beta_eta_normalize(
      kernel::logic::forall("v", i, HolTerm::app(p, HolTerm::variable("v", i))));
  CHECK(kernel::alpha_eq(box_w, expected));
  CHECK(at_w("box p", LogicPreset::named("S5")) == kernel::to_string(box_w));
}

TEST_CASE("quantifiers and domain conditions") {
  LogicPreset c = LogicPreset::named("K", DomainCondition::Constant);
  LogicPreset v = LogicPreset::named("K", DomainCondition::Varying);
  CHECK(unfolded("forall (x: indiv). box P x", c) == "\\w:i. !x:e. !v:i. r w v ==> P x v");
  CHECK(unfolded("forall (x: indiv). box P x", v) ==
        "\\w:i. !x:e. eiw x w ==> (!v:i. r w v ==> P x v)");
  CHECK(unfolded("exists (x: indiv). P x", v) == "\\w:i. ?x:e. eiw x w /\\ P x w");
  CHECK(kernel::to_string(eq::forall(Sort::indiv(), true)) ==
        "\\Phi:(e=>i=>o). \\w:i. !x:e. eiw x w ==> Phi x w");

  // Higher sorts stay possibilist under varying domains.
  syntax::Declarations d = basic();
  CHECK(unfolded("forall (X: indiv -> o). X c", v, d) == "\\w:i. !x:(e=>i=>o). x c w");
  // Existence in modal context is existence at the world.
  CHECK(unfolded("E c", v, d) == "eiw c");
  CHECK(unfolded("all_free x. P x", c, d) == "\\w:i. !x:e. eiw x w ==> P x w");
}

TEST_CASE("ground") {
  LogicPreset k = LogicPreset::named("K");
  syntax::Declarations d = basic();
  kernel::Signature sig = embedding_signature(d, k);
  HolTerm top = ground(embed(Formula::top(), k, sig), k);
  CHECK(kernel::to_string(top) == "!w:i. T");
  CHECK(kernel::typecheck(top, sig) == o);
  CHECK(kernel::to_string(ground(embed(syntax::parse_formula("box p -> p", d), k, sig), k)) ==
        "!w:i. (!v:i. r w v ==> p v) ==> p w");

  LogicPreset actual = k;
  actual.actual_world = "w0";
  kernel::Signature asig = embedding_signature(d, actual);
  CHECK(asig.lookup("w0") == i);
  CHECK(kernel::to_string(ground(embed(Formula::atom("p"), actual, asig), actual)) == "p w0");

  CHECK(code_of([&] { ground(HolTerm::constant("c", HolType::indiv()), k); }) ==
        ErrorCode::TypeMismatch);
}

TEST_CASE("frame axioms") {
  auto texts = [](const char* frame) {
    std::vector<std::string> out;
    for (const auto& t : frame_axioms(LogicPreset::named(frame))) out.push_back(kernel::to_string(t));
    return out;
  };
  CHECK(texts("K").empty());
  CHECK(texts("KT") == std::vector<std::string>{"!w:i. r w w"});
  CHECK(texts("S4") == std::vector<std::string>{"!w:i. r w w",
                                                "!w:i. !v:i. !u:i. r w v /\\ r v u ==> r w u"});
  CHECK(texts("KB") == std::vector<std::string>{"!w:i. !v:i. r w v ==> r v w"});
  CHECK(texts("S5universal").empty());
  CHECK(texts("S5equiv").size() == 4);
}

TEST_CASE("signature and errors") {
  syntax::Declarations d = basic();
  d.declare_constant("r", Sort::prop());
  CHECK(code_of([&] { embedding_signature(d, LogicPreset::named("K")); }) ==
        ErrorCode::ReservedName);
  syntax::Declarations e = basic();
  e.declare_constant("eiw", Sort::prop());
  CHECK(code_of([&] { embedding_signature(e, LogicPreset::named("K")); }) ==
        ErrorCode::ReservedName);

  LogicPreset v = LogicPreset::named("K", DomainCondition::Varying);
  kernel::Signature bare;
  bare.declare("P", lift(Sort::arrow(Sort::indiv(), Sort::prop())));
  CHECK(code_of([&] {
          embed(syntax::parse_formula("forall (x: indiv). P x", basic()), v, bare);
        }) == ErrorCode::MissingExistencePredicate);

  syntax::Declarations m = basic();
  m.indices = {"a", "b"};
  CHECK(code_of([&] {
          LogicPreset k = LogicPreset::named("K");
          k.indices = m.indices;
          embed(syntax::parse_formula("C p", m), k, embedding_signature(m, k));
        }) == ErrorCode::UnsupportedConstruct);
  CHECK(code_of([&] {
          embed_free(syntax::parse_formula("box p", basic()), free_signature(basic()));
        }) == ErrorCode::SortError);
}

TEST_CASE("free logic") {
  syntax::Declarations d = basic();
  kernel::Signature sig = free_signature(d);
  auto free = [&](const char* text) { return embed_free(syntax::parse_formula(text, d), sig); };
  CHECK(kernel::to_string(free("all_free x. E x")) == "!x:e. E x ==> E x");
  CHECK(kernel::to_string(free("some_free x. top")) == "?x:e. E x /\\ T");

  // Counterexamples by exhaustive enumeration of small HOL models.
  auto refuted = [&](const HolTerm& t, int indiv) {
    holmodel::ModelStream s = holmodel::enumerate_hol_models(sig, {1, indiv});
    holmodel::HolModel m;
    while (s.next(m))
      if (!holmodel::eval_formula(m, t)) return true;
    return false;
  };
  CHECK(refuted(free("some_free x. top"), 1));
  CHECK_FALSE(refuted(free("all_free x. E x"), 2));
  CHECK_FALSE(refuted(free("(forall (x: indiv). P x) -> P c"), 2));
  CHECK(refuted(free("(all_free x. P x) -> P c"), 2));
}

TEST_CASE("description logic") {
  AlcConcept c = parse_alc("all r. (A and B)");
  CHECK(translate_alc(c) ==
        Formula::box("r", Formula::conj(Formula::atom("A"), Formula::atom("B"))));
  CHECK(to_string(parse_alc("A or B and not C")) == "A or B and not C");
  CHECK(to_string(parse_alc("(A or B) and some s. top")) == "(A or B) and some s. top");
  auto [sub, super] = parse_subsumption("some r. A [= all r. A");
  CHECK(translate_subsumption(sub, super) ==
        Formula::implies(Formula::dia("r", Formula::atom("A")),
                         Formula::box("r", Formula::atom("A"))));
  CHECK(code_of([] { parse_alc("A and"); }) == ErrorCode::SyntaxError);

  syntax::ProblemFile p = syntax::parse_problem(
      "logic K\nindices r\nconst A : o\nsubsumption refl: A [= A\n");
  resolve_subsumptions(p);
  REQUIRE(p.conjectures.size() == 1);
  CHECK(p.conjectures[0].name == "refl");
  CHECK(p.subsumptions.empty());
  syntax::ProblemFile bad = syntax::parse_problem(
      "logic K\nindices r\nconst A : o\nsubsumption x: some t. A [= A\n");
  CHECK(code_of([&] { resolve_subsumptions(bad); }) == ErrorCode::UnknownSymbol);
}

TEST_CASE("typing and compositionality on random formulas") {
  syntax::Declarations d = testing::standard_decls({"a", "b"});
  testing::AstGenOptions opt;
  opt.higher_order = true;
  opt.free_logic = true;
  testing::FormulaGen gen(7, d, opt);
  const HolType pred = world_pred();
  for (const char* frame : {"K", "S4", "S5universal"}) {
    for (DomainCondition dom : {DomainCondition::Constant, DomainCondition::Varying}) {
      LogicPreset preset = LogicPreset::named(frame, dom);
      preset.indices = d.indices;
      kernel::Signature sig = embedding_signature(d, preset);
      for (int n = 0; n < 300; ++n) {
        Formula f = gen.formula();
        HolTerm t = embed(f, preset, sig);
        REQUIRE(kernel::typecheck(t, sig) == pred);
        REQUIRE(kernel::typecheck(ground(t, preset), sig) == o);
        Formula g = gen.formula(2);
        HolTerm both = embed_unfolded(Formula::conj(f, g), preset, sig);
        HolTerm parts = kernel::beta_eta_normalize(
            HolTerm::app(eq::conj(), {embed_unfolded(f, preset, sig), embed_unfolded(g, preset, sig)}));
        REQUIRE(kernel::alpha_eq(both, parts));
      }
    }
  }
}
