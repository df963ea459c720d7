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
#include "modalhol/search.hpp"
#include "modalhol/tableau.hpp"
#include "../support/ast_gen.hpp"
#include "../support/errors.hpp"

using namespace modalhol;
using embedding::LogicPreset;
using syntax::Formula;
using tableau::ProofResult;
using testing::code_of;

namespace {

Formula parse(const std::string& text) {
  return syntax::parse_formula(text, testing::propositional_decls());
}

ProofResult prove(const std::string& text, const char* frame) {
  return tableau::prove(parse(text), LogicPreset::named(frame));
}

}  // namespace

TEST_CASE("examples") {
  ProofResult k = prove("box (p -> q) -> (box p -> box q)", "K");
  CHECK(k.kind == ProofResult::Kind::Proved);
  CHECK(tableau::replay(k.trace));

  ProofResult t = prove("box p -> p", "K");
  REQUIRE(t.kind == ProofResult::Kind::Refuted);
  REQUIRE(t.model);
  CHECK(t.model->worlds == 1);
  CHECK_FALSE(t.model->edge("", 0, 0));
  CHECK_FALSE(kripke::eval(*t.model, parse("box p -> p"), 0));

  CHECK(prove("box p -> box box p", "S4").kind == ProofResult::Kind::Proved);
  ProofResult kt = prove("box p -> box box p", "KT");
  REQUIRE(kt.kind == ProofResult::Kind::Refuted);
  CHECK(kripke::check_frame(*kt.model, LogicPreset::named("KT")));
  CHECK_FALSE(kripke::eval(*kt.model, parse("box p -> box box p"), 0));
}

TEST_CASE("correspondence axioms") {
  const char* const axioms[] = {"box p -> p", "box p -> box box p", "p -> box dia p",
                                "dia p -> box dia p"};
  // Rows: T, 4, B, 5. Columns: K, KB, KT, S4, S5universal, S5equiv.
  const bool valid[4][6] = {{false, false, true, true, true, true},
                            {false, false, false, true, true, true},
                            {false, true, false, false, true, true},
                            {false, false, false, false, true, true}};
  const char* const frames[] = {"K", "KB", "KT", "S4", "S5universal", "S5equiv"};
  for (int a = 0; a < 4; ++a) {
    for (int f = 0; f < 6; ++f) {
      ProofResult r = prove(axioms[a], frames[f]);
      INFO(axioms[a], " in ", frames[f]);
      CHECK((r.kind == ProofResult::Kind::Proved) == valid[a][f]);
      if (r.kind == ProofResult::Kind::Proved) CHECK(tableau::replay(r.trace));
      if (r.kind == ProofResult::Kind::Refuted)
        CHECK(kripke::check_frame(*r.model, LogicPreset::named(frames[f])));
    }
  }
}

TEST_CASE("replay rejects mutated traces") {
  ProofResult r = prove("box (p & q) -> box p & box q", "K");
  REQUIRE(r.kind == ProofResult::Kind::Proved);
  REQUIRE(r.trace.nodes.size() > 3);

  for (size_t k = 1; k < r.trace.nodes.size(); ++k) {
    tableau::Trace cut = r.trace;
    cut.nodes[k].premises.clear();
    CHECK(code_of([&] { tableau::replay(cut); }) == ErrorCode::InvalidStep);
  }

  // A closure between different prefixes.
  tableau::Trace moved = r.trace;
  bool found = false;
  for (auto& c : moved.closures) {
    if (c.positive == c.negative) continue;
    for (int p = 0; p < static_cast<int>(moved.prefixes.size()); ++p) {
      if (p != moved.nodes[c.positive].prefix) {
        moved.nodes[c.positive].prefix = p;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  REQUIRE(found);
  CHECK(code_of([&] { tableau::replay(moved); }) == ErrorCode::InvalidStep);

  tableau::Trace open = r.trace;
  open.closures.pop_back();
  CHECK(code_of([&] { tableau::replay(open); }) == ErrorCode::InvalidStep);

  tableau::Trace renamed = r.trace;
  renamed.nodes[1].rule = "magic";
  CHECK(code_of([&] { tableau::replay(renamed); }) == ErrorCode::InvalidStep);

  // Dropping one side of a branching.
  ProofResult split = prove("(p | q) -> (q | p)", "K");
  REQUIRE(split.kind == ProofResult::Kind::Proved);
  tableau::Trace one_side = split.trace;
  int right = -1;
  for (const auto& n : one_side.nodes)
    if (n.rule == "beta" && n.branch == 1) right = n.id;
  REQUIRE(right > 0);
  // Truncate everything from the right side on, keeping ids dense.
  one_side.nodes.resize(right);
  std::erase_if(one_side.closures, [&](const tableau::Closure& c) { return c.leaf >= right; });
  CHECK(code_of([&] { tableau::replay(one_side); }) == ErrorCode::InvalidStep);
}

TEST_CASE("fragment and limits") {
  syntax::Declarations d = testing::standard_decls();
  CHECK(code_of([&] {
          tableau::prove(syntax::parse_formula("forall (x: indiv). P x", d), LogicPreset::named("K"));
        }) == ErrorCode::UnsupportedFragment);
  syntax::Declarations m = testing::propositional_decls({"a", "b"});
  LogicPreset mk = LogicPreset::named("K");
  mk.indices = m.indices;
  CHECK(code_of([&] { tableau::prove(syntax::parse_formula("C{a,b} p", m), mk); }) ==
        ErrorCode::UnsupportedFragment);
  LogicPreset custom = LogicPreset::named("K");
  custom.frame = embedding::FrameClass::Custom;
  CHECK(code_of([&] { tableau::prove(parse("p"), custom); }) == ErrorCode::UnsupportedFragment);
  CHECK_FALSE(tableau::in_fragment(syntax::parse_formula("E c", d)));
  CHECK(tableau::in_fragment(parse("box (p <-> dia q)")));

  tableau::Options tiny;
  tiny.node_cap = 3;
  ProofResult r = tableau::prove(parse("box (p -> q) -> (box p -> box q)"), LogicPreset::named("K"), tiny);
  CHECK(r.kind == ProofResult::Kind::GaveUp);
  CHECK(r.trace.nodes.size() <= 3);

  tableau::Options one_world;
  one_world.prefix_cap = 1;
  ProofResult w = tableau::prove(parse("dia p -> p"), LogicPreset::named("K"), one_world);
  CHECK(w.kind == ProofResult::Kind::GaveUp);
  CHECK(w.reason.find("prefixes") != std::string::npos);
  CHECK(tableau::prove(parse("box p -> p"), LogicPreset::named("KT"), one_world).kind ==
        ProofResult::Kind::Proved);
  tableau::Options too_many;
  too_many.prefix_cap = kripke::kMaxWorlds + 1;
  CHECK(code_of([&] { tableau::prove(parse("p"), LogicPreset::named("K"), too_many); }) ==
        ErrorCode::ResourceLimit);
}

TEST_CASE("multi-modal") {
  syntax::Declarations d = testing::propositional_decls({"a", "b"});
  auto f = [&](const char* text) { return syntax::parse_formula(text, d); };
  LogicPreset s4 = LogicPreset::named("S4");
  s4.indices = d.indices;
  CHECK(tableau::prove(f("[a] p -> [a] [a] p"), s4).kind == ProofResult::Kind::Proved);
  ProofResult mixed = tableau::prove(f("[a] p -> [b] p"), s4);
  REQUIRE(mixed.kind == ProofResult::Kind::Refuted);
  CHECK_FALSE(kripke::eval(*mixed.model, f("[a] p -> [b] p"), 0));
  LogicPreset s5 = LogicPreset::named("S5equiv");
  s5.indices = d.indices;
  ProofResult r = tableau::prove(f("<a> [b] p -> [b] <a> p"), s5);
  REQUIRE(r.kind == ProofResult::Kind::Refuted);
  CHECK(kripke::check_frame(*r.model, s5));
  CHECK_FALSE(kripke::eval(*r.model, f("<a> [b] p -> [b] <a> p"), 0));
}

TEST_CASE("trace text") {
  ProofResult r = prove("box p -> p", "KT");
  REQUIRE(r.kind == ProofResult::Kind::Proved);
  std::string text = tableau::to_text(r.trace);
  CHECK(text.rfind("logic KT", 0) == 0);
  CHECK(text.find("F box p -> p\troot") != std::string::npos);
  CHECK(text.find("closed") != std::string::npos);
  ProofResult k = prove("box p -> p", "K");
  CHECK(tableau::to_text(k.trace).find("\t1.1\t") == std::string::npos);
  ProofResult d = prove("dia p -> p", "K");
  CHECK(tableau::to_text(d.trace).find("\t1.1\t") != std::string::npos);
}

TEST_CASE("agreement with bounded search") {
  syntax::Declarations d = testing::propositional_decls();
  testing::AstGenOptions opt;
  opt.quantifiers = false;
  opt.max_depth = 4;
  testing::FormulaGen gen(101, d, opt);
  search::Bounds b;
  b.max_worlds = 3;
  for (const char* frame : {"K", "KB", "KT", "S4", "S5universal", "S5equiv"}) {
    LogicPreset preset = LogicPreset::named(frame);
    int proved = 0, refuted = 0;
    for (int n = 0; n < 120; ++n) {
      Formula f = gen.formula();
      ProofResult r = tableau::prove(f, preset);
      search::Verdict v = search::decide_bounded({}, f, preset, d, b);
      INFO(syntax::print_formula(f), " in ", frame);
      REQUIRE(r.kind != ProofResult::Kind::GaveUp);
      if (r.kind == ProofResult::Kind::Proved) {
        ++proved;
        REQUIRE(v.kind != search::Verdict::Kind::Countermodel);
        REQUIRE(tableau::replay(r.trace));
      } else {
        ++refuted;
        REQUIRE(kripke::check_frame(*r.model, preset));
        REQUIRE_FALSE(kripke::eval(*r.model, f, 0));
        if (std::string(frame) == "S5universal") REQUIRE(v.kind == search::Verdict::Kind::Countermodel);
      }
      if (v.kind == search::Verdict::Kind::ValidCertified) REQUIRE(r.kind == ProofResult::Kind::Proved);
    }
    CHECK(proved >= 5);
    CHECK(refuted > 10);
  }
}

TEST_CASE("determinism") {
  ProofResult a = prove("box (p | q) -> box p | dia q", "S4");
  ProofResult b = prove("box (p | q) -> box p | dia q", "S4");
  CHECK(a.kind == b.kind);
  CHECK(tableau::to_text(a.trace) == tableau::to_text(b.trace));
}
