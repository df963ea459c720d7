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

#include <random>

#include "doctest.h"
#include "modalhol/search.hpp"
#include "../support/ast_gen.hpp"
#include "../support/errors.hpp"

using namespace modalhol;
using embedding::DomainCondition;
using embedding::LogicPreset;
using kripke::KripkeModel;
using syntax::Formula;
using syntax::Sort;
using testing::code_of;

namespace {

syntax::Declarations decls() {
  syntax::Declarations d;
  d.declare_constant("p", Sort::prop());
  d.declare_constant("q", Sort::prop());
  d.declare_constant("P", Sort::arrow(Sort::indiv(), Sort::prop()));
  d.declare_constant("c", Sort::indiv());
  return d;
}

Formula parse(const std::string& text) { return syntax::parse_formula(text, decls()); }

const char* const kBarcan = "(forall (x: indiv). box P x) -> box (forall (x: indiv). P x)";
const char* const kConverseBarcan = "box (forall (x: indiv). P x) -> (forall (x: indiv). box P x)";

// Countermodel existence by brute force over every model up to the bounds,
// evaluated with the kripke oracle only.
bool brute_force_countermodel(const std::vector<Formula>& premises, const Formula& conj,
                              const LogicPreset& preset, const syntax::Declarations& d,
                              int max_worlds, int max_indiv) {
  std::vector<std::pair<std::string, Sort>> used;
  std::vector<std::string> names;
  for (const auto& f : premises)
    for (const auto& c : syntax::constants_of(f)) names.push_back(c);
  for (const auto& c : syntax::constants_of(conj)) names.push_back(c);
  for (const auto& [name, sort] : d.constants)
    if (std::find(names.begin(), names.end(), name) != names.end()) used.emplace_back(name, sort);
  const std::string idx = preset.indices.front();
  for (int w = 1; w <= max_worlds; ++w) {
    for (int c = 1; c <= max_indiv; ++c) {
      KripkeModel m = KripkeModel::empty(w, c, preset.indices);
      uint64_t doms = preset.varying() ? 1ull << (c * w) : 1;
      for (uint64_t rel = 0; rel < (1ull << (w * w)); ++rel) {
        for (int a = 0; a < w; ++a) m.access[idx][a] = (rel >> (a * w)) & m.all_worlds();
        if (!kripke::check_frame(m, preset)) continue;
        for (uint64_t dm = 0; dm < doms; ++dm) {
          if (preset.varying())
            for (int a = 0; a < w; ++a) m.domain[a] = (dm >> (a * c)) & m.full_domain();
          std::vector<uint64_t> sizes;
          uint64_t total = 1;
          for (const auto& u : used) {
            sizes.push_back(kripke::sort_size(u.second, w, c));
            total *= sizes.back();
          }
          for (uint64_t k = 0; k < total; ++k) {
            uint64_t rest = k;
            for (size_t j = 0; j < used.size(); ++j) {
              m.set(used[j].first, used[j].second, rest % sizes[j]);
              rest /= sizes[j];
            }
            for (int at = 0; at < w; ++at) {
              m.actual = at;
              bool ok = true;
              for (const auto& p : premises) ok = ok && kripke::valid_in_model(m, p, preset);
              if (ok && !kripke::eval(m, conj, at)) return true;
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("countermodel examples") {
  syntax::Declarations d = decls();
  search::Bounds b;

  auto cm = search::find_countermodel({}, parse("box p -> p"), LogicPreset::named("K"), d, b);
  REQUIRE(cm);
  CHECK(cm->model.worlds == 1);
  CHECK_FALSE(cm->model.edge("", 0, 0));
  CHECK(cm->world == 0);

  CHECK_FALSE(search::find_countermodel({}, parse("box p -> p"), LogicPreset::named("KT"), d, b));

  LogicPreset varying = LogicPreset::named("K", DomainCondition::Varying);
  cm = search::find_countermodel({}, parse(kBarcan), varying, d, b);
  REQUIRE(cm);
  CHECK(search::reverify(*cm, {}, parse(kBarcan), varying));
  // First model in enumeration order: the domain grows along the only edge
  // and the new individual lacks P.
  CHECK(kripke::to_text(cm->model) ==
        "worlds 2\ncarrier 1\nactual 0\naccess: 0->1\ndomain 0:\n"
        "val p : o = {}\nval q : o = {}\nval P : indiv -> o = [{}]\nval c : indiv = 0\n");
  CHECK(cm->world == 0);

  // The two-individual growing-domain shape is also a countermodel.
  KripkeModel grow = kripke::parse_model(
      "worlds 2\ncarrier 2\naccess: 0->1\ndomain 0: 0\ndomain 1: 0 1\n"
      "val P : indiv -> o = [{1}, {}]\n");
  CHECK(search::reverify({grow, 0}, {}, parse(kBarcan), varying));
  CHECK_FALSE(search::reverify({grow, 1}, {}, parse(kBarcan), varying));
}

TEST_CASE("decide_bounded examples") {
  syntax::Declarations d = decls();
  search::Bounds b;

  search::Verdict five = search::decide_bounded({}, parse("dia p -> box dia p"),
                                                LogicPreset::named("S5universal"), d, b);
  CHECK(five.kind == search::Verdict::Kind::ValidCertified);
  CHECK(search::s5_small_model_bound({}, parse("dia p -> box dia p")) == 3);

  // The small-model bound must be reached for certification.
  search::Bounds two = b;
  two.max_worlds = 2;
  CHECK(search::decide_bounded({}, parse("dia p -> box dia p"), LogicPreset::named("S5universal"),
                               d, two)
            .kind == search::Verdict::Kind::ValidUpTo);

  search::Verdict four =
      search::decide_bounded({}, parse("box p -> box box p"), LogicPreset::named("KT"), d, b);
  REQUIRE(four.kind == search::Verdict::Kind::Countermodel);
  const KripkeModel& m = four.countermodel->model;
  CHECK(m.worlds == 3);
  CHECK(kripke::check_frame(m, LogicPreset::named("KT")));
  CHECK_FALSE(kripke::relation_has(m.access.at(""), 3, embedding::kTransitive));

  search::Verdict inc = search::decide_bounded({parse("p"), parse("not p")}, Formula::bottom(),
                                               LogicPreset::named("K"), d, b);
  CHECK(inc.kind == search::Verdict::Kind::ValidUpTo);
  CHECK(inc.premises_unsatisfiable);
  CHECK(inc.reason.find("unsatisfiable") != std::string::npos);

  search::Verdict sat = search::decide_bounded({parse("p")}, parse("p"), LogicPreset::named("K"), d, b);
  CHECK(sat.kind == search::Verdict::Kind::ValidUpTo);
  CHECK_FALSE(sat.premises_unsatisfiable);

  CHECK(search::kind_name(search::Verdict::Kind::Unknown) == "Unknown");
}

TEST_CASE("Barcan pair under both domain conditions") {
  syntax::Declarations d = decls();
  search::Bounds small;
  small.max_worlds = 3;
  small.max_indiv = 2;
  for (const char* f : {kBarcan, kConverseBarcan}) {
    CHECK(search::decide_bounded({}, parse(f), LogicPreset::named("K"), d, small).kind ==
          search::Verdict::Kind::ValidUpTo);
    search::Verdict v =
        search::decide_bounded({}, parse(f), LogicPreset::named("K", DomainCondition::Varying), d, small);
    REQUIRE(v.kind == search::Verdict::Kind::Countermodel);
    CHECK(v.countermodel->model.worlds <= 2);
  }
}

TEST_CASE("cap and errors") {
  syntax::Declarations d = decls();
  search::Bounds tiny;
  tiny.max_models = 5;
  Formula t = parse("box p -> box box p");
  CHECK(code_of([&] { search::find_countermodel({}, t, LogicPreset::named("S4"), d, tiny); }) ==
        ErrorCode::BoundsExceeded);
  search::Verdict v = search::decide_bounded({}, t, LogicPreset::named("S4"), d, tiny);
  CHECK(v.kind == search::Verdict::Kind::Unknown);

  search::Bounds zero;
  zero.max_worlds = 0;
  CHECK(code_of([&] { search::find_countermodel({}, t, LogicPreset::named("K"), d, zero); }) ==
        ErrorCode::BoundsTooLarge);
  Formula unknown = Formula::atom("nope");
  CHECK(code_of([&] {
          search::find_countermodel({}, unknown, LogicPreset::named("K"), d, search::Bounds{});
        }) == ErrorCode::UnknownSymbol);
}

TEST_CASE("multi-modal and common knowledge") {
  syntax::Declarations d;
  d.indices = {"a", "b"};
  d.declare_constant("p", Sort::prop());
  LogicPreset s5 = LogicPreset::named("S5equiv");
  s5.indices = d.indices;
  auto f = [&](const char* text) { return syntax::parse_formula(text, d); };
  search::Bounds b;
  b.max_worlds = 3;
  CHECK_FALSE(search::find_countermodel({}, f("C{a,b} p -> [a] p"), s5, d, b));
  auto cm = search::find_countermodel({}, f("[a] p -> C{a,b} p"), s5, d, b);
  REQUIRE(cm);
  CHECK(search::reverify(*cm, {}, f("[a] p -> C{a,b} p"), s5));
  // An index that occurs nowhere keeps the least relation of its frame.
  auto only_a = search::find_countermodel({}, f("[a] p -> [a] [a] p"), s5, d, b);
  CHECK_FALSE(only_a);
  LogicPreset kt = LogicPreset::named("KT");
  kt.indices = d.indices;
  only_a = search::find_countermodel({}, f("[a] p -> [a] [a] p"), kt, d, b);
  REQUIRE(only_a);
  CHECK(only_a->model.access.at("b") == std::vector<kripke::WorldSet>{1, 2, 4});
}

TEST_CASE("search agrees with brute force") {
  syntax::Declarations d = decls();
  testing::AstGenOptions opt;
  opt.max_depth = 3;
  opt.free_logic = true;
  testing::FormulaGen gen(11, d, opt);
  std::mt19937 rng(5);
  const char* const frames[] = {"K", "KT", "KB", "S4", "S5equiv", "S5universal"};
  search::Bounds b;
  b.max_worlds = 2;
  b.max_indiv = 2;
  for (int n = 0; n < 240; ++n) {
    LogicPreset preset = LogicPreset::named(frames[n % 6], n % 4 < 2 ? DomainCondition::Constant
                                                                      : DomainCondition::Varying);
    if (n % 5 == 0) preset.actual_world = "w0";
    std::vector<Formula> premises;
    if (rng() % 3 == 0) premises.push_back(gen.formula(2));
    Formula conj = gen.formula(3);
    auto cm = search::find_countermodel(premises, conj, preset, d, b);
    bool expected = brute_force_countermodel(premises, conj, preset, d, 2, 2);
    INFO(syntax::print_formula(conj), " under ", embedding::to_string(preset));
    REQUIRE(cm.has_value() == expected);
    if (cm) REQUIRE(search::reverify(*cm, premises, conj, preset));
  }
}

TEST_CASE("determinism and symmetry breaking") {
  syntax::Declarations d = testing::propositional_decls();
  testing::AstGenOptions opt;
  opt.quantifiers = false;
  testing::FormulaGen gen(23, d, opt);
  search::Bounds plain;
  plain.max_worlds = 3;
  search::Bounds sym = plain;
  sym.symmetry_breaking = true;
  for (const char* frame : {"K", "KT", "S4", "KB"}) {
    LogicPreset preset = LogicPreset::named(frame);
    for (int n = 0; n < 60; ++n) {
      Formula f = gen.formula();
      search::Verdict a = search::decide_bounded({}, f, preset, d, plain);
      search::Verdict again = search::decide_bounded({}, f, preset, d, plain);
      search::Verdict s = search::decide_bounded({}, f, preset, d, sym);
      CHECK(a.kind == again.kind);
      if (a.countermodel) {
        CHECK(a.countermodel->model == again.countermodel->model);
        CHECK(a.countermodel->world == again.countermodel->world);
      }
      CHECK(a.kind == s.kind);
      if (s.countermodel) CHECK(search::reverify(*s.countermodel, {}, f, preset));
    }
  }
}

TEST_CASE("models of premises") {
  syntax::Declarations d = decls();
  search::Bounds b;
  b.max_worlds = 2;
  int count = 0;
  search::for_each_model({parse("p")}, LogicPreset::named("S5universal"), d, b,
                         [&](const KripkeModel& m) {
                           CHECK(kripke::valid_in_model(m, parse("p"), LogicPreset::named("S5universal")));
                           ++count;
                           return true;
                         });
  // p holds everywhere: exactly one valuation per world count.
  CHECK(count == 2);

  LogicPreset actual = LogicPreset::named("S5universal");
  actual.actual_world = "w0";
  count = 0;
  search::for_each_model({parse("p")}, actual, d, b, [&](const KripkeModel& m) {
    CHECK(kripke::eval(m, parse("p"), m.actual));
    ++count;
    return true;
  });
  // Pointed models: 1 + (2 valuations with one p-world + 2 pointings of {0 1}).
  CHECK(count == 5);
}

TEST_CASE("consequence evidence") {
  syntax::Declarations d = decls();
  d.declare_constant("phi", Sort::prop());
  search::Bounds b;
  b.max_worlds = 3;
  LogicPreset s5 = LogicPreset::named("S5universal");
  syntax::Declarations axioms_decls = decls();

  search::EvidenceReport trivial = search::check_consequence_evidence(
      {}, syntax::parse_formula("phi -> phi", d), "phi", s5, axioms_decls, b);
  CHECK(trivial.all_hold);
  CHECK(trivial.models == 3);
  CHECK(trivial.instances == 2 + 4 + 8);
  CHECK(trivial.to_text().rfind("bounded evidence", 0) == 0);

  search::EvidenceReport collapse = search::check_consequence_evidence(
      {}, syntax::parse_formula("phi -> box phi", d), "phi", s5, axioms_decls, b);
  CHECK_FALSE(collapse.all_hold);
  REQUIRE(collapse.failure);
  CHECK(collapse.failure->worlds == 2);
  CHECK(collapse.collapsed_models == 1);

  // Under box (p <-> q), p and q agree everywhere.
  search::EvidenceReport agree = search::check_consequence_evidence(
      {parse("box (p <-> q)")}, syntax::parse_formula("(phi & p) -> q", d), "phi", s5,
      axioms_decls, b);
  CHECK(agree.all_hold);
  CHECK(agree.models == 2 + 4 + 8);
}
