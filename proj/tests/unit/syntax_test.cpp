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
#include "modalhol/syntax.hpp"
#include "../support/ast_gen.hpp"

using namespace modalhol;
using namespace modalhol::syntax;

namespace {

Declarations abc() {
  Declarations d = testing::standard_decls({"a", "b", "c"}, false);
  return d;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidStep;
}

}  // namespace

TEST_CASE("parse_formula examples") {
  Declarations d = testing::standard_decls();
  Formula p = Formula::atom("p");
  CHECK(parse_formula("box p -> p", d) == Formula::implies(Formula::box(kDefaultIndex, p), p));
  CHECK(parse_formula("forall (x: indiv). box (P x)", d) ==
        Formula::forall("x", Sort::indiv(),
                        Formula::box(kDefaultIndex, Formula::atom("P", {Term::var("x")}, false))));
  Declarations m;
  m.indices = {"a", "b", "c"};
  m.declare_constant("p", Sort::prop());
  m.declare_constant("q", Sort::prop());
  CHECK(parse_formula("[a](p & q)", m) ==
        Formula::box("a", Formula::conj(p, Formula::atom("q"))));
  CHECK(parse_formula("K_b p", m) == Formula::box("b", p));
  CHECK(parse_formula("C p", m) == Formula::common_knows({"a", "b", "c"}, p));
  CHECK(parse_formula("C{b,a} p", m) == Formula::common_knows({"a", "b"}, p));
}

TEST_CASE("precedence and associativity") {
  Declarations d = testing::standard_decls();
  Formula p = Formula::atom("p"), q = Formula::atom("q"), s = Formula::atom("s");
  CHECK(parse_formula("p -> q -> s", d) == Formula::implies(p, Formula::implies(q, s)));
  CHECK(parse_formula("p & q | s", d) == Formula::disj(Formula::conj(p, q), s));
  CHECK(parse_formula("p | q & s", d) == Formula::disj(p, Formula::conj(q, s)));
  CHECK(parse_formula("not p & q", d) == Formula::conj(Formula::negation(p), q));
  CHECK(parse_formula("box p & q", d) == Formula::conj(Formula::box(kDefaultIndex, p), q));
  CHECK(parse_formula("p <-> q -> s", d) == Formula::iff(p, Formula::implies(q, s)));
  CHECK(parse_formula("p & q & s", d) == Formula::conj(Formula::conj(p, q), s));
  // Quantifier bodies extend as far right as possible.
  Formula body = Formula::implies(Formula::atom("P", {Term::var("x")}), q);
  CHECK(parse_formula("forall (x: indiv). P x -> q", d) ==
        Formula::forall("x", Sort::indiv(), body));
}

TEST_CASE("print_formula examples") {
  Declarations d = testing::standard_decls();
  CHECK(print_formula(Formula::box(kDefaultIndex, Formula::atom("p"))) == "box p");
  Formula chain = parse_formula("p -> q -> s", d);
  CHECK(print_formula(chain) == "p -> q -> s");
  CHECK(parse_formula(print_formula(chain), d) == chain);
  Formula left = parse_formula("(p -> q) -> s", d);
  CHECK(print_formula(left) == "(p -> q) -> s");
  Formula ff = Formula::free_forall("x", Formula::exists_pred(Term::var("x")));
  CHECK(print_formula(ff) == "all_free x. E x");
  CHECK(parse_formula("all_free x. E x", d) == ff);
  CHECK(print_formula(parse_formula("[a] K_b <c> p", abc())) == "[a] [b] <c> p");
  CHECK(print_formula(parse_formula("C{a,c} p", abc())) == "C{a,c} p");
  CHECK(print_formula(parse_formula("H (\\(y: indiv). P (f y))", d)) ==
        "H (\\(y: indiv). P (f y))");
}

TEST_CASE("parse errors") {
  Declarations d = testing::standard_decls();
  CHECK(code_of([&] { parse_formula("box (p", d); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_formula("zz", d); }) == ErrorCode::UnknownSymbol);
  CHECK(code_of([&] { parse_formula("P", d); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([&] { parse_formula("[a] p", d); }) == ErrorCode::UnknownSymbol);
  CHECK(code_of([&] { parse_formula("P p", d); }) == ErrorCode::SortError);
  CHECK(code_of([&] { parse_formula("box p", abc()); }) == ErrorCode::UnknownSymbol);
  try {
    parse_formula("p &\n  @", d);
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 3);
  }
}

TEST_CASE("nesting is bounded") {
  Declarations d = testing::standard_decls();
  std::string deep(5000, '(');
  CHECK(code_of([&] { parse_formula(deep + "p", d); }) == ErrorCode::SyntaxError);
  std::string nots;
  for (int i = 0; i < 5000; ++i) nots += "not ";
  CHECK(code_of([&] { parse_formula(nots + "p", d); }) == ErrorCode::SyntaxError);
}

TEST_CASE("round trip on random formulas") {
  testing::AstGenOptions opt;
  opt.max_depth = 6;
  opt.higher_order = true;
  opt.free_logic = true;
  opt.common_knowledge = true;
  for (auto indices : {std::vector<std::string>{kDefaultIndex}, std::vector<std::string>{"a", "b"}}) {
    testing::FormulaGen gen(7 + static_cast<uint32_t>(indices.size()),
                            testing::standard_decls(indices), opt);
    for (int n = 0; n < 1500; ++n) {
      Formula f = gen.formula();
      std::string text = print_formula(f);
      INFO(text);
      Formula back = parse_formula(text, gen.decls());
      REQUIRE(back == f);
      CHECK(print_formula(back) == text);
    }
  }
}

TEST_CASE("no crash on arbitrary input") {
  Declarations d = testing::standard_decls({"a", "b"});
  std::mt19937 rng(99);
  const std::string alphabet = "pqrPRcdfx()[]<>{}&|-><->.:\\, notboxdiaforallK_aC E top bot\n#@";
  std::uniform_int_distribution<int> len(0, 40), ch(0, static_cast<int>(alphabet.size()) - 1),
      byte(0, 255);
  for (int n = 0; n < 3000; ++n) {
    std::string text;
    int l = len(rng);
    for (int k = 0; k < l; ++k)
      text += n % 3 == 0 ? static_cast<char>(byte(rng)) : alphabet[ch(rng)];
    try {
      parse_formula(text, d);
    } catch (const Error&) {
    }
  }
}

TEST_CASE("substitution on formulas avoids capture") {
  Formula open = Formula::forall(
      "y", Sort::indiv(), Formula::atom("R", {Term::var("x"), Term::var("y")}));
  Formula s = substitute(open, "x", Term::var("y"));
  CHECK(s.name() != "y");
  CHECK(s.body().args()[0] == Term::var("y"));
}

TEST_CASE("parse_problem") {
  SUBCASE("minimal") {
    ProblemFile p = parse_problem("logic S5\nconst p : o\nconjecture t: box p -> p\n");
    CHECK(p.logic.frame == "S5");
    REQUIRE(p.conjectures.size() == 1);
    CHECK(p.conjectures[0].name == "t");
  }
  SUBCASE("undeclared constant") {
    CHECK(code_of([] { parse_problem("logic K\nconjecture t: p\n"); }) == ErrorCode::UnknownSymbol);
  }
  SUBCASE("missing logic") {
    CHECK(code_of([] { parse_problem("const p : o\nconjecture t: p\n"); }) ==
          ErrorCode::UndeclaredLogic);
    CHECK(code_of([] { parse_problem("logic Q\n"); }) == ErrorCode::UndeclaredLogic);
  }
  SUBCASE("duplicate names") {
    CHECK(code_of([] {
            parse_problem("logic K\nconst p : o\naxiom a: p\nconjecture a: p\n");
          }) == ErrorCode::DuplicateName);
    CHECK(code_of([] { parse_problem("logic K\nconst p : o\nconst p : o\n"); }) ==
          ErrorCode::DuplicateName);
  }
  SUBCASE("continuation lines, comments, defs, schemas") {
    ProblemFile p = parse_problem(
        "# header\n"
        "logic custom(reflexive, transitive) varying actual w0\n"
        "indices a b\n"
        "const P : indiv -> o  # a predicate\n"
        "def both (x: indiv) := K_a P x & K_b P x\n"
        "axiom ax-1.x: forall (x: indiv).\n"
        "    both x\n"
        "schema coll(phi): phi -> [a] phi\n");
    CHECK(p.logic.frame == "custom");
    CHECK(p.logic.flags == std::vector<std::string>{"reflexive", "transitive"});
    CHECK(p.logic.domain == "varying");
    CHECK(p.logic.actual_world == std::optional<std::string>("w0"));
    REQUIRE(p.axioms.size() == 1);
    CHECK(print_formula(p.axioms[0].formula) == "forall (x: indiv). [a] P x & [b] P x");
    REQUIRE(p.schemas.size() == 1);
    CHECK(p.schemas[0].hole == "phi");
    ProblemFile again = parse_problem(print_problem(p));
    CHECK(again.axioms[0].formula == p.axioms[0].formula);
    CHECK(again.schemas[0].formula == p.schemas[0].formula);
  }
  SUBCASE("error position") {
    try {
      parse_problem("logic K\nconst p : o\nconjecture t: p &\n  & p\n");
      FAIL("no error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 4);
      CHECK(e.col() == 3);
    }
  }
  SUBCASE("missing file") {
    CHECK(code_of([] { load_problem("/nonexistent/x.lgp"); }) == ErrorCode::MissingFile);
  }
}
