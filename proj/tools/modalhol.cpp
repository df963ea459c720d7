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

// modalhol: command-line front end.
//
// Exit codes: 0 success, 1 a conjecture was refuted (or a corpus entry
// failed), 2 usage or input error, 3 undecided (search cap or tableau node
// cap reached).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modalhol/corpus.hpp"
#include "modalhol/embedding.hpp"
#include "modalhol/kernel.hpp"
#include "modalhol/kripke.hpp"
#include "modalhol/search.hpp"
#include "modalhol/syntax.hpp"
#include "modalhol/tableau.hpp"

#ifndef MODALHOL_CORPUS_DIR
#define MODALHOL_CORPUS_DIR "corpus"
#endif

using namespace modalhol;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kUsage = 2, kUndecided = 3 };

struct Common {
  std::string file;
  std::vector<std::string> names;
  std::string logic;
  std::string domain;
  bool timings = false;
};

struct SearchFlags {
  int max_worlds = 4;
  int max_indiv = 3;
  uint64_t cap = search::Bounds{}.max_models;
  bool symmetry = false;
  std::string dot;

  search::Bounds bounds() const {
    search::Bounds b;
    b.max_worlds = max_worlds;
    b.max_indiv = max_indiv;
    b.max_models = cap;
    b.symmetry_breaking = symmetry;
    return b;
  }
};

class Timer {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

syntax::ProblemFile load(const Common& c) {
  syntax::ProblemFile p = syntax::load_problem(c.file);
  embedding::resolve_subsumptions(p);
  if (!c.logic.empty()) {
    p.logic.frame = c.logic == "S5universal" ? "S5" : c.logic;
    p.logic.flags.clear();
  }
  if (!c.domain.empty()) p.logic.domain = c.domain;
  return p;
}

embedding::LogicPreset preset_of(const syntax::ProblemFile& p) {
  return embedding::preset_from(p.logic, p.decls);
}

std::vector<const syntax::NamedFormula*> selected(const syntax::ProblemFile& p, const Common& c) {
  std::vector<const syntax::NamedFormula*> out;
  if (c.names.empty()) {
    for (const auto& f : p.conjectures) out.push_back(&f);
    return out;
  }
  for (const auto& n : c.names) {
    const syntax::NamedFormula* f = p.find(n);
    if (!f) throw Error(ErrorCode::UnknownSymbol, c.file + ": no formula named " + n);
    out.push_back(f);
  }
  return out;
}

std::vector<syntax::Formula> axioms_of(const syntax::ProblemFile& p) {
  std::vector<syntax::Formula> out;
  for (const auto& a : p.axioms) out.push_back(a.formula);
  return out;
}

void summary(const Common& c, const std::string& name, const std::string& verdict,
             const std::string& bounds, const Timer& t) {
  std::cout << name << '\t' << verdict << '\t' << bounds << "\t-\n";
  if (c.timings) std::cerr << name << '\t' << t.ms() << " ms\n";
}

void indented(const std::string& text) {
  std::string line;
  for (char ch : text) {
    if (ch == '\n') {
      std::cout << "  " << line << '\n';
      line.clear();
    } else {
      line += ch;
    }
  }
  if (!line.empty()) std::cout << "  " << line << '\n';
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MissingFile, "cannot write " + path);
  out << text;
}

int run_embed(const Common& c, bool grounded) {
  syntax::ProblemFile p = load(c);
  embedding::LogicPreset preset = preset_of(p);
  kernel::Signature sig = embedding::embedding_signature(p.decls, preset);
  for (const auto* f : selected(p, c)) {
    kernel::HolTerm t = embedding::embed_unfolded(f->formula, preset, sig);
    if (grounded) t = embedding::ground(t, preset);
    std::cout << f->name << '\t' << kernel::to_string(t) << '\n';
  }
  return kOk;
}

int run_check(const Common& c, const SearchFlags& s) {
  syntax::ProblemFile p = load(c);
  embedding::LogicPreset preset = preset_of(p);
  std::vector<syntax::Formula> premises = axioms_of(p);
  search::Bounds b = s.bounds();
  int status = kOk;
  bool dot_written = false;
  for (const auto* f : selected(p, c)) {
    Timer t;
    search::Verdict v = search::decide_bounded(premises, f->formula, preset, p.decls, b);
    summary(c, f->name, search::kind_name(v.kind), search::to_string(b), t);
    if (v.countermodel) {
      std::cout << "  at world " << v.countermodel->world << '\n';
      indented(kripke::to_text(v.countermodel->model));
      if (!s.dot.empty() && !dot_written) {
        write_file(s.dot, kripke::to_dot(v.countermodel->model));
        dot_written = true;
      }
      status = kRefuted;
    } else if (v.kind == search::Verdict::Kind::Unknown && status == kOk) {
      status = kUndecided;
    }
    if (v.premises_unsatisfiable) std::cout << "  premises unsatisfiable within bounds\n";
  }
  return status;
}

int run_prove(const Common& c, const std::string& trace_path, const std::string& dot,
              size_t node_cap) {
  syntax::ProblemFile p = load(c);
  if (!p.axioms.empty())
    throw Error(ErrorCode::UnsupportedFragment, c.file + ": the tableau takes no axioms");
  embedding::LogicPreset preset = preset_of(p);
  tableau::Options opt;
  opt.node_cap = node_cap;
  int status = kOk;
  std::string traces;
  bool dot_written = false;
  for (const auto* f : selected(p, c)) {
    Timer t;
    tableau::ProofResult r = tableau::prove(f->formula, preset, opt);
    summary(c, f->name, tableau::kind_name(r.kind), "tableau", t);
    traces += "# " + f->name + "\n" + tableau::to_text(r.trace);
    if (r.model) {
      indented(kripke::to_text(*r.model));
      if (!dot.empty() && !dot_written) {
        write_file(dot, kripke::to_dot(*r.model));
        dot_written = true;
      }
    }
    if (r.kind == tableau::ProofResult::Kind::Refuted) status = kRefuted;
    if (r.kind == tableau::ProofResult::Kind::GaveUp && status == kOk) status = kUndecided;
  }
  if (!trace_path.empty()) write_file(trace_path, traces);
  return status;
}

int run_models(const Common& c, const SearchFlags& s, uint64_t limit) {
  syntax::ProblemFile p = load(c);
  embedding::LogicPreset preset = preset_of(p);
  search::Bounds b = s.bounds();
  Timer t;
  uint64_t count = 0;
  search::for_each_model(axioms_of(p), preset, p.decls, b, [&](const kripke::KripkeModel& m) {
    if (count < limit) {
      std::cout << "model " << count << '\n';
      indented(kripke::to_text(m));
    }
    if (count == 0 && !s.dot.empty()) write_file(s.dot, kripke::to_dot(m));
    ++count;
    return true;
  });
  summary(c, "models", std::to_string(count), search::to_string(b), t);
  return kOk;
}

int run_corpus(const Common& c, const std::string& root, const std::string& filter) {
  int status = kOk;
  for (const auto& entry : corpus::discover(root, filter)) {
    corpus::Report r = corpus::run_entry(entry);
    for (const auto& o : r.outcomes) {
      std::cout << o.summary(false) << '\n';
      if (c.timings) std::cerr << o.entry << ':' << o.expectation.target << '\t'
                               << static_cast<long long>(o.millis) << " ms\n";
      if (!o.pass) {
        std::cout << "  line " << o.expectation.line << ": expected " << o.expectation.expected;
        if (!o.detail.empty()) std::cout << "; " << o.detail;
        std::cout << '\n';
        status = kRefuted;
      }
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order modal logic toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--timings", common.timings, "Report wall-clock time per item on stderr");

  auto add_file = [&](CLI::App* sub, bool names) {
    sub->add_option("file", common.file, "Problem file")->required()->check(CLI::ExistingFile);
    if (names) sub->add_option("names", common.names, "Formulas to process (default: all conjectures)");
    sub->add_option("--logic", common.logic, "Override the frame of the logic line");
    sub->add_option("--domain", common.domain, "Override the domain condition")
        ->check(CLI::IsMember({"constant", "varying"}));
  };
  SearchFlags flags;
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-worlds", flags.max_worlds, "Largest world count")->check(CLI::Range(1, 8));
    sub->add_option("--max-indiv", flags.max_indiv, "Largest carrier")->check(CLI::Range(1, 16));
    sub->add_option("--cap", flags.cap, "Search node cap")->check(CLI::PositiveNumber);
    sub->add_flag("--symmetry", flags.symmetry, "Skip structures equal up to world renaming");
    sub->add_option("--dot", flags.dot, "Write the first model as Graphviz");
  };

  CLI::App* embed = app.add_subcommand("embed", "Print the unfolded HOL term of formulas");
  add_file(embed, true);
  bool grounded = false;
  embed->add_flag("--ground", grounded, "Ground the world predicate");

  CLI::App* check = app.add_subcommand("check", "Bounded validity check with countermodels");
  add_file(check, true);
  add_bounds(check);

  CLI::App* prove = app.add_subcommand("prove", "Prefixed tableau for propositional modal logic");
  add_file(prove, true);
  std::string trace, prove_dot;
  size_t node_cap = tableau::Options{}.node_cap;
  prove->add_option("--trace", trace, "Write the rule trace");
  prove->add_option("--dot", prove_dot, "Write the first extracted model as Graphviz");
  prove->add_option("--node-cap", node_cap, "Give up after this many nodes")->check(CLI::PositiveNumber);

  CLI::App* models = app.add_subcommand("models", "Enumerate models of the axioms");
  add_file(models, false);
  add_bounds(models);
  uint64_t limit = 10;
  models->add_option("--limit", limit, "Models printed (all are counted)");

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Run the corpus against its expectations");
  std::string root = MODALHOL_CORPUS_DIR, filter;
  corpus_cmd->add_option("filter", filter, "Substring of topic/name");
  corpus_cmd->add_option("--root", root, "Corpus directory");

  CLI::App* print = app.add_subcommand("print", "Print a problem file in canonical form");
  add_file(print, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*embed) return run_embed(common, grounded);
    if (*check) return run_check(common, flags);
    if (*prove) return run_prove(common, trace, prove_dot, node_cap);
    if (*models) return run_models(common, flags, limit);
    if (*corpus_cmd) return run_corpus(common, root, filter);
    if (*print) {
      std::cout << syntax::print_problem(load(common));
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
