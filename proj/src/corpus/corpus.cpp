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

#include "modalhol/corpus.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "modalhol/embedding.hpp"
#include "modalhol/kripke.hpp"
#include "modalhol/search.hpp"
#include "modalhol/tableau.hpp"

namespace modalhol::corpus {

namespace fs = std::filesystem;
using syntax::Formula;
using syntax::ProblemFile;

namespace {

struct CommandSpec {
  std::set<std::string> options;
  std::set<std::string> verdicts;
};

const std::map<std::string, CommandSpec>& commands() {
  static const std::map<std::string, CommandSpec> table = {
      {"check",
       {{"logic", "domain", "worlds", "indiv", "cap", "max-cm-worlds", "model"},
        {"ValidUpTo", "ValidCertified", "Countermodel", "Unknown"}}},
      {"prove", {{"logic"}, {"Proved", "Refuted", "GaveUp"}}},
      {"entails", {{"logic", "model", "at"}, {"holds", "fails"}}},
      {"evidence", {{"logic", "domain", "worlds", "indiv", "cap", "collapse"}, {"all-hold", "fails"}}},
  };
  return table;
}

const std::set<std::string> kSources = {"literature", "derived", "trivial", "external"};
const std::set<std::string> kNumeric = {"worlds", "indiv", "cap", "max-cm-worlds", "at"};

[[noreturn]] void bad(int line, const std::string& msg) {
  throw Error(ErrorCode::BadExpectation, "line " + std::to_string(line) + ": " + msg);
}

uint64_t number(const Expectation& e, const std::string& key, uint64_t fallback) {
  auto it = e.options.find(key);
  return it == e.options.end() ? fallback : std::stoull(it->second);
}

embedding::LogicPreset preset_for(const ProblemFile& p, const Expectation& e) {
  syntax::LogicDecl decl = p.logic;
  if (auto it = e.options.find("logic"); it != e.options.end()) {
    decl.frame = it->second == "S5universal" ? "S5" : it->second;
    decl.flags.clear();
  }
  if (auto it = e.options.find("domain"); it != e.options.end()) decl.domain = it->second;
  return embedding::preset_from(decl, p.decls);
}

search::Bounds bounds_for(const Expectation& e) {
  search::Bounds b;
  b.max_worlds = static_cast<int>(number(e, "worlds", b.max_worlds));
  b.max_indiv = static_cast<int>(number(e, "indiv", b.max_indiv));
  b.max_models = number(e, "cap", b.max_models);
  return b;
}

std::vector<Formula> axioms_of(const ProblemFile& p) {
  std::vector<Formula> out;
  for (const auto& a : p.axioms) out.push_back(a.formula);
  return out;
}

const Formula& conjecture(const ProblemFile& p, const std::string& name) {
  const syntax::NamedFormula* f = p.find(name);
  if (!f) throw Error(ErrorCode::UnknownSymbol, "no conjecture named " + name);
  return f->formula;
}

void run_check(const ProblemFile& p, const Expectation& e, const std::string& dir, Outcome& out) {
  embedding::LogicPreset preset = preset_for(p, e);
  search::Bounds b = bounds_for(e);
  std::vector<Formula> premises = axioms_of(p);
  const Formula& conj = conjecture(p, e.target);
  out.bounds = search::to_string(b);
  search::Verdict v = search::decide_bounded(premises, conj, preset, p.decls, b);
  out.actual = search::kind_name(v.kind);
  out.detail = v.reason;
  if (!v.countermodel) return;

  const search::Countermodel& cm = *v.countermodel;
  if (!search::reverify(cm, premises, conj, preset)) {
    out.actual = "Countermodel(unverified)";
    return;
  }
  if (e.options.count("max-cm-worlds") &&
      cm.model.worlds > static_cast<int>(number(e, "max-cm-worlds", 0))) {
    out.actual = "Countermodel(" + std::to_string(cm.model.worlds) + " worlds)";
    return;
  }
  if (auto it = e.options.find("model"); it != e.options.end()) {
    kripke::KripkeModel stored = kripke::load_model((fs::path(dir) / it->second).string());
    bool verifies = kripke::check_frame(stored, preset) &&
                    !kripke::valid_in_model(stored, conj, preset) &&
                    std::all_of(premises.begin(), premises.end(), [&](const Formula& f) {
                      return kripke::valid_in_model(stored, f, preset);
                    });
    if (!verifies) {
      out.actual = "Countermodel(stored model does not verify)";
    } else if (!(stored == cm.model)) {
      out.actual = "Countermodel(differs from stored model)";
    }
  }
}

void run_prove(const ProblemFile& p, const Expectation& e, Outcome& out) {
  if (!p.axioms.empty())
    throw Error(ErrorCode::BadExpectation, "prove takes problems without axioms");
  embedding::LogicPreset preset = preset_for(p, e);
  const Formula& conj = conjecture(p, e.target);
  out.bounds = "tableau";
  tableau::ProofResult r = tableau::prove(conj, preset);
  out.actual = tableau::kind_name(r.kind);
  out.detail = std::to_string(r.trace.nodes.size()) + " nodes";
  if (r.kind == tableau::ProofResult::Kind::Proved) {
    tableau::replay(r.trace);
  } else if (r.kind == tableau::ProofResult::Kind::Refuted) {
    if (!kripke::check_frame(*r.model, preset) || kripke::eval(*r.model, conj, 0))
      out.actual = "Refuted(unverified)";
  }
}

// Premises are announcements: each one in turn removes the worlds where it
// is false. The conjecture is then read at the chosen world.
void run_entails(const ProblemFile& p, const Expectation& e, const std::string& dir,
                 Outcome& out) {
  auto it = e.options.find("model");
  if (it == e.options.end()) throw Error(ErrorCode::BadExpectation, "entails needs model=");
  embedding::LogicPreset preset = preset_for(p, e);
  kripke::KripkeModel m = kripke::load_model((fs::path(dir) / it->second).string());
  out.bounds = "model";
  if (!kripke::check_frame(m, preset)) {
    out.actual = "bad-frame";
    return;
  }
  int at = static_cast<int>(number(e, "at", static_cast<uint64_t>(m.actual)));
  if (at < 0 || at >= m.worlds) throw Error(ErrorCode::BadExpectation, "at= outside the model");
  for (const auto& a : p.axioms) {
    kripke::WorldSet keep = kripke::extension(m, a.formula);
    if (!((keep >> at) & 1)) {
      out.actual = "eliminated";
      out.detail = "world removed by " + a.name;
      return;
    }
    at = std::popcount(keep & ((kripke::WorldSet{1} << at) - 1));
    m = kripke::restrict_to(m, keep);
  }
  out.actual = kripke::eval(m, conjecture(p, e.target), at) ? "holds" : "fails";
  out.detail = std::to_string(m.worlds) + " worlds remain";
}

void run_evidence(const ProblemFile& p, const Expectation& e, Outcome& out) {
  const syntax::Schema* s = p.find_schema(e.target);
  if (!s) throw Error(ErrorCode::UnknownSymbol, "no schema named " + e.target);
  search::Bounds b = bounds_for(e);
  out.bounds = search::to_string(b);
  search::EvidenceReport r = search::check_consequence_evidence(
      axioms_of(p), s->formula, s->hole, preset_for(p, e), p.decls, b);
  std::string text = r.to_text();
  out.detail = text.substr(0, text.find('\n'));
  if (r.capped) {
    out.actual = "capped";
  } else if (!r.all_hold) {
    out.actual = "fails";
  } else if (e.options.count("collapse") && r.collapsed_models != r.models) {
    out.actual = "all-hold(not collapsed)";
  } else {
    out.actual = "all-hold";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::vector<Expectation> parse_expectations(const std::string& text) {
  std::vector<Expectation> out;
  std::istringstream in(text);
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    raw = raw.substr(0, raw.find('#'));
    std::istringstream words(raw);
    Expectation e;
    e.line = line;
    if (!(words >> e.command)) continue;
    auto spec = commands().find(e.command);
    if (spec == commands().end()) bad(line, "unknown command " + e.command);
    if (!(words >> e.target) || e.target.find('=') != std::string::npos)
      bad(line, "missing target");
    for (std::string w; words >> w;) {
      size_t eq = w.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == w.size()) bad(line, "expected key=value: " + w);
      std::string key = w.substr(0, eq), value = w.substr(eq + 1);
      if (key == "expect") {
        if (!e.expected.empty()) bad(line, "repeated expect");
        if (!spec->second.verdicts.count(value)) bad(line, "unknown verdict " + value);
        e.expected = value;
      } else if (key == "source") {
        if (!e.source.empty()) bad(line, "repeated source");
        if (!kSources.count(value)) bad(line, "unknown source " + value);
        e.source = value;
      } else {
        if (!spec->second.options.count(key)) bad(line, "option " + key + " not valid for " + e.command);
        if (kNumeric.count(key) && !std::all_of(value.begin(), value.end(), ::isdigit))
          bad(line, key + " needs a number");
        if (!e.options.emplace(key, value).second) bad(line, "repeated " + key);
      }
    }
    if (e.expected.empty()) bad(line, "missing expect=");
    if (e.source.empty()) bad(line, "missing source=");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> discover(const std::string& root, const std::string& filter) {
  if (!fs::is_directory(root)) throw Error(ErrorCode::MissingFile, root);
  std::vector<CorpusEntry> out;
  for (const auto& f : fs::recursive_directory_iterator(root)) {
    if (!f.is_regular_file() || f.path().extension() != ".lgp") continue;
    CorpusEntry e;
    e.topic = f.path().parent_path().filename().string();
    e.name = f.path().stem().string();
    e.problem_path = f.path().string();
    e.expect_path = fs::path(f.path()).replace_extension(".expect").string();
    if (e.id().find(filter) == std::string::npos) continue;
    if (!fs::exists(e.expect_path)) throw Error(ErrorCode::MissingFile, e.expect_path);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.id() < b.id(); });
  return out;
}

std::string Outcome::summary(bool timings) const {
  std::ostringstream s;
  s << entry << ':' << expectation.target;
  char sep = '@';
  for (const char* key : {"logic", "domain"}) {
    if (auto it = expectation.options.find(key); it != expectation.options.end()) {
      s << sep << it->second;
      sep = ',';
    }
  }
  s << '\t' << actual << '\t' << bounds << '\t';
  if (timings) {
    s << static_cast<long long>(millis);
  } else {
    s << '-';
  }
  s << '\t' << (pass ? "pass" : "FAIL");
  return s.str();
}

Outcome run_expectation(const ProblemFile& problem, const Expectation& e, const std::string& dir) {
  Outcome out;
  out.expectation = e;
  auto start = std::chrono::steady_clock::now();
  try {
    if (e.command == "check") run_check(problem, e, dir, out);
    else if (e.command == "prove") run_prove(problem, e, out);
    else if (e.command == "entails") run_entails(problem, e, dir, out);
    else if (e.command == "evidence") run_evidence(problem, e, out);
    else throw Error(ErrorCode::BadExpectation, "unknown command " + e.command);
  } catch (const std::exception& ex) {
    out.actual = "error";
    out.detail = ex.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.pass = out.actual == e.expected;
  return out;
}

size_t Report::failures() const {
  return static_cast<size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return !o.pass; }));
}

Report run_entry(const CorpusEntry& entry) {
  Report r;
  std::vector<Expectation> expectations;
  ProblemFile problem;
  try {
    expectations = parse_expectations(read_file(entry.expect_path));
    problem = syntax::load_problem(entry.problem_path);
    embedding::resolve_subsumptions(problem);
  } catch (const std::exception& ex) {
    Outcome o;
    o.entry = entry.id();
    o.expectation.target = "-";
    o.actual = "error";
    o.bounds = "-";
    o.detail = ex.what();
    r.outcomes.push_back(o);
    return r;
  }
  std::string dir = fs::path(entry.problem_path).parent_path().string();
  for (const auto& e : expectations) {
    r.outcomes.push_back(run_expectation(problem, e, dir));
    r.outcomes.back().entry = entry.id();
  }
  return r;
}

Report run_corpus(const std::string& root, const std::string& filter) {
  Report all;
  for (const auto& entry : discover(root, filter)) {
    Report r = run_entry(entry);
    all.outcomes.insert(all.outcomes.end(), r.outcomes.begin(), r.outcomes.end());
  }
  return all;
}

}  // namespace modalhol::corpus
