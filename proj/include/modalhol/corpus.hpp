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

#ifndef MODALHOL_CORPUS_HPP_
#define MODALHOL_CORPUS_HPP_

// Curated problem files with expected verdicts.
//
// A corpus entry is a problem file `<root>/<topic>/<name>.lgp` next to
// `<name>.expect`. Each non-comment line of the expect file is one
// expectation:
//
//   check T logic=K worlds=3 expect=Countermodel max-cm-worlds=3 source=derived
//
// The first word is the command, the second the conjecture or schema it is
// about, and the rest are key=value options. `expect` and `source` are
// required; source records where the expected value comes from (literature,
// derived, trivial or external). See docs/problem-format.md for the
// commands and their options.

#include <map>
#include <string>
#include <vector>

#include "modalhol/syntax.hpp"

namespace modalhol::corpus {

struct Expectation {
  int line = 0;
  std::string command;  // check, prove, entails, evidence
  std::string target;
  std::map<std::string, std::string> options;
  std::string expected;
  std::string source;
};

// Throws BadExpectation for unknown commands, unknown or repeated options,
// missing expect/source and malformed numbers.
std::vector<Expectation> parse_expectations(const std::string& text);

struct CorpusEntry {
  std::string topic;
  std::string name;
  std::string problem_path;
  std::string expect_path;

  std::string id() const { return topic + "/" + name; }
};

// Entries under `root` sorted by id, keeping those whose id contains
// `filter`. Throws MissingFile when the root is absent or a problem file has
// no expect file.
std::vector<CorpusEntry> discover(const std::string& root, const std::string& filter = "");

struct Outcome {
  std::string entry;  // topic/name
  Expectation expectation;
  std::string actual;
  std::string bounds;  // "3w/1i", "tableau" or "model"
  bool pass = false;
  std::string detail;
  double millis = 0;

  // `entry:target[@logic,domain]  verdict  bounds  time_ms  pass|FAIL`,
  // tab separated. The time column is `-` unless timings are requested.
  std::string summary(bool timings = false) const;
};

// Runs one expectation against a parsed problem; `dir` resolves model
// files. Library errors raised while checking become failed outcomes.
Outcome run_expectation(const syntax::ProblemFile& problem, const Expectation& e,
                        const std::string& dir);

struct Report {
  std::vector<Outcome> outcomes;

  size_t failures() const;
  bool ok() const { return failures() == 0; }
};

Report run_entry(const CorpusEntry& entry);
Report run_corpus(const std::string& root, const std::string& filter = "");

}  // namespace modalhol::corpus

#endif  // MODALHOL_CORPUS_HPP_
